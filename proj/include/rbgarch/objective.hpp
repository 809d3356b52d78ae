#pragma once

#include <span>
#include <vector>

#include "rbgarch/types.hpp"

namespace rbgarch {

/// DPD tuning parameter; 0 selects the plain log-likelihood branch.
struct Gamma {
    double value = 0.0;

    Gamma() = default;
    explicit Gamma(double v) : value(v) {
        if (v < 0.0 || !std::isfinite(v)) throw ParameterError("gamma must be finite and >= 0");
    }
    [[nodiscard]] bool is_zero() const noexcept { return value == 0.0; }
};

struct ObjectiveValue {
    double total = 0.0;
    std::vector<double> per_term;
};

struct GradientVector {
    std::vector<double> values;  // ordered (omega, alpha_1..p, beta_1..q)
};

struct LikelihoodSpec {
    enum class Kind { Gaussian, StudentT };
    Kind kind = Kind::Gaussian;
    double nu = 0.0;

    static LikelihoodSpec gaussian() { return {Kind::Gaussian, 0.0}; }
    static LikelihoodSpec student_t(double nu) {
        if (!(nu > 2.0)) throw ParameterError("Student-t likelihood requires nu > 2");
        return {Kind::StudentT, nu};
    }
};

/// Reusable evaluator for one (series, gamma, likelihood) triple.
///
/// The variance recursion and its forward-mode derivative run sequentially;
/// the per-term value/gradient pass is a blocked OpenMP reduction (see
/// reduce.hpp) whose result does not depend on the thread count. Workspace
/// buffers are owned by the evaluator, so samplers and optimizers can call
/// value()/value_and_gradient() in a tight loop without allocation.
///
/// For gamma > 0 the evaluated objective is the shifted DPD criterion
/// (unshifted minus n(1/gamma - 1)), computed per-term through expm1 so that
/// gamma near 0 loses nothing to cancellation. The shift is theta-free:
/// gradients and argmaxes are those of the unshifted objective.
class ObjectiveEvaluator {
public:
    ObjectiveEvaluator(const ReturnSeries& series, Gamma gamma, LikelihoodSpec likelihood);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] Gamma gamma() const noexcept { return gamma_; }
    [[nodiscard]] const LikelihoodSpec& likelihood() const noexcept { return likelihood_; }

    /// Shifted objective (gamma > 0) or log-likelihood (gamma = 0).
    double value(const GarchParams& params);

    /// As value(), also writing the analytic gradient (length order.dim()).
    double value_and_gradient(const GarchParams& params, std::span<double> grad);

    /// Unshifted per-term values q_t (the Eq.-style summands).
    void per_term(const GarchParams& params, std::vector<double>& out);

    /// Per-term gradient rows g_t (n x d, row-major), g_t = dq_t/dv_t * dv_t/dtheta.
    void per_term_gradients(const GarchParams& params, std::vector<double>& out_rows, int& d_out);

    /// theta-free offset between unshifted and shifted criteria: n(1/gamma - 1)
    /// for gamma > 0, zero otherwise.
    [[nodiscard]] double shift_constant() const noexcept;

private:
    void recursion(const GarchParams& params, bool with_derivatives);
    double reduce_terms(const GarchParams& params, bool with_gradient, std::span<double> grad);

    std::vector<double> x_;    // observations
    std::vector<double> xsq_;  // squared observations
    int n_ = 0;
    Gamma gamma_;
    LikelihoodSpec likelihood_;
    double dpd_const_ = 0.0;  // (1+gamma)^{-3/2}
    double t_log_norm_ = 0.0;

    std::vector<double> v_;     // variance path
    std::vector<double> dv_;    // n x d derivative paths, row-major
    std::vector<double> vals_;  // per-term shifted values
    std::vector<double> dqdv_;  // per-term d(value)/d(variance)
};

/// Gaussian conditional log-likelihood (gamma = 0 branch).
ObjectiveValue gaussian_loglik(const GarchParams& params, const ReturnSeries& series);

/// DPD objective; gamma = 0 delegates to gaussian_loglik.
ObjectiveValue dpd_objective(const GarchParams& params, const ReturnSeries& series, Gamma gamma);

/// DPD objective minus n(1/gamma - 1); induces the same posterior.
ObjectiveValue dpd_objective_shifted(const GarchParams& params, const ReturnSeries& series,
                                     Gamma gamma);

/// Log-likelihood under unit-variance standardized Student-t innovations.
ObjectiveValue student_t_loglik(const GarchParams& params, const ReturnSeries& series, double nu);

/// Analytic gradient of the DPD objective (gamma = 0: log-likelihood gradient).
GradientVector dpd_gradient(const GarchParams& params, const ReturnSeries& series, Gamma gamma);

/// Closed-form integral of the (1+gamma) power of the standard normal density.
inline double normal_power_integral(double gamma) {
    return std::pow(2.0 * M_PI, -0.5 * gamma) / std::sqrt(1.0 + gamma);
}

}  // namespace rbgarch
