#pragma once

#include <vector>

#include "rbgarch/types.hpp"

namespace rbgarch {

/// Truncated-normal hyperparameters for omega; (alpha, beta) are uniform on
/// the stationary simplex. Defaults are weakly informative.
struct PriorSpec {
    double mu_w = 1.0;
    double sigma_w = 5.0;

    void validate() const {
        if (!(sigma_w > 0.0)) throw ParameterError("sigma_w must be positive");
    }
};

/// Unnormalized log prior density for order (1,1):
///   -(omega - mu_w)^2 / (2 sigma_w^2) on {omega>0, alpha>=0, beta>=0, alpha+beta<1},
///   -inf outside. The truncation constant is omitted (theta-free).
double log_prior(const GarchParams& params, const PriorSpec& spec);

struct UnconstrainedPoint {
    std::vector<double> z;
};

/// Bijection between the strict interior of the parameter set and R^d:
///   omega = exp(z_0), persistence s = logistic(z_1), and the coefficient
///   vector (alpha_1..alpha_p, beta_1..beta_q) = s * stick_breaking(z_2..).
/// For order (1,1): alpha = s*r, beta = s*(1-r) with r = logistic(z_2).
class StickBreakingTransform {
public:
    explicit StickBreakingTransform(GarchOrder order) : order_(order) { order_.validate(); }

    [[nodiscard]] GarchOrder order() const noexcept { return order_; }
    [[nodiscard]] int dim() const noexcept { return order_.dim(); }

    /// Requires the strict interior (omega>0, all coefficients >0, sum<1).
    [[nodiscard]] UnconstrainedPoint to_unconstrained(const GarchParams& params) const;

    struct Constrained {
        GarchParams params;
        double log_jacobian = 0.0;
    };
    [[nodiscard]] Constrained to_constrained(const UnconstrainedPoint& point) const;

    /// Constrained point plus everything a gradient-based sampler needs.
    struct Eval {
        GarchParams params;
        double log_jacobian = 0.0;
        std::vector<double> dtheta_dz;    // d x d row-major, rows = theta components
        std::vector<double> dlogjac_dz;   // length d
    };
    [[nodiscard]] Eval eval(const UnconstrainedPoint& point) const;

    /// grad_z[j] = sum_i dtheta_dz(i,j) * grad_theta[i]  (chain rule pullback).
    static void pullback(const Eval& e, std::span<const double> grad_theta,
                         std::span<double> grad_z);

private:
    GarchOrder order_;
};

}  // namespace rbgarch
