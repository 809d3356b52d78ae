#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rbgarch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};
struct ParameterError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct OptimizationError : Error {
    using Error::Error;
};
struct SamplerError : Error {
    using Error::Error;
};
struct CovarianceError : Error {
    using Error::Error;
};
struct DiagnosticError : Error {
    using Error::Error;
};
struct IngestionError : Error {
    using Error::Error;
};
struct MetricError : Error {
    using Error::Error;
};
struct StudyError : Error {
    using Error::Error;
};

/// Model order: p lagged squared returns (ARCH), q lagged variances (GARCH).
struct GarchOrder {
    int p = 1;
    int q = 1;

    static constexpr int kMaxOrder = 10;

    void validate() const {
        if (p < 0 || q < 0)
            throw ParameterError("GARCH order components must be nonnegative");
        if (p + q < 1)
            throw ParameterError("GARCH order requires p + q >= 1");
        if (p > kMaxOrder || q > kMaxOrder)
            throw ParameterError("GARCH order components are capped at 10");
    }

    [[nodiscard]] int dim() const noexcept { return 1 + p + q; }
    [[nodiscard]] bool is_11() const noexcept { return p == 1 && q == 1; }
    bool operator==(const GarchOrder&) const = default;
};

/// Parameter vector theta = (omega, alpha_1..alpha_p, beta_1..beta_q).
struct GarchParams {
    double omega = 0.0;
    std::vector<double> alpha;
    std::vector<double> beta;

    GarchParams() = default;
    GarchParams(double w, std::vector<double> a, std::vector<double> b)
        : omega(w), alpha(std::move(a)), beta(std::move(b)) {}
    /// Convenience for the ubiquitous (1,1) case.
    GarchParams(double w, double a, double b) : omega(w), alpha{a}, beta{b} {}

    [[nodiscard]] GarchOrder order() const noexcept {
        return GarchOrder{static_cast<int>(alpha.size()), static_cast<int>(beta.size())};
    }

    void validate() const {
        order().validate();
        if (!(omega > 0.0) || !std::isfinite(omega))
            throw ParameterError("omega must be positive and finite");
        for (double a : alpha)
            if (a < 0.0 || !std::isfinite(a))
                throw ParameterError("alpha coefficients must be nonnegative and finite");
        for (double b : beta)
            if (b < 0.0 || !std::isfinite(b))
                throw ParameterError("beta coefficients must be nonnegative and finite");
    }

    [[nodiscard]] double alpha_sum() const noexcept {
        return std::accumulate(alpha.begin(), alpha.end(), 0.0);
    }
    [[nodiscard]] double beta_sum() const noexcept {
        return std::accumulate(beta.begin(), beta.end(), 0.0);
    }
    /// alpha_sum + beta_sum; < 1 is the sufficient stationarity condition.
    [[nodiscard]] double persistence() const noexcept { return alpha_sum() + beta_sum(); }

    [[nodiscard]] std::vector<double> as_vector() const {
        std::vector<double> v;
        v.reserve(1 + alpha.size() + beta.size());
        v.push_back(omega);
        v.insert(v.end(), alpha.begin(), alpha.end());
        v.insert(v.end(), beta.begin(), beta.end());
        return v;
    }

    static GarchParams from_vector(const GarchOrder& order, const std::vector<double>& v) {
        if (static_cast<int>(v.size()) != order.dim())
            throw ParameterError("parameter vector length does not match order");
        GarchParams p;
        p.omega = v[0];
        p.alpha.assign(v.begin() + 1, v.begin() + 1 + order.p);
        p.beta.assign(v.begin() + 1 + order.p, v.end());
        return p;
    }
};

/// Innovation distribution; Student-t is standardized to unit variance.
struct InnovationDist {
    enum class Kind { Normal, StudentT };
    Kind kind = Kind::Normal;
    double nu = 0.0;

    static InnovationDist normal() { return {Kind::Normal, 0.0}; }
    static InnovationDist student_t(double nu) {
        if (!(nu > 2.0))
            throw ParameterError("Student-t innovations require nu > 2");
        return {Kind::StudentT, nu};
    }
};

/// Innovation-outlier scheme: eps = eps0 + magnitude * p_t * sign(eps0),
/// p_t ~ Bernoulli(prob).
struct ContaminationSpec {
    double prob = 0.0;
    double magnitude = 0.0;

    void validate() const {
        if (prob < 0.0 || prob > 1.0 || !std::isfinite(prob))
            throw ParameterError("contamination prob must lie in [0,1]");
        if (magnitude < 0.0 || !std::isfinite(magnitude))
            throw ParameterError("contamination magnitude must be nonnegative");
    }
    [[nodiscard]] bool active() const noexcept { return prob > 0.0 && magnitude > 0.0; }
};

struct SimulatedOrigin {
    std::uint64_t seed = 0;
    /// Innovations shifted by the contamination scheme among the returned n.
    std::int64_t shifted_count = 0;
};

struct IngestedOrigin {
    std::string path;
};

/// Observed or simulated percent log-returns.
struct ReturnSeries {
    std::vector<double> values;
    std::string label;
    std::variant<std::monostate, SimulatedOrigin, IngestedOrigin> origin;

    void validate() const {
        if (values.empty())
            throw InputError("return series must be nonempty");
        for (double v : values)
            if (!std::isfinite(v))
                throw InputError("return series contains a non-finite value");
    }
    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

/// Conditional-variance proxy path, same length as the series it was built from.
struct VariancePath {
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

}  // namespace rbgarch
