#include "rbgarch/reference.hpp"

#include <cmath>

namespace rbgarch::reference {

std::vector<double> variance_path(const GarchParams& params, const std::vector<double>& x) {
    const int p = static_cast<int>(params.alpha.size());
    const int q = static_cast<int>(params.beta.size());
    const int n = static_cast<int>(x.size());
    const double init = x[0] * x[0];
    std::vector<double> v(n);
    for (int t = 0; t < n; ++t) {
        double s = params.omega;
        for (int i = 1; i <= p; ++i)
            s += params.alpha[i - 1] * (t - i >= 0 ? x[t - i] * x[t - i] : init);
        for (int j = 1; j <= q; ++j)
            s += params.beta[j - 1] * (t - j >= 0 ? v[t - j] : init);
        v[t] = s;
    }
    return v;
}

namespace {

double term_value(double x, double v, Gamma gamma, const LikelihoodSpec& lik) {
    if (lik.kind == LikelihoodSpec::Kind::StudentT) {
        const double nu = lik.nu;
        const double c = std::sqrt((nu - 2.0) / nu);
        const double u = x / std::sqrt(v);
        const double log_ft = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                              0.5 * std::log(nu * M_PI) -
                              0.5 * (nu + 1.0) * std::log(1.0 + (u / c) * (u / c) / nu);
        return log_ft - std::log(c) - 0.5 * std::log(v);
    }
    const double g = gamma.value;
    if (g == 0.0) return -std::log(std::sqrt(2.0 * M_PI * v)) - x * x / (2.0 * v);
    const double w_pow = std::pow(2.0 * M_PI * v, -0.5 * g);
    return w_pow * (std::exp(-g * x * x / (2.0 * v)) / g - std::pow(1.0 + g, -1.5));
}

double term_dvalue(double x, double v, Gamma gamma, const LikelihoodSpec& lik) {
    if (lik.kind == LikelihoodSpec::Kind::StudentT) {
        const double nu = lik.nu;
        const double usq = x * x / v;
        return ((nu + 1.0) * usq / (nu - 2.0 + usq) - 1.0) / (2.0 * v);
    }
    const double g = gamma.value;
    if (g == 0.0) return (x * x / v - 1.0) / (2.0 * v);
    const double w_pow = std::pow(2.0 * M_PI * v, -0.5 * g);
    const double e = std::exp(-g * x * x / (2.0 * v));
    const double dterm = w_pow * e * x * x / (2.0 * v * v) -
                         (0.5 * g / v) * w_pow * (e / g - std::pow(1.0 + g, -1.5));
    return dterm;
}

}  // namespace

double objective_total(const GarchParams& params, const std::vector<double>& x, Gamma gamma,
                       const LikelihoodSpec& likelihood) {
    const auto v = variance_path(params, x);
    double total = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t)
        total += term_value(x[t], v[t], gamma, likelihood);
    if (gamma.value > 0.0)
        total -= static_cast<double>(x.size()) * (1.0 / gamma.value - 1.0);
    return total;
}

std::vector<double> objective_gradient(const GarchParams& params, const std::vector<double>& x,
                                       Gamma gamma, const LikelihoodSpec& likelihood) {
    const int p = static_cast<int>(params.alpha.size());
    const int q = static_cast<int>(params.beta.size());
    const int d = 1 + p + q;
    const int n = static_cast<int>(x.size());
    const double init = x[0] * x[0];
    const auto v = variance_path(params, x);

    std::vector<double> grad(d, 0.0);
    std::vector<std::vector<double>> dv(n, std::vector<double>(d, 0.0));
    for (int t = 0; t < n; ++t) {
        dv[t][0] = 1.0;
        for (int i = 1; i <= p; ++i)
            dv[t][i] = t - i >= 0 ? x[t - i] * x[t - i] : init;
        for (int j = 1; j <= q; ++j)
            dv[t][p + j] = t - j >= 0 ? v[t - j] : init;
        for (int j = 1; j <= q; ++j)
            if (t - j >= 0)
                for (int m = 0; m < d; ++m) dv[t][m] += params.beta[j - 1] * dv[t - j][m];
        const double dq = term_dvalue(x[t], v[t], gamma, likelihood);
        for (int m = 0; m < d; ++m) grad[m] += dq * dv[t][m];
    }
    return grad;
}

}  // namespace rbgarch::reference
