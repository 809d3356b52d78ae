#include "rbgarch/prior.hpp"

#include <cmath>
#include <limits>
#include <span>

namespace rbgarch {

namespace {

double log1p_exp(double a) {
    // stable log(1 + exp(a))
    if (a > 0.0) return a + std::log1p(std::exp(-a));
    return std::log1p(std::exp(a));
}

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double logit(double x) { return std::log(x / (1.0 - x)); }

}  // namespace

double log_prior(const GarchParams& params, const PriorSpec& spec) {
    spec.validate();
    if (!params.order().is_11())
        throw ParameterError("the prior is specified for order (1,1) only");
    const double w = params.omega;
    const double a = params.alpha[0];
    const double b = params.beta[0];
    const bool ok = w > 0.0 && a >= 0.0 && b >= 0.0 && a + b < 1.0 && std::isfinite(w) &&
                    std::isfinite(a) && std::isfinite(b);
    if (!ok) return -std::numeric_limits<double>::infinity();
    const double dev = (w - spec.mu_w) / spec.sigma_w;
    return -0.5 * dev * dev;
}

UnconstrainedPoint StickBreakingTransform::to_unconstrained(const GarchParams& params) const {
    if (params.order() != order_)
        throw ParameterError("parameter order does not match the transform");
    const int m = order_.p + order_.q;

    std::vector<double> coef;
    coef.reserve(m);
    coef.insert(coef.end(), params.alpha.begin(), params.alpha.end());
    coef.insert(coef.end(), params.beta.begin(), params.beta.end());

    double s = 0.0;
    for (double c : coef) {
        if (!(c > 0.0)) throw InputError("to_unconstrained requires strictly interior coefficients");
        s += c;
    }
    if (!(s < 1.0)) throw InputError("to_unconstrained requires persistence < 1");
    if (!(params.omega > 0.0)) throw InputError("to_unconstrained requires omega > 0");

    UnconstrainedPoint out;
    out.z.resize(1 + m);
    out.z[0] = std::log(params.omega);
    out.z[1] = logit(s);
    double remaining = s;
    for (int k = 0; k < m - 1; ++k) {
        const double r = coef[k] / remaining;
        out.z[2 + k] = logit(r);
        remaining -= coef[k];
    }
    return out;
}

StickBreakingTransform::Constrained StickBreakingTransform::to_constrained(
    const UnconstrainedPoint& point) const {
    Eval e = eval(point);
    return Constrained{std::move(e.params), e.log_jacobian};
}

StickBreakingTransform::Eval StickBreakingTransform::eval(const UnconstrainedPoint& point) const {
    const int p = order_.p;
    const int q = order_.q;
    const int m = p + q;
    const int d = 1 + m;
    if (static_cast<int>(point.z.size()) != d)
        throw InputError("unconstrained point has wrong dimension");

    const double* z = point.z.data();
    const double omega = std::exp(z[0]);
    const double s = logistic(z[1]);
    const double log_s = -log1p_exp(-z[1]);
    const double log_1ms = -log1p_exp(z[1]);

    std::vector<double> r(std::max(m - 1, 0));
    std::vector<double> coef(m);
    double stick = s;
    double log_jac = z[0] + log_s + log_1ms + (m - 1) * log_s;
    for (int k = 0; k < m - 1; ++k) {
        r[k] = logistic(z[2 + k]);
        coef[k] = stick * r[k];
        log_jac += -log1p_exp(-z[2 + k]) - log1p_exp(z[2 + k]);  // log r_k(1-r_k)
        if (k > 0) {
            // log of the stick remaining before split k, relative to s
            double acc = 0.0;
            for (int j = 0; j < k; ++j) acc += std::log1p(-r[j]);
            log_jac += acc;
        }
        stick *= 1.0 - r[k];
    }
    if (m >= 1) coef[m - 1] = m == 1 ? s : stick;

    Eval out;
    out.params.omega = omega;
    out.params.alpha.assign(coef.begin(), coef.begin() + p);
    out.params.beta.assign(coef.begin() + p, coef.end());
    out.log_jacobian = log_jac;

    // dtheta/dz, rows ordered (omega, coef_1..coef_m), columns (z_0..z_{d-1})
    out.dtheta_dz.assign(static_cast<std::size_t>(d) * d, 0.0);
    auto J = [&](int row, int col) -> double& {
        return out.dtheta_dz[static_cast<std::size_t>(row) * d + col];
    };
    J(0, 0) = omega;
    for (int k = 0; k < m; ++k) {
        const int row = 1 + k;
        J(row, 1) = coef[k] * (1.0 - s);
        for (int j = 0; j < m - 1; ++j) {
            if (j < k)
                J(row, 2 + j) = -coef[k] * r[j];
            else if (j == k)
                J(row, 2 + j) = coef[k] * (1.0 - r[k]);
        }
    }

    out.dlogjac_dz.assign(d, 0.0);
    out.dlogjac_dz[0] = 1.0;
    out.dlogjac_dz[1] = (1.0 - 2.0 * s) + (m - 1) * (1.0 - s);
    for (int j = 0; j < m - 1; ++j)
        out.dlogjac_dz[2 + j] = (1.0 - 2.0 * r[j]) - (m - 2 - j) * r[j];
    return out;
}

void StickBreakingTransform::pullback(const Eval& e, std::span<const double> grad_theta,
                                      std::span<double> grad_z) {
    const int d = static_cast<int>(grad_z.size());
    for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int i = 0; i < d; ++i)
            acc += e.dtheta_dz[static_cast<std::size_t>(i) * d + j] * grad_theta[i];
        grad_z[j] = acc;
    }
}

}  // namespace rbgarch
