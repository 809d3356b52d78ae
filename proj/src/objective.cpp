#include "rbgarch/objective.hpp"

#include <algorithm>
#include <cmath>

#include "rbgarch/reduce.hpp"

namespace rbgarch {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

enum class TermKind { Gaussian, Dpd, StudentT };

}  // namespace

ObjectiveEvaluator::ObjectiveEvaluator(const ReturnSeries& series, Gamma gamma,
                                       LikelihoodSpec likelihood)
    : gamma_(gamma), likelihood_(likelihood) {
    series.validate();
    if (likelihood_.kind == LikelihoodSpec::Kind::StudentT && gamma_.value > 0.0)
        throw ParameterError(
            "DPD objective is defined for Gaussian innovations only; "
            "Student-t requires gamma = 0");

    x_ = series.values;
    n_ = static_cast<int>(x_.size());
    xsq_.resize(n_);
    for (int t = 0; t < n_; ++t) xsq_[t] = x_[t] * x_[t];

    const double g = gamma_.value;
    dpd_const_ = std::pow(1.0 + g, -1.5);
    if (likelihood_.kind == LikelihoodSpec::Kind::StudentT) {
        const double nu = likelihood_.nu;
        const double c = std::sqrt((nu - 2.0) / nu);
        t_log_norm_ = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                      0.5 * std::log(nu * M_PI) - std::log(c);
    }
}

double ObjectiveEvaluator::shift_constant() const noexcept {
    const double g = gamma_.value;
    return g > 0.0 ? static_cast<double>(n_) * (1.0 / g - 1.0) : 0.0;
}

void ObjectiveEvaluator::recursion(const GarchParams& params, bool with_derivatives) {
    params.validate();
    const int p = static_cast<int>(params.alpha.size());
    const int q = static_cast<int>(params.beta.size());
    const int d = 1 + p + q;
    const int n = n_;
    const double init = xsq_[0];

    v_.resize(n);
    double* v = v_.data();
    const double* xsq = xsq_.data();

    if (!with_derivatives) {
        for (int t = 0; t < n; ++t) {
            double s = params.omega;
            for (int i = 1; i <= p; ++i) {
                const int k = t - i;
                s += params.alpha[i - 1] * (k >= 0 ? xsq[k] : init);
            }
            for (int j = 1; j <= q; ++j) {
                const int k = t - j;
                s += params.beta[j - 1] * (k >= 0 ? v[k] : init);
            }
            v[t] = s;
        }
        return;
    }

    dv_.assign(static_cast<std::size_t>(n) * d, 0.0);
    double* dv = dv_.data();
    for (int t = 0; t < n; ++t) {
        double s = params.omega;
        double* row = dv + static_cast<std::size_t>(t) * d;
        row[0] = 1.0;
        for (int i = 1; i <= p; ++i) {
            const int k = t - i;
            const double lag_xsq = k >= 0 ? xsq[k] : init;
            s += params.alpha[i - 1] * lag_xsq;
            row[i] = lag_xsq;
        }
        for (int j = 1; j <= q; ++j) {
            const int k = t - j;
            const double lag_v = k >= 0 ? v[k] : init;
            s += params.beta[j - 1] * lag_v;
            row[p + j] = lag_v;
        }
        for (int j = 1; j <= q; ++j) {
            const int k = t - j;
            if (k < 0) continue;
            const double bj = params.beta[j - 1];
            const double* lag_row = dv + static_cast<std::size_t>(k) * d;
            for (int m = 0; m < d; ++m) row[m] += bj * lag_row[m];
        }
        v[t] = s;
    }
}

namespace {

/// Per-term shifted value and d(value)/d(variance) for one observation.
template <TermKind Kind>
inline void term_eval(double xsq, double v, double gamma, double dpd_const, double t_log_norm,
                      double nu, double& val, double& dqdv) {
    const double inv_v = 1.0 / v;
    if constexpr (Kind == TermKind::Gaussian) {
        const double b = 0.5 * xsq * inv_v;
        val = -kHalfLog2Pi - 0.5 * std::log(v) - b;
        dqdv = (b - 0.5) * inv_v;
    } else if constexpr (Kind == TermKind::Dpd) {
        const double lw = -kHalfLog2Pi - 0.5 * std::log(v);
        const double b = 0.5 * xsq * inv_v;
        const double a = gamma * (lw - b);
        const double ea = std::exp(a);
        const double e_lw = std::exp(gamma * lw);
        val = std::expm1(a) / gamma + (1.0 - dpd_const * e_lw);
        dqdv = ea * (b - 0.5) * inv_v + 0.5 * dpd_const * gamma * e_lw * inv_v;
    } else {
        const double usq = xsq * inv_v;
        val = t_log_norm - 0.5 * std::log(v) - 0.5 * (nu + 1.0) * std::log1p(usq / (nu - 2.0));
        dqdv = ((nu + 1.0) * usq / (nu - 2.0 + usq) - 1.0) * 0.5 * inv_v;
    }
}

}  // namespace

double ObjectiveEvaluator::reduce_terms(const GarchParams& params, bool with_gradient,
                                        std::span<double> grad) {
    const int n = n_;
    const int d = params.order().dim();
    const double g = gamma_.value;

    vals_.resize(n);
    dqdv_.resize(n);
    double* vals = vals_.data();
    double* dqdv = dqdv_.data();
    const double* v = v_.data();
    const double* xsq = xsq_.data();

    const TermKind kind = likelihood_.kind == LikelihoodSpec::Kind::StudentT ? TermKind::StudentT
                          : g > 0.0                                          ? TermKind::Dpd
                                                                             : TermKind::Gaussian;

    const std::size_t nblocks = (static_cast<std::size_t>(n) + kReduceBlock - 1) / kReduceBlock;
    const int width = 1 + (with_gradient ? d : 0);
    std::vector<double> partial(nblocks * width);
    const double* dv = dv_.data();
    const double dpd_const = dpd_const_;
    const double t_log_norm = t_log_norm_;
    const double nu = likelihood_.nu;

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(nblocks); ++blk) {
        const int lo = static_cast<int>(static_cast<std::size_t>(blk) * kReduceBlock);
        const int hi = std::min<int>(lo + static_cast<int>(kReduceBlock), n);

        auto run = [&](auto kind_tag) {
            constexpr TermKind K = decltype(kind_tag)::value;
            for (int t = lo; t < hi; ++t)
                term_eval<K>(xsq[t], v[t], g, dpd_const, t_log_norm, nu, vals[t], dqdv[t]);
        };
        switch (kind) {
            case TermKind::Gaussian:
                run(std::integral_constant<TermKind, TermKind::Gaussian>{});
                break;
            case TermKind::Dpd:
                run(std::integral_constant<TermKind, TermKind::Dpd>{});
                break;
            case TermKind::StudentT:
                run(std::integral_constant<TermKind, TermKind::StudentT>{});
                break;
        }

        Kahan vsum;
        for (int t = lo; t < hi; ++t) vsum.add(vals[t]);
        double* out = partial.data() + static_cast<std::size_t>(blk) * width;
        out[0] = vsum.result();
        if (with_gradient) {
            for (int k = 0; k < d; ++k) {
                Kahan gsum;
                for (int t = lo; t < hi; ++t)
                    gsum.add(dqdv[t] * dv[static_cast<std::size_t>(t) * d + k]);
                out[1 + k] = gsum.result();
            }
        }
    }

    Kahan total;
    for (std::size_t blk = 0; blk < nblocks; ++blk)
        total.add(partial[blk * width]);
    if (with_gradient) {
        for (int k = 0; k < d; ++k) {
            Kahan gsum;
            for (std::size_t blk = 0; blk < nblocks; ++blk)
                gsum.add(partial[blk * width + 1 + k]);
            grad[k] = gsum.result();
        }
    }
    return total.result();
}

double ObjectiveEvaluator::value(const GarchParams& params) {
    recursion(params, false);
    return reduce_terms(params, false, {});
}

double ObjectiveEvaluator::value_and_gradient(const GarchParams& params, std::span<double> grad) {
    const int d = params.order().dim();
    if (static_cast<int>(grad.size()) != d)
        throw InputError("gradient span has wrong length");
    recursion(params, true);
    return reduce_terms(params, true, grad);
}

void ObjectiveEvaluator::per_term(const GarchParams& params, std::vector<double>& out) {
    recursion(params, false);
    reduce_terms(params, false, {});
    const double g = gamma_.value;
    const double offset = g > 0.0 ? 1.0 / g - 1.0 : 0.0;
    out.resize(n_);
    for (int t = 0; t < n_; ++t) out[t] = vals_[t] + offset;
}

void ObjectiveEvaluator::per_term_gradients(const GarchParams& params,
                                            std::vector<double>& out_rows, int& d_out) {
    const int d = params.order().dim();
    d_out = d;
    recursion(params, true);
    std::vector<double> scratch(d);
    reduce_terms(params, true, scratch);
    out_rows.resize(static_cast<std::size_t>(n_) * d);
    for (int t = 0; t < n_; ++t)
        for (int k = 0; k < d; ++k)
            out_rows[static_cast<std::size_t>(t) * d + k] =
                dqdv_[t] * dv_[static_cast<std::size_t>(t) * d + k];
}

ObjectiveValue gaussian_loglik(const GarchParams& params, const ReturnSeries& series) {
    ObjectiveEvaluator eval(series, Gamma(0.0), LikelihoodSpec::gaussian());
    ObjectiveValue out;
    eval.per_term(params, out.per_term);
    out.total = blocked_sum(out.per_term);
    return out;
}

ObjectiveValue dpd_objective(const GarchParams& params, const ReturnSeries& series, Gamma gamma) {
    if (gamma.is_zero()) return gaussian_loglik(params, series);
    ObjectiveEvaluator eval(series, gamma, LikelihoodSpec::gaussian());
    ObjectiveValue out;
    eval.per_term(params, out.per_term);
    out.total = blocked_sum(out.per_term);
    return out;
}

ObjectiveValue dpd_objective_shifted(const GarchParams& params, const ReturnSeries& series,
                                     Gamma gamma) {
    if (gamma.is_zero())
        throw ParameterError("dpd_objective_shifted requires gamma > 0");
    ObjectiveEvaluator eval(series, gamma, LikelihoodSpec::gaussian());
    ObjectiveValue unshifted;
    eval.per_term(params, unshifted.per_term);
    unshifted.total = blocked_sum(unshifted.per_term);

    ObjectiveValue out;
    const double offset = 1.0 / gamma.value - 1.0;
    out.per_term.resize(unshifted.per_term.size());
    for (std::size_t t = 0; t < out.per_term.size(); ++t)
        out.per_term[t] = unshifted.per_term[t] - offset;
    out.total = unshifted.total - eval.shift_constant();
    return out;
}

ObjectiveValue student_t_loglik(const GarchParams& params, const ReturnSeries& series, double nu) {
    ObjectiveEvaluator eval(series, Gamma(0.0), LikelihoodSpec::student_t(nu));
    ObjectiveValue out;
    eval.per_term(params, out.per_term);
    out.total = blocked_sum(out.per_term);
    return out;
}

GradientVector dpd_gradient(const GarchParams& params, const ReturnSeries& series, Gamma gamma) {
    ObjectiveEvaluator eval(series, gamma, LikelihoodSpec::gaussian());
    GradientVector g;
    g.values.resize(params.order().dim());
    eval.value_and_gradient(params, g.values);
    return g;
}

}  // namespace rbgarch
