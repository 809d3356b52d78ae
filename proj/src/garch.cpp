#include "rbgarch/garch.hpp"

#include <algorithm>
#include <cmath>

#include "rbgarch/rng.hpp"

namespace rbgarch {

StationarityCheck check_stationarity(const GarchParams& params) {
    params.validate();
    return StationarityCheck{params.persistence() < 1.0, params.beta_sum() < 1.0};
}

VariancePath variance_recursion(const GarchParams& params, const ReturnSeries& series) {
    params.validate();
    series.validate();

    const int p = static_cast<int>(params.alpha.size());
    const int q = static_cast<int>(params.beta.size());
    const int n = static_cast<int>(series.values.size());
    const double* x = series.values.data();
    const double init = x[0] * x[0];

    VariancePath path;
    path.values.resize(n);
    double* s2 = path.values.data();

    for (int t = 0; t < n; ++t) {
        double v = params.omega;
        for (int i = 1; i <= p; ++i) {
            const int k = t - i;
            const double xsq = k >= 0 ? x[k] * x[k] : init;
            v += params.alpha[i - 1] * xsq;
        }
        for (int j = 1; j <= q; ++j) {
            const int k = t - j;
            v += params.beta[j - 1] * (k >= 0 ? s2[k] : init);
        }
        s2[t] = v;
    }
    return path;
}

ReturnSeries simulate(const GarchParams& params, int n, int burn_in, const InnovationDist& dist,
                      const ContaminationSpec& contamination, std::uint64_t seed,
                      bool allow_nonstationary) {
    params.validate();
    contamination.validate();
    if (n <= 0) throw InputError("simulate requires n > 0");
    if (burn_in < 0) throw InputError("simulate requires burn_in >= 0");

    const double persistence = params.persistence();
    if (persistence >= 1.0 && !allow_nonstationary)
        throw ParameterError(
            "sum(alpha) + sum(beta) >= 1: process may be nonstationary; "
            "pass allow_nonstationary to proceed");

    const int p = static_cast<int>(params.alpha.size());
    const int q = static_cast<int>(params.beta.size());
    const double seed_var =
        persistence < 1.0 ? params.omega / (1.0 - persistence) : params.omega;

    Rng innov = Rng::substream(seed, rng_tag::kInnovation);
    Rng contam = Rng::substream(seed, rng_tag::kContamination);

    std::vector<double> lag_xsq(std::max(p, 1), seed_var);
    std::vector<double> lag_s2(std::max(q, 1), seed_var);

    ReturnSeries out;
    out.values.reserve(n);
    std::int64_t shifted = 0;

    const int total = burn_in + n;
    for (int t = 0; t < total; ++t) {
        double s2 = params.omega;
        for (int i = 0; i < p; ++i) s2 += params.alpha[i] * lag_xsq[i];
        for (int j = 0; j < q; ++j) s2 += params.beta[j] * lag_s2[j];

        double eps = innov.innovation(dist);
        if (contamination.prob > 0.0) {
            const bool hit = contam.bernoulli(contamination.prob);
            if (hit && contamination.magnitude != 0.0) {
                eps += contamination.magnitude * (eps < 0.0 ? -1.0 : eps > 0.0 ? 1.0 : 0.0);
                if (t >= burn_in) ++shifted;
            }
        }

        const double x = std::sqrt(s2) * eps;
        if (p > 0) {
            std::rotate(lag_xsq.rbegin(), lag_xsq.rbegin() + 1, lag_xsq.rend());
            lag_xsq[0] = x * x;
        }
        if (q > 0) {
            std::rotate(lag_s2.rbegin(), lag_s2.rbegin() + 1, lag_s2.rend());
            lag_s2[0] = s2;
        }
        if (t >= burn_in) out.values.push_back(x);
    }

    out.label = "simulated";
    out.origin = SimulatedOrigin{seed, shifted};
    return out;
}

}  // namespace rbgarch
