#pragma once

#include <cstdint>

#include "rbgarch/types.hpp"

namespace rbgarch {

struct StationarityCheck {
    /// sum(alpha) + sum(beta) < 1: strict stationarity and ergodicity.
    bool sufficient_strict = false;
    /// sum(beta) < 1: condition G1 (variance recursion contraction).
    bool g1_holds = false;
};

StationarityCheck check_stationarity(const GarchParams& params);

/// Conditional-variance proxy recursion
///   sigma2[t] = omega + sum_i alpha_i X[t-i]^2 + sum_j beta_j sigma2[t-j]
/// with every pre-sample X^2 and sigma2 lag initialized to X[1]^2.
VariancePath variance_recursion(const GarchParams& params, const ReturnSeries& series);

/// Simulate n returns from the true-variance recursion after `burn_in` warm-up
/// steps, seeding the pre-sample state at the unconditional variance.
/// Innovations follow `dist`; with contamination active, eps is shifted by
/// magnitude * sign(eps) whenever the Bernoulli(prob) indicator fires.
/// Identical seeds give bitwise-identical output; the innovation and
/// contamination substreams are independent.
ReturnSeries simulate(const GarchParams& params, int n, int burn_in, const InnovationDist& dist,
                      const ContaminationSpec& contamination, std::uint64_t seed,
                      bool allow_nonstationary = false);

}  // namespace rbgarch
