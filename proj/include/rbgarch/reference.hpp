#pragma once

#include <vector>

#include "rbgarch/objective.hpp"
#include "rbgarch/types.hpp"

namespace rbgarch::reference {

/// Serial reference kernels: straight loops, plain left-to-right summation,
/// no OpenMP and no compensation. Kept as the oracle strategy the parallel
/// kernels are tested and benchmarked against.

std::vector<double> variance_path(const GarchParams& params, const std::vector<double>& x);

double objective_total(const GarchParams& params, const std::vector<double>& x, Gamma gamma,
                       const LikelihoodSpec& likelihood);

std::vector<double> objective_gradient(const GarchParams& params, const std::vector<double>& x,
                                       Gamma gamma, const LikelihoodSpec& likelihood);

}  // namespace rbgarch::reference
