#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace rbgarch {

/// Neumaier-compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) noexcept {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    [[nodiscard]] double result() const noexcept { return sum + comp; }
};

/// Fixed block size for the deterministic parallel reductions. The partition
/// does not depend on the thread count, so results are identical whether the
/// loop runs on 1 or N threads.
inline constexpr std::size_t kReduceBlock = 512;

/// Compensated sum over fixed-size blocks; block partials are combined in
/// index order. Agrees with plain left-to-right summation far inside 1e-12
/// relative for the magnitudes this library produces.
double blocked_sum(std::span<const double> x);

/// Same scheme for sum_t a[t] * b[t].
double blocked_dot(std::span<const double> a, std::span<const double> b);

}  // namespace rbgarch
