#include "rbgarch/reduce.hpp"

namespace rbgarch {

double blocked_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    if (nblocks <= 1) {
        Kahan acc;
        for (double v : x) acc.add(v);
        return acc.result();
    }

    std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = std::min(lo + kReduceBlock, n);
        Kahan acc;
        for (std::size_t t = lo; t < hi; ++t) acc.add(x[t]);
        partial[b] = acc.result();
    }

    Kahan total;
    for (double v : partial) total.add(v);
    return total.result();
}

double blocked_dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    if (nblocks <= 1) {
        Kahan acc;
        for (std::size_t t = 0; t < n; ++t) acc.add(a[t] * b[t]);
        return acc.result();
    }

    std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(nblocks); ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kReduceBlock;
        const std::size_t hi = std::min(lo + kReduceBlock, n);
        Kahan acc;
        for (std::size_t t = lo; t < hi; ++t) acc.add(a[t] * b[t]);
        partial[blk] = acc.result();
    }

    Kahan total;
    for (double v : partial) total.add(v);
    return total.result();
}

}  // namespace rbgarch
