#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "rbgarch/types.hpp"

namespace rbgarch {

/// Seedable, portable generator with per-purpose substreams.
///
/// The engine is std::mt19937_64 (bit-exact across platforms by the standard);
/// all variate transforms are implemented here rather than with std::*_distribution,
/// whose output is implementation-defined. Substreams are derived by splitmix64
/// mixing so that e.g. toggling contamination never consumes innovation draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (tag + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t tag) { return Rng(mix(seed, tag)); }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on (0,1), strictly interior.
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Inclusive uniform integer on [lo, hi].
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int k = lo + static_cast<int>(uniform() * span);
        return k > hi ? hi : k;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    /// Gamma(shape,1) for shape >= 1, Marsaglia-Tsang squeeze.
    double gamma(double shape) {
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Student-t with nu > 2 degrees of freedom (unit-variance NOT applied).
    double student_t(double nu) {
        const double z = normal();
        const double chi2 = 2.0 * gamma(0.5 * nu);
        return z / std::sqrt(chi2 / nu);
    }

    /// Draw from an InnovationDist (zero mean, unit variance).
    double innovation(const InnovationDist& dist) {
        if (dist.kind == InnovationDist::Kind::Normal) return normal();
        return student_t(dist.nu) * std::sqrt((dist.nu - 2.0) / dist.nu);
    }

private:
    std::mt19937_64 engine_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

/// Fixed substream tags, so call sites cannot collide by accident.
namespace rng_tag {
inline constexpr std::uint64_t kInnovation = 0x1;
inline constexpr std::uint64_t kContamination = 0x2;
inline constexpr std::uint64_t kChainBase = 0x100;
inline constexpr std::uint64_t kOptimizerStart = 0x200;
inline constexpr std::uint64_t kRefitBase = 0x300;
inline constexpr std::uint64_t kEstimatorBase = 0x400;
}  // namespace rng_tag

}  // namespace rbgarch
