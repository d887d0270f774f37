#pragma once

#include <cmath>
#include <cstdint>

namespace edr {

/// Deterministic 64-bit generator (splitmix64). Used instead of
/// <random> distributions so that identical seeds give bit-identical
/// streams on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    /// Independent stream for a (seed, lane) pair. Results of parallel
    /// work derived per index are therefore independent of thread count.
    static Rng stream(std::uint64_t seed, std::uint64_t lane) noexcept {
        Rng mix(seed + 0x9e3779b97f4a7c15ULL * (lane + 1));
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1); never returns exactly 0.
    double next_uniform() noexcept {
        std::uint64_t bits = next_u64() >> 11;  // 53 random bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (both values used).
    double next_normal() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    double next_normal(double mean, double sd) noexcept { return mean + sd * next_normal(); }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_uniform(); }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace edr
