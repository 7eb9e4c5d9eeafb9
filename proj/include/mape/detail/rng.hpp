// Deterministic randomness helpers. Gaussian variates are produced by an
// explicit Box-Muller transform on top of std::mt19937_64 rather than
// std::normal_distribution, whose algorithm is implementation-defined;
// this keeps seeded test vectors portable across standard libraries.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mape::detail {

// splitmix64 step; used to derive independent substreams from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}
    explicit GaussianSource(std::mt19937_64 rng) : rng_(rng) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1]: a zero draw would blow up the log.
        const double u1 = 1.0 - canonical(rng_);
        const double u2 = canonical(rng_);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace mape::detail
