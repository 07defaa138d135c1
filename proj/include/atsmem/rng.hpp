#ifndef ATSMEM_RNG_HPP
#define ATSMEM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>

#include "atsmem/constants.hpp"

namespace atsmem {

// Counter-based generator (splitmix64): the state is a plain counter advanced
// by a fixed increment and the output is a bijective hash of it, so seeding
// and substream derivation are cheap and deterministic across platforms.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Standard normal via cacheless Box-Muller (two uniforms per draw).
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    // Seed for the independent stream of grid point `index` under `master`.
    static std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
        SplitMix64 mixer(master ^ (0xD1B54A32D192ED03ULL * (index + 1)));
        return mixer();
    }

    static SplitMix64 substream(std::uint64_t master, std::uint64_t index) {
        return SplitMix64(substream_seed(master, index));
    }

private:
    std::uint64_t state_;
};

}  // namespace atsmem

#endif  // ATSMEM_RNG_HPP
