#include "hypershuffle/rng.hpp"

#include <limits>
#include <stdexcept>

namespace hypershuffle {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return engine_() & (bound - 1);
    // Largest multiple of bound representable; draws above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

bool Rng::bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
    if (numerator >= denominator) return true;
    return below(denominator) < numerator;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace hypershuffle
