#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace hypershuffle {

/// Seeded generator with a platform-independent output stream.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// The standard distributions are not, so bounded integers are drawn here by
/// rejection sampling on the raw 64-bit output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// True with probability numerator / denominator (exact).
    bool bernoulli(std::uint64_t numerator, std::uint64_t denominator);

    /// Moves a uniformly random k-subset of `positions` to its front
    /// (partial Fisher-Yates).
    template <class T>
    void choose_front(std::span<T> positions, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            auto j = i + below(positions.size() - i);
            std::swap(positions[i], positions[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; derives independent per-replica seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace hypershuffle
