#pragma once
// Repo-wide deterministic randomness.
//
// Every randomized operation takes an explicit 64-bit seed and draws from a
// splitmix64 stream, so results are bit-reproducible across platforms and
// independent of the standard library's distribution implementations.

#include <cstdint>
#include <vector>

namespace augraph {

// Golden-ratio increment; odd, so index -> seed derivation is injective.
inline constexpr std::uint64_t kSeedMixMultiplier = 0x9E3779B97F4A7C15ULL;

// Per-item seed for item `index` under base seed `base`. Used wherever a
// dataset-level seed has to fan out into independent per-graph streams.
constexpr std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
    return base ^ (index * kSeedMixMultiplier);
}

// splitmix64 (Steele et al.), the fixed generator for this repository.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += kSeedMixMultiplier);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n). n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);

    // Double in [0, 1) with 53 random bits.
    double uniform_real() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// k distinct indices from [0, n), uniform over k-subsets, in draw order.
std::vector<std::size_t> sample_distinct(SplitMix64& rng, std::size_t n, std::size_t k);

// Fisher-Yates shuffle in place.
template <typename T>
void shuffle(SplitMix64& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace augraph
