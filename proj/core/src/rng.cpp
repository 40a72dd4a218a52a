#include "augraph/rng.hpp"

#include <stdexcept>
#include <unordered_set>

namespace augraph {

std::uint64_t SplitMix64::uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    // Rejection sampling over the largest multiple of n.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

std::vector<std::size_t> sample_distinct(SplitMix64& rng, std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample_distinct: k exceeds population");
    // Floyd's algorithm: k draws regardless of n, uniform over k-subsets.
    std::unordered_set<std::size_t> chosen;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t j = n - k; j < n; ++j) {
        std::size_t t = static_cast<std::size_t>(rng.uniform_below(j + 1));
        if (chosen.insert(t).second) {
            out.push_back(t);
        } else {
            chosen.insert(j);
            out.push_back(j);
        }
    }
    return out;
}

}  // namespace augraph
