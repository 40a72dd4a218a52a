#pragma once
// Randomized invariant suite over the augmentation operations, shared by the
// property-test binary and the acceptance gate.

#include <cstdint>
#include <string>
#include <vector>

namespace augraph::testsup {

struct PropertyStats {
    std::size_t graphs = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

// Runs every augmentation op against `graph_count` random graphs and records
// each violated invariant. A clean run has stats.failures empty.
PropertyStats run_augment_property_suite(std::size_t graph_count, std::uint64_t seed);

}  // namespace augraph::testsup
