// Result types shared by the direct recursion and the abacus simulator.
#pragma once

#include <vector>

#include "passbuck/numeric.hpp"

namespace passbuck {

/// Chip counts per absorbing vertex once the abacus returns to critical
/// loading; values[v-1] is the count for vertex v. total == sum of values.
struct RestorationTable {
    std::vector<Natural> values;
    Natural total{0};

    friend bool operator==(const RestorationTable&, const RestorationTable&) = default;
};

/// Exact win probability per vertex; entries sum to exactly 1.
struct WinDistribution {
    std::vector<Rational> probabilities;

    friend bool operator==(const WinDistribution&, const WinDistribution&) = default;
};

}  // namespace passbuck
