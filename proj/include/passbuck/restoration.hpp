// Direct computation of the restoration function: what the stochastic abacus
// would deposit into every absorbing vertex, obtained bottom-up from subtree
// periods instead of firing chips. Two passes, both on explicit stacks.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "passbuck/numeric.hpp"
#include "passbuck/restoration_table.hpp"
#include "passbuck/tree.hpp"

namespace passbuck {

/// Per-vertex memo filled in post-order: for the subtree hanging at v, its
/// restoration number at its own root and its period. 0 marks "not yet
/// computed"; real values are always >= 1.
struct PeriodCache {
    std::vector<Natural> local_restoration;
    std::vector<Natural> period;

    explicit PeriodCache(int n)
        : local_restoration(static_cast<std::size_t>(n)), period(static_cast<std::size_t>(n)) {}
};

/// Restoration number of the subtree rooted at k, at k itself: the least
/// common multiple of the children's periods (1 for a leaf, the empty lcm).
/// Requires the children's periods to be cached already.
inline const Natural& subtree_restoration_at_root(const RootedTree& t, VertexId k, PeriodCache& cache) {
    Natural& slot = cache.local_restoration.at(static_cast<std::size_t>(k) - 1);
    if (slot != 0) return slot;
    Natural r{1};
    for (const VertexId c : t.children(k)) {
        const Natural& pc = cache.period[static_cast<std::size_t>(c) - 1];
        if (pc == 0) {
            throw std::logic_error("subtree_restoration_at_root: period of child " + std::to_string(c) +
                                   " not cached; fill the cache in post-order");
        }
        r = lcm(r, pc);
    }
    slot = std::move(r);
    return slot;
}

/// Period of the subtree rooted at k: with m children and restoration number
/// R, it is (m+2)*R minus the children's entries in that subtree's own
/// restoration table. A leaf has period 2. The division scaling each child's
/// entry is always exact; a nonzero remainder would be a bug and throws.
inline const Natural& subtree_period(const RootedTree& t, VertexId k, PeriodCache& cache) {
    Natural& slot = cache.period.at(static_cast<std::size_t>(k) - 1);
    if (slot != 0) return slot;
    const Natural& r = subtree_restoration_at_root(t, k, cache);
    const auto& kids = t.children(k);
    Natural p = Natural(kids.size() + 2) * r;
    for (const VertexId c : kids) {
        // child's table entry: (R / period(c)) * restoration(c)
        p -= exact_div(r, cache.period[static_cast<std::size_t>(c) - 1]) *
             cache.local_restoration[static_cast<std::size_t>(c) - 1];
    }
    slot = std::move(p);
    return slot;
}

/// Fills the whole cache, children before parents.
inline PeriodCache compute_periods(const RootedTree& t) {
    PeriodCache cache(t.size());
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(t.size()));
    std::vector<VertexId> stack{t.root()};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& cs = t.children(v);
        stack.insert(stack.end(), cs.begin(), cs.end());
    }
    // reversed pre-order visits every child before its parent
    for (auto it = order.rbegin(); it != order.rend(); ++it) subtree_period(t, *it, cache);
    return cache;
}

/// The full restoration function of t. Bottom-up pass for restoration
/// numbers and periods, then a top-down pass scaling each subtree's local
/// table into the enclosing scope by (restoration of parent) / (period of
/// child subtree), accumulated as an exact integer multiplier per vertex.
inline RestorationTable restoration_full(const RootedTree& t) {
    const int n = t.size();
    PeriodCache cache = compute_periods(t);

    RestorationTable table;
    table.values.assign(static_cast<std::size_t>(n), Natural(0));
    std::vector<Natural> scope(static_cast<std::size_t>(n));

    const VertexId root = t.root();
    scope[static_cast<std::size_t>(root) - 1] = 1;
    table.values[static_cast<std::size_t>(root) - 1] = cache.local_restoration[static_cast<std::size_t>(root) - 1];

    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        const Natural& r = cache.local_restoration[static_cast<std::size_t>(v) - 1];
        const Natural& mult = scope[static_cast<std::size_t>(v) - 1];
        for (const VertexId c : t.children(v)) {
            Natural m = mult * exact_div(r, cache.period[static_cast<std::size_t>(c) - 1]);
            table.values[static_cast<std::size_t>(c) - 1] =
                m * cache.local_restoration[static_cast<std::size_t>(c) - 1];
            scope[static_cast<std::size_t>(c) - 1] = std::move(m);
            stack.push_back(c);
        }
    }

    for (const auto& v : table.values) table.total += v;
    return table;
}

/// Win probability of each vertex: its table entry over the table total,
/// reduced. The entries sum to exactly 1 by construction; verified anyway.
inline WinDistribution win_probabilities(const RestorationTable& table) {
    if (table.values.empty()) throw std::invalid_argument("win_probabilities: empty table");
    WinDistribution dist;
    dist.probabilities.reserve(table.values.size());
    Rational sum{0};
    for (const auto& v : table.values) {
        Rational p(v, table.total);
        sum += p;
        dist.probabilities.push_back(std::move(p));
    }
    if (sum != 1) throw std::logic_error("win_probabilities: distribution does not sum to 1");
    return dist;
}

}  // namespace passbuck
