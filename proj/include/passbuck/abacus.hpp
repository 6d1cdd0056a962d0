// Engel's stochastic abacus: chip firing on the augmented absorbing graph.
// The slow reference engine; every other method is checked against it.
#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "passbuck/graph.hpp"
#include "passbuck/numeric.hpp"
#include "passbuck/restoration_table.hpp"
#include "passbuck/tree.hpp"

namespace passbuck {

/// The game graph plus one implicit absorbing partner per game vertex.
/// Absorbers have no outgoing edges, so outdegree(v) = degree(v) + 1.
struct AugmentedGraph {
    UndirectedGraph graph;
    VertexId start = 1;

    int outdegree(VertexId v) const { return graph.degree(v) + 1; }

    static AugmentedGraph for_tree(const RootedTree& t) {
        return {UndirectedGraph::from_tree(t), t.root()};
    }

    static AugmentedGraph over(UndirectedGraph g, VertexId start) {
        if (start < 1 || start > g.size()) {
            throw std::out_of_range("start vertex " + std::to_string(start) + " outside 1.." + std::to_string(g.size()));
        }
        return {std::move(g), start};
    }
};

/// Abacus state: chips sitting on game vertices, cumulative counts in the
/// absorbing partners, and how many chips have been added at the start vertex.
struct ChipConfiguration {
    std::vector<Natural> chips;
    std::vector<Natural> absorbed;
    Natural chips_added{0};

    friend bool operator==(const ChipConfiguration&, const ChipConfiguration&) = default;
};

/// Optional caps for runs that would otherwise fire for hours.
struct SimLimits {
    std::optional<Natural> max_firings;
    std::optional<Natural> max_chips;
};

/// Which over-threshold vertex fires next. The stabilized result never
/// depends on this (abelian property); exposing it lets tests prove that.
struct FiringOrder {
    enum class Kind { Fifo, Random };
    Kind kind = Kind::Fifo;
    std::uint64_t seed = 0;

    static FiringOrder fifo() { return {}; }
    static FiringOrder random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

class CapExceeded : public std::runtime_error {
public:
    enum class Kind { Firings, Chips };

    CapExceeded(Kind kind, ChipConfiguration partial, Natural firings)
        : std::runtime_error(kind == Kind::Firings ? "FiringCapExceeded" : "ChipCapExceeded"),
          kind_(kind),
          partial_(std::move(partial)),
          firings_(std::move(firings)) {}

    Kind kind() const noexcept { return kind_; }
    /// State at the moment the cap hit, for benchmark reporting.
    const ChipConfiguration& partial() const noexcept { return partial_; }
    const Natural& firings() const noexcept { return firings_; }

private:
    Kind kind_;
    ChipConfiguration partial_;
    Natural firings_;
};

/// Every game vertex at outdegree - 1 chips (= its plain degree), absorbers
/// empty. The abacus starts here and terminates upon returning here.
inline ChipConfiguration critical_loading(const AugmentedGraph& g) {
    const int n = g.graph.size();
    ChipConfiguration c;
    c.chips.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 1; v <= n; ++v) c.chips.emplace_back(g.outdegree(v) - 1);
    c.absorbed.assign(static_cast<std::size_t>(n), Natural(0));
    return c;
}

namespace detail {

// Firing engine. One firing event sends exactly one chip along every
// out-edge (degree chips to neighbors, one to the absorber); a vertex still
// over threshold afterwards re-enters the work queue.
class AbacusEngine {
public:
    AbacusEngine(const AugmentedGraph& g, FiringOrder order, const SimLimits& limits)
        : g_(g), order_(order), limits_(limits), rng_(order.seed) {
        const int n = g.graph.size();
        outdeg_.resize(static_cast<std::size_t>(n));
        for (VertexId v = 1; v <= n; ++v) outdeg_[static_cast<std::size_t>(v) - 1] = g.outdegree(v);
    }

    void set_config(ChipConfiguration c) {
        const auto n = outdeg_.size();
        if (c.chips.size() != n || c.absorbed.size() != n) {
            throw std::invalid_argument("chip configuration does not match graph size");
        }
        chips_ = std::move(c.chips);
        absorbed_ = std::move(c.absorbed);
        chips_added_ = std::move(c.chips_added);
        firings_ = 0;
        active_.clear();
        queued_.assign(n, 0);
        off_critical_ = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (chips_[i] != outdeg_[i] - 1) ++off_critical_;
            if (chips_[i] >= outdeg_[i]) enqueue(static_cast<int>(i));
        }
    }

    void add_chip_at_start() {
        if (limits_.max_chips && chips_added_ >= *limits_.max_chips) {
            throw CapExceeded(CapExceeded::Kind::Chips, snapshot(), firings_);
        }
        ++chips_added_;
        gain(g_.start - 1);
    }

    void stabilize() {
        while (!active_.empty()) {
            if (limits_.max_firings && firings_ >= *limits_.max_firings) {
                throw CapExceeded(CapExceeded::Kind::Firings, snapshot(), firings_);
            }
            fire(pop_next());
        }
#ifndef NDEBUG
        assert_conservation();
#endif
    }

    bool at_critical() const noexcept { return off_critical_ == 0; }

    ChipConfiguration snapshot() const { return {chips_, absorbed_, chips_added_}; }
    ChipConfiguration take_config() { return {std::move(chips_), std::move(absorbed_), std::move(chips_added_)}; }

    const std::vector<Natural>& absorbed() const noexcept { return absorbed_; }
    const Natural& chips_added() const noexcept { return chips_added_; }
    const Natural& firings() const noexcept { return firings_; }

private:
    void enqueue(int i) {
        if (!queued_[static_cast<std::size_t>(i)]) {
            queued_[static_cast<std::size_t>(i)] = 1;
            active_.push_back(i);
        }
    }

    int pop_next() {
        int i;
        if (order_.kind == FiringOrder::Kind::Fifo) {
            i = active_.front();
            active_.pop_front();
        } else {
            const auto idx = static_cast<std::size_t>(rng_() % active_.size());
            i = active_[idx];
            active_[idx] = active_.back();
            active_.pop_back();
        }
        queued_[static_cast<std::size_t>(i)] = 0;
        return i;
    }

    // Routes every chip-count change through one place so the off-critical
    // tally stays exact.
    template <typename F>
    void mutate_chips(int i, F&& f) {
        auto& c = chips_[static_cast<std::size_t>(i)];
        const int crit = outdeg_[static_cast<std::size_t>(i)] - 1;
        const bool was_off = (c != crit);
        f(c);
        const bool is_off = (c != crit);
        off_critical_ += static_cast<int>(is_off) - static_cast<int>(was_off);
    }

    void gain(int i) {
        mutate_chips(i, [](Natural& c) { ++c; });
        if (chips_[static_cast<std::size_t>(i)] >= outdeg_[static_cast<std::size_t>(i)]) enqueue(i);
    }

    void fire(int i) {
        const int od = outdeg_[static_cast<std::size_t>(i)];
        assert(chips_[static_cast<std::size_t>(i)] >= od);
        mutate_chips(i, [od](Natural& c) { c -= od; });
        ++absorbed_[static_cast<std::size_t>(i)];
        ++firings_;
        for (const VertexId u : g_.graph.neighbors(i + 1)) gain(u - 1);
        if (chips_[static_cast<std::size_t>(i)] >= od) enqueue(i);
    }

#ifndef NDEBUG
    // chips added == chips above the critical baseline + chips absorbed.
    void assert_conservation() const {
        Natural board = 0;
        for (std::size_t i = 0; i < chips_.size(); ++i) board += chips_[i] - (outdeg_[i] - 1);
        Natural sunk = 0;
        for (const auto& a : absorbed_) sunk += a;
        assert(board + sunk == chips_added_);
    }
#endif

    const AugmentedGraph& g_;
    FiringOrder order_;
    SimLimits limits_;
    std::mt19937_64 rng_;
    std::vector<int> outdeg_;
    std::vector<Natural> chips_;
    std::vector<Natural> absorbed_;
    Natural chips_added_{0};
    Natural firings_{0};
    std::deque<int> active_;
    std::vector<std::uint8_t> queued_;
    int off_critical_ = 0;
};

}  // namespace detail

struct StabilizeResult {
    ChipConfiguration config;
    Natural firings{0};
};

/// Fires until no game vertex holds >= its outdegree chips. The result is
/// identical for every firing order.
inline StabilizeResult stabilize(const AugmentedGraph& g, ChipConfiguration c,
                                 FiringOrder order = FiringOrder::fifo(), const SimLimits& limits = {}) {
    detail::AbacusEngine engine(g, order, limits);
    engine.set_config(std::move(c));
    engine.stabilize();
    Natural fired = engine.firings();
    return {engine.take_config(), std::move(fired)};
}

/// Runs the abacus proper: from critical loading, add one chip at the start
/// vertex and stabilize, until the board is back at critical loading. The
/// absorbed counts are the restoration function; total equals chips added.
inline RestorationTable run_to_restoration(const AugmentedGraph& g, const SimLimits& limits = {},
                                           FiringOrder order = FiringOrder::fifo()) {
    detail::AbacusEngine engine(g, order, limits);
    engine.set_config(critical_loading(g));
    do {
        engine.add_chip_at_start();
        engine.stabilize();
    } while (!engine.at_critical());

    RestorationTable table;
    table.values = engine.absorbed();
    for (const auto& v : table.values) table.total += v;
    if (table.total != engine.chips_added() || table.total != engine.firings()) {
        throw std::logic_error("abacus: absorbed totals disagree with chips added");
    }
    return table;
}

/// Period of a rooted tree, measured: hang the tree beneath a fresh apex
/// vertex, run the abacus from the apex, and count the apex's absorbed chips.
inline Natural simulated_period(const RootedTree& t, const SimLimits& limits = {}) {
    const int n = t.size();
    std::vector<VertexId> parents = t.parent_array();
    parents[static_cast<std::size_t>(t.root()) - 1] = n + 1;
    parents.push_back(0);
    const RootedTree wrapped = RootedTree::from_parents(std::move(parents));
    const RestorationTable table = run_to_restoration(AugmentedGraph::for_tree(wrapped), limits);
    return table.values[static_cast<std::size_t>(n)];
}

}  // namespace passbuck
