// Connected undirected graphs for the simulator and the Markov oracle.
// The game itself is defined on graphs; only the direct recursion is
// tree-specific.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "passbuck/tree.hpp"

namespace passbuck {

class UndirectedGraph {
public:
    /// Validates ids in 1..n, no self-loops, no duplicate edges, connected.
    /// Cycles are allowed here, unlike in RootedTree.
    static UndirectedGraph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        if (n < 1) throw std::invalid_argument("from_edges: n must be at least 1");
        std::unordered_set<std::uint64_t> seen_pairs;
        seen_pairs.reserve(edges.size() * 2);
        UndirectedGraph g;
        g.adj_.resize(static_cast<std::size_t>(n));
        for (const auto& [u, v] : edges) {
            if (u == v) throw TreeError(TreeErrorKind::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
            if (u < 1 || u > n || v < 1 || v > n) {
                throw TreeError(TreeErrorKind::NonContiguousIds,
                                "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
            const auto [lo, hi] = std::minmax(u, v);
            const auto key = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
            if (!seen_pairs.insert(key).second) {
                throw TreeError(TreeErrorKind::DuplicateEdge,
                                "edge " + std::to_string(u) + "-" + std::to_string(v) + " repeated");
            }
            g.adj_[static_cast<std::size_t>(u) - 1].push_back(v);
            g.adj_[static_cast<std::size_t>(v) - 1].push_back(u);
        }

        std::vector<char> visited(static_cast<std::size_t>(n), 0);
        std::vector<VertexId> queue{1};
        visited[0] = 1;
        int reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const VertexId u : g.adj_[static_cast<std::size_t>(queue[head]) - 1]) {
                if (!visited[static_cast<std::size_t>(u) - 1]) {
                    visited[static_cast<std::size_t>(u) - 1] = 1;
                    queue.push_back(u);
                    ++reached;
                }
            }
        }
        if (reached != n) {
            throw TreeError(TreeErrorKind::Disconnected, std::to_string(n - reached) + " vertices unreachable");
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    static UndirectedGraph from_tree(const RootedTree& t) {
        UndirectedGraph g;
        g.adj_.resize(static_cast<std::size_t>(t.size()));
        for (VertexId k = 1; k <= t.size(); ++k) {
            const VertexId p = t.parent(k);
            if (p != 0) {
                g.adj_[static_cast<std::size_t>(k) - 1].push_back(p);
                g.adj_[static_cast<std::size_t>(p) - 1].push_back(k);
            }
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    int size() const noexcept { return static_cast<int>(adj_.size()); }

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    /// Neighbors in ascending id order.
    const std::vector<VertexId>& neighbors(VertexId v) const {
        if (v < 1 || v > size()) {
            throw std::out_of_range("vertex id " + std::to_string(v) + " outside 1.." + std::to_string(size()));
        }
        return adj_[static_cast<std::size_t>(v) - 1];
    }

private:
    std::vector<std::vector<VertexId>> adj_;
};

}  // namespace passbuck
