// Rooted trees in parent-array form: validation, structural queries, and
// seeded random generation for property tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace passbuck {

/// 1-based vertex id. 0 is reserved to mean "no parent" in parent arrays.
using VertexId = int;

enum class TreeErrorKind {
    SelfLoop,
    DuplicateEdge,
    RootNotPresent,
    NonContiguousIds,
    CycleDetected,
    Disconnected,
};

inline const char* to_string(TreeErrorKind k) {
    switch (k) {
        case TreeErrorKind::SelfLoop: return "SelfLoop";
        case TreeErrorKind::DuplicateEdge: return "DuplicateEdge";
        case TreeErrorKind::RootNotPresent: return "RootNotPresent";
        case TreeErrorKind::NonContiguousIds: return "NonContiguousIds";
        case TreeErrorKind::CycleDetected: return "CycleDetected";
        case TreeErrorKind::Disconnected: return "Disconnected";
    }
    return "UnknownTreeError";
}

/// Raised when an edge list or parent array is not a valid rooted tree.
/// what() starts with the name of the first violated condition.
class TreeError : public std::runtime_error {
public:
    TreeError(TreeErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
    TreeErrorKind kind() const noexcept { return kind_; }

private:
    TreeErrorKind kind_;
};

/// Undirected edges plus a designated root. The root is carried out-of-band;
/// edge files never embed it.
struct EdgeList {
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId root = 1;
};

/// Immutable rooted tree over vertices 1..n. parent_array()[k-1] holds the
/// parent of vertex k; the root's entry is 0. Children lists are precomputed
/// in ascending id order so every downstream fold is deterministic.
class RootedTree {
public:
    /// Validates and converts an edge list. Checks are applied in a fixed
    /// order and the first violation is reported:
    ///   SelfLoop, DuplicateEdge (scanning edges in input order),
    ///   RootNotPresent (root must be an endpoint, unless there are no edges),
    ///   NonContiguousIds (endpoints must cover 1..max exactly),
    ///   then a traversal from the root: CycleDetected on a back edge within
    ///   the root's component, Disconnected if any vertex is unreached.
    static RootedTree from_edge_list(const EdgeList& e) {
        const auto& edges = e.edges;
        for (const auto& [u, v] : edges) {
            if (u == v) throw TreeError(TreeErrorKind::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
        }

        std::unordered_set<std::uint64_t> seen_pairs;
        seen_pairs.reserve(edges.size() * 2);
        for (const auto& [u, v] : edges) {
            if (u < 1 || v < 1) {
                throw TreeError(TreeErrorKind::NonContiguousIds, "vertex ids must be positive");
            }
            const auto [lo, hi] = std::minmax(u, v);
            const auto key = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
            if (!seen_pairs.insert(key).second) {
                throw TreeError(TreeErrorKind::DuplicateEdge,
                                "edge " + std::to_string(u) + "-" + std::to_string(v) + " repeated");
            }
        }

        if (edges.empty()) {
            if (e.root != 1) {
                throw TreeError(TreeErrorKind::NonContiguousIds,
                                "a single-vertex tree must consist of vertex 1, got root " + std::to_string(e.root));
            }
            return RootedTree({0}, 1);
        }

        std::vector<VertexId> ids;
        ids.reserve(edges.size() * 2);
        for (const auto& [u, v] : edges) {
            ids.push_back(u);
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

        if (!std::binary_search(ids.begin(), ids.end(), e.root)) {
            throw TreeError(TreeErrorKind::RootNotPresent,
                            "root " + std::to_string(e.root) + " does not appear in any edge");
        }
        const VertexId max_id = ids.back();
        if (static_cast<std::size_t>(max_id) != ids.size()) {
            throw TreeError(TreeErrorKind::NonContiguousIds,
                            "vertex ids must cover 1.." + std::to_string(max_id) + " without gaps");
        }

        const int n = max_id;
        std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n) + 1);
        for (const auto& [u, v] : edges) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }

        std::vector<VertexId> parents(static_cast<std::size_t>(n), -1);
        std::vector<VertexId> queue{e.root};
        parents[static_cast<std::size_t>(e.root) - 1] = 0;
        int reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            for (const VertexId u : adj[static_cast<std::size_t>(v)]) {
                if (parents[static_cast<std::size_t>(u) - 1] == -1) {
                    parents[static_cast<std::size_t>(u) - 1] = v;
                    queue.push_back(u);
                    ++reached;
                } else if (u != parents[static_cast<std::size_t>(v) - 1]) {
                    throw TreeError(TreeErrorKind::CycleDetected,
                                    "edge " + std::to_string(v) + "-" + std::to_string(u) + " closes a cycle");
                }
            }
        }
        if (reached != n) {
            throw TreeError(TreeErrorKind::Disconnected,
                            std::to_string(n - reached) + " vertices unreachable from root " + std::to_string(e.root));
        }
        return RootedTree(std::move(parents), e.root);
    }

    /// Validates a raw parent array (entry k-1 = parent of k, 0 at the root).
    static RootedTree from_parents(std::vector<VertexId> parents) {
        const int n = static_cast<int>(parents.size());
        if (n == 0) throw std::invalid_argument("from_parents: empty parent array");
        VertexId root = 0;
        int zeros = 0;
        for (int k = 1; k <= n; ++k) {
            const VertexId p = parents[static_cast<std::size_t>(k) - 1];
            if (p == 0) {
                root = k;
                ++zeros;
            } else if (p < 1 || p > n) {
                throw TreeError(TreeErrorKind::NonContiguousIds,
                                "parent of vertex " + std::to_string(k) + " out of range: " + std::to_string(p));
            }
        }
        if (zeros == 0) throw TreeError(TreeErrorKind::RootNotPresent, "no entry equals 0");
        if (zeros > 1) throw TreeError(TreeErrorKind::Disconnected, std::to_string(zeros) + " root entries form a forest");

        // Walk parent chains with memoisation; a chain that bites its own
        // tail before reaching the root is a cycle.
        enum : std::uint8_t { kUnseen = 0, kOnPath = 1, kDone = 2 };
        std::vector<std::uint8_t> state(static_cast<std::size_t>(n), kUnseen);
        state[static_cast<std::size_t>(root) - 1] = kDone;
        std::vector<VertexId> path;
        for (VertexId k = 1; k <= n; ++k) {
            VertexId v = k;
            path.clear();
            while (state[static_cast<std::size_t>(v) - 1] == kUnseen) {
                state[static_cast<std::size_t>(v) - 1] = kOnPath;
                path.push_back(v);
                v = parents[static_cast<std::size_t>(v) - 1];
            }
            if (state[static_cast<std::size_t>(v) - 1] == kOnPath) {
                throw TreeError(TreeErrorKind::CycleDetected,
                                "parent chain from vertex " + std::to_string(k) + " never reaches the root");
            }
            for (const VertexId w : path) state[static_cast<std::size_t>(w) - 1] = kDone;
        }
        return RootedTree(std::move(parents), root);
    }

    int size() const noexcept { return static_cast<int>(parents_.size()); }

    VertexId root() const noexcept { return root_; }

    /// Parent of k; 0 for the root.
    VertexId parent(VertexId k) const {
        check_id(k);
        return parents_[static_cast<std::size_t>(k) - 1];
    }

    /// Children of k in ascending id order.
    const std::vector<VertexId>& children(VertexId k) const {
        check_id(k);
        return children_[static_cast<std::size_t>(k) - 1];
    }

    bool is_leaf(VertexId j) const { return children(j).empty(); }

    /// Every vertex strictly below j, ascending. Iterative on an explicit
    /// stack: path-shaped trees of any depth cannot overflow the call stack.
    std::vector<VertexId> descendants(VertexId j) const {
        check_id(j);
        std::vector<VertexId> out;
        std::vector<VertexId> stack(children(j).begin(), children(j).end());
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            out.push_back(v);
            const auto& cs = children(v);
            stack.insert(stack.end(), cs.begin(), cs.end());
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Entry k-1 = parent of vertex k; 0 at the root.
    const std::vector<VertexId>& parent_array() const noexcept { return parents_; }

    /// Edges as (parent, child) pairs for every non-root vertex, ascending by
    /// child; root carried alongside. from_edge_list on the result rebuilds
    /// this tree exactly.
    EdgeList to_edge_list() const {
        EdgeList e;
        e.root = root_;
        e.edges.reserve(parents_.size() - 1);
        for (VertexId k = 1; k <= size(); ++k) {
            if (k != root_) e.edges.emplace_back(parent(k), k);
        }
        return e;
    }

    friend bool operator==(const RootedTree& a, const RootedTree& b) = default;

private:
    RootedTree(std::vector<VertexId> parents, VertexId root)
        : parents_(std::move(parents)), root_(root) {
        children_.resize(parents_.size());
        for (VertexId k = 1; k <= size(); ++k) {
            const VertexId p = parents_[static_cast<std::size_t>(k) - 1];
            if (p != 0) children_[static_cast<std::size_t>(p) - 1].push_back(k);
        }
    }

    void check_id(VertexId k) const {
        if (k < 1 || k > size()) {
            throw std::out_of_range("vertex id " + std::to_string(k) + " outside 1.." + std::to_string(size()));
        }
    }

    std::vector<VertexId> parents_;
    std::vector<std::vector<VertexId>> children_;
    VertexId root_ = 0;
};

/// Random labeled rooted tree on n vertices, deterministic per seed.
///
/// Drawn by decoding a random Prüfer sequence (uniform over labeled trees up
/// to the negligible bias of the modulo draw) and picking the root uniformly.
/// Bounded draws use mt19937_64 directly so output is identical across
/// platforms and standard libraries.
inline RootedTree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be at least 1");
    std::mt19937_64 rng(seed);
    const auto draw = [&rng](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

    if (n == 1) return RootedTree::from_parents({0});

    EdgeList e;
    if (n == 2) {
        e.edges = {{1, 2}};
    } else {
        std::vector<VertexId> seq(static_cast<std::size_t>(n) - 2);
        for (auto& x : seq) x = 1 + draw(n);

        // Linear Prüfer decode.
        std::vector<int> deg(static_cast<std::size_t>(n) + 1, 1);
        for (const VertexId x : seq) ++deg[static_cast<std::size_t>(x)];
        int ptr = 1;
        while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
        VertexId leaf = ptr;
        e.edges.reserve(static_cast<std::size_t>(n) - 1);
        for (const VertexId x : seq) {
            e.edges.emplace_back(leaf, x);
            if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
                leaf = x;
            } else {
                ++ptr;
                while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
                leaf = ptr;
            }
        }
        e.edges.emplace_back(leaf, n);
    }
    e.root = 1 + draw(n);
    return RootedTree::from_edge_list(e);
}

}  // namespace passbuck
