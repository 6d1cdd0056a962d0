// Independent verification engine: exact absorption probabilities of the
// pass-the-buck chain via rational Gaussian elimination. Shares nothing with
// the restoration recursion beyond the graph type.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "passbuck/graph.hpp"
#include "passbuck/numeric.hpp"
#include "passbuck/tree.hpp"

namespace passbuck {

/// From a vertex of degree k the buck moves to each neighbor with
/// probability 1/(k+1) and is absorbed (that vertex wins) with 1/(k+1).
struct GameChain {
    UndirectedGraph graph;
    VertexId start = 1;

    Rational transition_probability(VertexId from, VertexId to) const {
        const auto& nbrs = graph.neighbors(from);
        for (const VertexId u : nbrs) {
            if (u == to) return Rational(1, graph.degree(from) + 1);
        }
        return Rational(0);
    }

    Rational absorb_probability(VertexId v) const { return Rational(1, graph.degree(v) + 1); }
};

/// Probability the game ends at each vertex, given the start vertex.
struct AbsorptionVector {
    std::vector<Rational> probabilities;

    friend bool operator==(const AbsorptionVector&, const AbsorptionVector&) = default;
};

inline GameChain build_chain(const UndirectedGraph& g, VertexId start) {
    if (start < 1 || start > g.size()) {
        throw std::out_of_range("start vertex " + std::to_string(start) + " outside 1.." + std::to_string(g.size()));
    }
    return {g, start};
}

/// Solves for the expected visit counts y of each transient state from the
/// start (one dense rational elimination with pivoting on nonzero entries),
/// then converts: absorption at v = y(v) / (degree(v) + 1). Exact throughout.
inline AbsorptionVector absorption_probabilities(const GameChain& chain) {
    const int n = chain.graph.size();
    const auto idx = [](VertexId v) { return static_cast<std::size_t>(v) - 1; };

    // A = (I - Q)^T, b = e_start, where Q is the transient transition matrix.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0));
    for (VertexId v = 1; v <= n; ++v) {
        a[idx(v)][idx(v)] = 1;
        const Rational step(1, chain.graph.degree(v) + 1);
        for (const VertexId u : chain.graph.neighbors(v)) a[idx(u)][idx(v)] -= step;
    }
    b[idx(chain.start)] = 1;

    for (std::size_t col = 0; col < static_cast<std::size_t>(n); ++col) {
        std::size_t pivot = col;
        while (pivot < static_cast<std::size_t>(n) && a[pivot][col] == 0) ++pivot;
        if (pivot == static_cast<std::size_t>(n)) {
            throw std::logic_error("absorption_probabilities: singular system (invalid chain)");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);

        const Rational inv = Rational(1) / a[col][col];
        for (auto& x : a[col]) x *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < static_cast<std::size_t>(n); ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t k = col; k < static_cast<std::size_t>(n); ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }

    AbsorptionVector result;
    result.probabilities.reserve(static_cast<std::size_t>(n));
    Rational sum{0};
    for (VertexId v = 1; v <= n; ++v) {
        Rational p = b[idx(v)] * Rational(1, chain.graph.degree(v) + 1);
        sum += p;
        result.probabilities.push_back(std::move(p));
    }
    if (sum != 1) throw std::logic_error("absorption_probabilities: probabilities do not sum to 1");
    return result;
}

}  // namespace passbuck
