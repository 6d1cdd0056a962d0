// DOT rendering of the augmented abacus graph.
#pragma once

#include <sstream>
#include <string>

#include "passbuck/abacus.hpp"
#include "passbuck/restoration.hpp"
#include "passbuck/tree.hpp"

namespace passbuck {

/// Directed DOT graph of the abacus for a rooted tree: game vertices labeled
/// with their initial chip count (root green, others gray), one pink
/// absorbing partner each. With `with_restoration_values`, absorbing nodes
/// carry the computed restoration function instead of their names.
inline std::string export_dot(const RootedTree& t, bool with_restoration_values = false) {
    const AugmentedGraph g = AugmentedGraph::for_tree(t);
    RestorationTable table;
    if (with_restoration_values) table = restoration_full(t);

    std::ostringstream out;
    out << "digraph stochastic_abacus {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=circle, style=filled];\n";
    for (VertexId v = 1; v <= t.size(); ++v) {
        out << "  v" << v << " [label=\"" << (g.outdegree(v) - 1) << "\", fillcolor="
            << (v == t.root() ? "green" : "gray") << "];\n";
    }
    for (VertexId v = 1; v <= t.size(); ++v) {
        out << "  a" << v << " [label=\"";
        if (with_restoration_values) {
            out << table.values[static_cast<std::size_t>(v) - 1];
        } else {
            out << "a" << v;
        }
        out << "\", fillcolor=pink];\n";
    }
    for (VertexId v = 1; v <= t.size(); ++v) {
        for (const VertexId u : g.graph.neighbors(v)) out << "  v" << v << " -> v" << u << ";\n";
        out << "  v" << v << " -> a" << v << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace passbuck
