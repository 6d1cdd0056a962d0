// Edge-list text format: one edge per line as two whitespace-separated
// positive integers; blank lines and '#' comments are ignored. The root is
// never embedded in the file; callers supply it out-of-band.
#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "passbuck/tree.hpp"

namespace passbuck {

class EdgeListParseError : public std::runtime_error {
public:
    EdgeListParseError(int line, const std::string& detail)
        : std::runtime_error("ParseError: line " + std::to_string(line) + ": " + detail), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& detail) : std::runtime_error(detail) {}
};

inline EdgeList parse_edge_list(std::istream& in, VertexId root) {
    EdgeList e;
    e.root = root;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\f\v") == std::string::npos) continue;  // blank or comment-only

        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u >> v)) throw EdgeListParseError(lineno, "expected two positive integers");
        std::string extra;
        if (fields >> extra) throw EdgeListParseError(lineno, "trailing content '" + extra + "'");
        if (u < 1 || v < 1) throw EdgeListParseError(lineno, "vertex ids must be positive");
        if (u > std::numeric_limits<VertexId>::max() || v > std::numeric_limits<VertexId>::max()) {
            throw EdgeListParseError(lineno, "vertex id too large");
        }
        e.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return e;
}

inline EdgeList parse_edge_list_file(const std::string& path, VertexId root) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge file: " + path);
    return parse_edge_list(in, root);
}

/// Writes a tree in the text format, self-describing: a "# root R" comment
/// first, then one "parent child" line per non-root vertex in ascending
/// child order. Byte-deterministic.
inline void write_edge_list(std::ostream& out, const RootedTree& t) {
    out << "# root " << t.root() << "\n";
    for (VertexId k = 1; k <= t.size(); ++k) {
        if (k != t.root()) out << t.parent(k) << " " << k << "\n";
    }
}

}  // namespace passbuck
