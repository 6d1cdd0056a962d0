#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "passbuck/edge_io.hpp"

using namespace passbuck;

TEST_CASE("parse_edge_list skips blanks and comments") {
    std::istringstream in(
        "# a tree\n"
        "\n"
        "1 2   # trailing comment\n"
        "  2 3\n");
    const EdgeList e = parse_edge_list(in, 1);
    CHECK(e.edges == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {2, 3}});
    CHECK(e.root == 1);
}

TEST_CASE("parse_edge_list rejects malformed lines") {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in, 1);
    };
    CHECK_THROWS_AS(parse("1\n"), EdgeListParseError);
    CHECK_THROWS_AS(parse("1 2 3\n"), EdgeListParseError);
    CHECK_THROWS_AS(parse("1 x\n"), EdgeListParseError);
    CHECK_THROWS_AS(parse("0 2\n"), EdgeListParseError);
    CHECK_THROWS_AS(parse("-1 2\n"), EdgeListParseError);
    try {
        parse("1 2\nbogus\n");
        FAIL("expected parse error");
    } catch (const EdgeListParseError& err) {
        CHECK(err.line() == 2);
    }
}

TEST_CASE("write_edge_list round-trips through the parser") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RootedTree t = random_tree(1 + static_cast<int>(seed % 9), seed + 100);
        std::ostringstream out;
        write_edge_list(out, t);
        std::istringstream in(out.str());
        CHECK(RootedTree::from_edge_list(parse_edge_list(in, t.root())) == t);
    }
}

TEST_CASE("missing file raises IoError") {
    CHECK_THROWS_AS(parse_edge_list_file("/nonexistent/file.edges", 1), IoError);
}
