#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "passbuck/cli.hpp"

using namespace passbuck;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kFixtures = PASSBUCK_FIXTURE_DIR;

}  // namespace

TEST_CASE("restoration command prints the table") {
    const CliResult r = run({"restoration", kFixtures + "/test1.edges", "--root", "8"});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "1 13\n2 13\n3 13\n4 26\n5 7\n6 14\n7 35\n8 91\n"
          "total 212\n");

    const CliResult single = run({"restoration", kFixtures + "/single.edges", "--root", "1"});
    CHECK(single.out == "1 1\ntotal 1\n");
}

TEST_CASE("restoration on the 26-vertex fixture") {
    const CliResult r = run({"restoration", kFixtures + "/test2.edges", "--root", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.starts_with("1 27783522\n2 10297681\n3 3109521\n"));
    CHECK(r.out.find("\n26 1324674\n") != std::string::npos);
    CHECK(r.out.ends_with("total 64663283\n"));
}

TEST_CASE("probabilities output is byte-identical across engines") {
    const std::vector<std::string> base{"probabilities", kFixtures + "/test1.edges", "--root", "8"};

    std::vector<std::string> direct = base;
    direct.insert(direct.end(), {"--method", "direct"});
    std::vector<std::string> oracle = base;
    oracle.insert(oracle.end(), {"--method", "oracle"});
    std::vector<std::string> simulate = base;
    simulate.insert(simulate.end(), {"--method", "simulate"});

    const CliResult rd = run(direct);
    const CliResult ro = run(oracle);
    const CliResult rs = run(simulate);
    CHECK(rd.code == kExitOk);
    CHECK(rd.out ==
          "1 13/212\n2 13/212\n3 13/212\n4 13/106\n5 7/212\n6 7/106\n7 35/212\n8 91/212\n");
    CHECK(ro.out == rd.out);
    CHECK(rs.out == rd.out);
}

TEST_CASE("probabilities decimal formatting") {
    const CliResult r = run({"probabilities", kFixtures + "/test1.edges", "--root", "8",
                             "--format", "decimal:6"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.ends_with("8 0.429245\n"));

    const CliResult single = run({"probabilities", kFixtures + "/single.edges", "--root", "1"});
    CHECK(single.out == "1 1\n");

    const CliResult bad = run({"probabilities", kFixtures + "/test1.edges", "--root", "8",
                               "--format", "decimal:x"});
    CHECK(bad.code == kExitUsage);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args{"probabilities", kFixtures + "/test2.edges", "--root", "1"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("validation failures exit 2 and name the condition") {
    const CliResult cycle = run({"restoration", kFixtures + "/cycle.edges", "--root", "1"});
    CHECK(cycle.code == kExitInvalidInput);
    CHECK(cycle.err.find("CycleDetected") != std::string::npos);
    CHECK(cycle.out.empty());

    const CliResult missing = run({"restoration", kFixtures + "/nope.edges", "--root", "1"});
    CHECK(missing.code == kExitInvalidInput);

    const CliResult bad_root = run({"restoration", kFixtures + "/test1.edges", "--root", "9"});
    CHECK(bad_root.code == kExitInvalidInput);
    CHECK(bad_root.err.find("RootNotPresent") != std::string::npos);
}

TEST_CASE("capped simulation exits 3") {
    const CliResult r = run({"probabilities", kFixtures + "/test1.edges", "--root", "8",
                             "--method", "simulate", "--max-chips", "5"});
    CHECK(r.code == kExitCapExceeded);
    CHECK(r.err.find("ChipCapExceeded") != std::string::npos);
}

TEST_CASE("bench emits one record per engine") {
    const CliResult r = run({"bench", kFixtures + "/test1.edges", "--root", "8"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string direct_line, sim_line;
    REQUIRE(std::getline(lines, direct_line));
    REQUIRE(std::getline(lines, sim_line));
    CHECK(direct_line.starts_with("method=direct n=8 chips_added=212 firings=0 wall_ms="));
    CHECK(direct_line.ends_with("completed=true"));
    CHECK(sim_line.starts_with("method=simulate n=8 chips_added=212 firings=212 wall_ms="));
    CHECK(sim_line.ends_with("completed=true"));
}

TEST_CASE("bench reports a capped simulation as partial, exit 0") {
    const CliResult r = run({"bench", kFixtures + "/test2.edges", "--root", "1", "--max-chips", "1000"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string direct_line, sim_line;
    REQUIRE(std::getline(lines, direct_line));
    REQUIRE(std::getline(lines, sim_line));
    CHECK(direct_line.starts_with("method=direct n=26 chips_added=64663283 firings=0"));
    CHECK(sim_line.starts_with("method=simulate n=26 chips_added=1000 firings="));
    CHECK(sim_line.ends_with("completed=false"));
}

TEST_CASE("export-dot renders the augmented graph") {
    const CliResult r = run({"export-dot", kFixtures + "/test1.edges", "--root", "8"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("v8 [label=\"2\", fillcolor=green]") != std::string::npos);
    CHECK(r.out.find("v4 [label=\"4\", fillcolor=gray]") != std::string::npos);
    for (int v = 1; v <= 8; ++v) {
        CHECK(r.out.find("a" + std::to_string(v) + " [label=") != std::string::npos);
        CHECK(r.out.find("v" + std::to_string(v) + " -> a" + std::to_string(v) + ";") != std::string::npos);
    }

    const CliResult labeled =
        run({"export-dot", kFixtures + "/test1.edges", "--root", "8", "--with-abacus-result"});
    CHECK(labeled.out.find("a8 [label=\"91\", fillcolor=pink]") != std::string::npos);

    const CliResult single = run({"export-dot", kFixtures + "/single.edges", "--root", "1"});
    CHECK(single.out.find("v1 [label=\"0\", fillcolor=green]") != std::string::npos);
    CHECK(single.out.find("a1 [") != std::string::npos);
}

TEST_CASE("gen-random is deterministic and round-trips") {
    const CliResult a = run({"gen-random", "--n", "5", "--seed", "7"});
    const CliResult b = run({"gen-random", "--n", "5", "--seed", "7"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);

    const CliResult one = run({"gen-random", "--n", "1"});
    CHECK(one.out == "# root 1\n");

    const CliResult zero = run({"gen-random", "--n", "0"});
    CHECK(zero.code == kExitInvalidInput);

    // output is accepted by the restoration command
    const CliResult gen = run({"gen-random", "--n", "8", "--seed", "3"});
    REQUIRE(gen.code == kExitOk);
    const std::string root_line = gen.out.substr(0, gen.out.find('\n'));
    REQUIRE(root_line.starts_with("# root "));
    const std::string root = root_line.substr(7);

    const std::string path = "/tmp/passbuck_gen_random_test.edges";
    {
        std::ofstream f(path);
        f << gen.out;
    }
    const CliResult resto = run({"restoration", path, "--root", root});
    CHECK(resto.code == kExitOk);
    CHECK(resto.out.find("total ") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({"restoration"}).code == kExitUsage);                       // missing args
    CHECK(run({"no-such-command"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);                                    // subcommand required
    CHECK(run({"probabilities", kFixtures + "/test1.edges", "--root", "8",
               "--method", "psychic"})
              .code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}
