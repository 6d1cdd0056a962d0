// Command-line surface: restoration tables, win probabilities by any of the
// three engines, a simulation-vs-direct benchmark, DOT export, and a seeded
// random tree generator. Runs in-process so tests can drive it byte-for-byte.
#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "passbuck/abacus.hpp"
#include "passbuck/dot.hpp"
#include "passbuck/edge_io.hpp"
#include "passbuck/markov.hpp"
#include "passbuck/restoration.hpp"
#include "passbuck/tree.hpp"

namespace passbuck {

// Exit codes, documented in --help and the README.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapExceeded = 3;

/// One flat machine-readable line per engine run. For the direct engine,
/// chips_added is the computed restoration total (what a full simulation
/// would have added) and firings is 0.
struct RunReport {
    std::string method;
    int n = 0;
    Natural chips_added;
    Natural firings;
    double wall_ms = 0.0;
    bool completed = true;

    std::string record() const {
        std::ostringstream out;
        out << "method=" << method << " n=" << n << " chips_added=" << chips_added << " firings=" << firings
            << " wall_ms=" << std::fixed << std::setprecision(3) << wall_ms
            << " completed=" << (completed ? "true" : "false");
        return out.str();
    }
};

namespace detail {

struct CliOptions {
    std::string edge_file;
    VertexId root = 1;
    std::string method = "direct";
    std::string format = "rational";
    std::optional<std::uint64_t> max_firings;
    std::optional<std::uint64_t> max_chips;
    bool with_abacus_result = false;
    int gen_n = 1;
    std::uint64_t gen_seed = 0;
};

inline SimLimits make_limits(const CliOptions& opt) {
    SimLimits limits;
    if (opt.max_firings) limits.max_firings = Natural(*opt.max_firings);
    if (opt.max_chips) limits.max_chips = Natural(*opt.max_chips);
    return limits;
}

inline RootedTree load_tree(const CliOptions& opt) {
    return RootedTree::from_edge_list(parse_edge_list_file(opt.edge_file, opt.root));
}

inline double elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from).count();
}

inline void print_table(std::ostream& out, const RestorationTable& table) {
    for (std::size_t i = 0; i < table.values.size(); ++i) {
        out << (i + 1) << " " << table.values[i] << "\n";
    }
    out << "total " << table.total << "\n";
}

inline void print_probabilities(std::ostream& out, const std::vector<Rational>& probs, const std::string& format) {
    int decimals = -1;
    if (format.rfind("decimal:", 0) == 0) decimals = std::stoi(format.substr(8));
    for (std::size_t i = 0; i < probs.size(); ++i) {
        out << (i + 1) << " ";
        if (decimals >= 0) {
            out << format_decimal(probs[i], decimals);
        } else {
            out << probs[i];
        }
        out << "\n";
    }
}

inline std::vector<Rational> probabilities_by(const std::string& method, const RootedTree& tree,
                                              const SimLimits& limits) {
    if (method == "direct") return win_probabilities(restoration_full(tree)).probabilities;
    if (method == "simulate") {
        return win_probabilities(run_to_restoration(AugmentedGraph::for_tree(tree), limits)).probabilities;
    }
    const UndirectedGraph g = UndirectedGraph::from_tree(tree);
    return absorption_probabilities(build_chain(g, tree.root())).probabilities;
}

inline int cmd_bench(const CliOptions& opt, std::ostream& out) {
    const RootedTree tree = load_tree(opt);
    const int n = tree.size();

    auto t0 = std::chrono::steady_clock::now();
    const RestorationTable direct = restoration_full(tree);
    RunReport direct_report{"direct", n, direct.total, Natural(0), elapsed_ms(t0), true};
    out << direct_report.record() << "\n";

    RunReport sim_report{"simulate", n, Natural(0), Natural(0), 0.0, true};
    t0 = std::chrono::steady_clock::now();
    try {
        const RestorationTable table = run_to_restoration(AugmentedGraph::for_tree(tree), make_limits(opt));
        sim_report.chips_added = table.total;
        sim_report.firings = table.total;  // one chip reaches an absorber per firing
    } catch (const CapExceeded& cap) {
        sim_report.completed = false;
        sim_report.chips_added = cap.partial().chips_added;
        sim_report.firings = cap.firings();
    }
    sim_report.wall_ms = elapsed_ms(t0);
    out << sim_report.record() << "\n";
    return kExitOk;  // a capped simulation is a reported outcome, not a failure
}

}  // namespace detail

/// Parses and runs one CLI invocation (argv without the program name).
/// Returns the process exit code; output goes to the given streams.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::CliOptions;
    CliOptions opt;

    CLI::App app{
        "Win probabilities for pass-the-buck on rooted trees, three ways:\n"
        "direct restoration recursion, Engel's stochastic abacus (chip-firing\n"
        "simulation), and an exact absorbing-Markov-chain solve.\n"
        "Exit codes: 0 ok, 1 usage, 2 invalid input, 3 simulation cap exceeded."};
    app.name("passbuck");
    app.require_subcommand(1);

    const auto add_tree_options = [&opt](CLI::App* cmd) {
        cmd->add_option("edge-file", opt.edge_file, "edge list file: one 'u v' pair per line, '#' comments")
            ->required();
        cmd->add_option("-r,--root", opt.root, "root (and start) vertex")->required();
    };
    const auto add_limit_options = [&opt](CLI::App* cmd) {
        cmd->add_option("--max-firings", opt.max_firings, "abort simulation after this many firing events");
        cmd->add_option("--max-chips", opt.max_chips, "abort simulation after this many added chips");
    };

    CLI::App* restoration = app.add_subcommand("restoration", "print the restoration table (direct engine)");
    add_tree_options(restoration);

    CLI::App* probabilities = app.add_subcommand("probabilities", "print per-vertex win probabilities");
    add_tree_options(probabilities);
    probabilities->add_option("-m,--method", opt.method, "engine to use")
        ->check(CLI::IsMember({"direct", "simulate", "oracle"}))
        ->capture_default_str();
    probabilities->add_option("-f,--format", opt.format, "'rational' or 'decimal:<digits>'")
        ->check([](const std::string& value) -> std::string {
            if (value == "rational") return {};
            if (value.rfind("decimal:", 0) == 0) {
                const std::string digits = value.substr(8);
                if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) return {};
            }
            return "format must be 'rational' or 'decimal:<digits>'";
        })
        ->capture_default_str();
    add_limit_options(probabilities);

    CLI::App* bench = app.add_subcommand("bench", "run direct and simulation engines, one report line each");
    add_tree_options(bench);
    add_limit_options(bench);

    CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "emit the augmented abacus graph as DOT");
    add_tree_options(export_dot_cmd);
    export_dot_cmd->add_flag("--with-abacus-result", opt.with_abacus_result,
                             "label absorbing vertices with restoration values");

    CLI::App* gen_random = app.add_subcommand("gen-random", "emit a random tree in edge-list format");
    gen_random->add_option("-n,--n", opt.gen_n, "number of vertices")->required();
    gen_random->add_option("-s,--seed", opt.gen_seed, "random seed")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("passbuck");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (restoration->parsed()) {
            detail::print_table(out, restoration_full(detail::load_tree(opt)));
        } else if (probabilities->parsed()) {
            const RootedTree tree = detail::load_tree(opt);
            detail::print_probabilities(out, detail::probabilities_by(opt.method, tree, detail::make_limits(opt)),
                                        opt.format);
        } else if (bench->parsed()) {
            return detail::cmd_bench(opt, out);
        } else if (export_dot_cmd->parsed()) {
            out << export_dot(detail::load_tree(opt), opt.with_abacus_result);
        } else if (gen_random->parsed()) {
            write_edge_list(out, random_tree(opt.gen_n, opt.gen_seed));
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " after " << e.partial().chips_added << " chips and " << e.firings()
            << " firings\n";
        return kExitCapExceeded;
    } catch (const TreeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const EdgeListParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace passbuck
