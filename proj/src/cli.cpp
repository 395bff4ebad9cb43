#include "hamdirac/cli.hpp"

#include "hamdirac/check.hpp"
#include "hamdirac/formats.hpp"
#include "hamdirac/generators.hpp"
#include "hamdirac/hamiltonian.hpp"
#include "hamdirac/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace hamdirac::cli {

namespace {

using formats::Format;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Format resolve_format(const std::string& flag, const std::string& path) {
    if (!flag.empty()) {
        if (auto f = formats::parse_format_name(flag)) return *f;
        throw UsageError("unknown format '" + flag + "'");
    }
    if (auto f = formats::format_from_path(path)) return *f;
    return Format::graph6;
}

/// One decoded graph or the reason it could not be decoded.
struct Input {
    std::optional<Graph> graph;
    std::string error;
};

std::vector<Input> read_graphs(const std::string& path, const std::string& format_flag,
                               std::istream& in, std::ostream& err) {
    const Format format = resolve_format(format_flag, path);
    const std::string text = slurp(path, in);
    std::vector<Input> out;
    if (format == Format::graph6) {
        // One graph per line; a bad line does not stop the batch.
        std::istringstream lines(text);
        std::string line;
        for (std::size_t number = 1; std::getline(lines, line); ++number) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                out.push_back({formats::decode_graph6(line, number), {}});
            } catch (const formats::ParseError& e) {
                out.push_back({std::nullopt, e.what()});
            }
        }
        if (out.empty()) out.push_back({std::nullopt, "no graph in input"});
        return out;
    }
    try {
        std::vector<std::string> warnings;
        Graph g = formats::decode(format, text, &warnings);
        for (const auto& w : warnings) err << "warning: " << w << '\n';
        out.push_back({std::move(g), {}});
    } catch (const formats::ParseError& e) {
        out.push_back({std::nullopt, e.what()});
    } catch (const GraphError& e) {
        out.push_back({std::nullopt, e.what()});
    }
    return out;
}

void print_vertices(std::ostream& out, std::span<const VertexId> vs) {
    for (auto v : vs) out << ' ' << v;
}

int print_outcome(std::ostream& out, const SolveOutcome& outcome) {
    if (outcome.hamiltonian()) {
        out << "HAMILTONIAN";
        print_vertices(out, outcome.cycle().vertices);
        out << '\n';
        return exit_ok;
    }
    const auto& cert = outcome.certificate();
    if (const auto* cut = std::get_if<CutVertex>(&cert)) {
        out << "NONE CUT_VERTEX " << cut->vertex << '\n';
    } else if (const auto* big = std::get_if<BigIndependentComponent>(&cert)) {
        out << "NONE INDEPENDENT_SET";
        print_vertices(out, big->vertices);
        out << '\n';
    } else {
        out << "NONE ROTATION_EXHAUSTED\n";
    }
    return exit_none;
}

int cmd_solve(const std::vector<Input>& inputs, bool stats, std::ostream& out, std::ostream& err) {
    int code = exit_ok;
    for (const auto& input : inputs) {
        if (!input.graph) {
            err << "error: " << input.error << '\n';
            out << "ERROR\n";
            code = std::max(code, exit_usage);
            continue;
        }
        const Graph& g = *input.graph;
        try {
            const auto start = std::chrono::steady_clock::now();
            const SolveOutcome outcome = find_hamiltonian(g);
            const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
            code = std::max(code, print_outcome(out, outcome));
            if (stats) {
                err << "n=" << g.order() << " edges=" << g.edge_count() << " ms=" << std::fixed
                    << std::setprecision(3) << took.count() << '\n';
            }
        } catch (const GraphError& e) {
            err << "error: " << e.what() << '\n';
            out << "ERROR\n";
            code = std::max(code, exit_usage);
        }
    }
    return code;
}

int cmd_oracle(const std::vector<Input>& inputs, std::ostream& out, std::ostream& err) {
    int code = exit_ok;
    for (const auto& input : inputs) {
        if (!input.graph) {
            err << "error: " << input.error << '\n';
            out << "ERROR\n";
            code = std::max(code, exit_usage);
            continue;
        }
        try {
            if (auto cycle = oracle::hamiltonian_cycle(*input.graph)) {
                out << "HAMILTONIAN";
                print_vertices(out, cycle->vertices);
                out << '\n';
            } else {
                out << "NONE\n";
                code = std::max(code, exit_none);
            }
        } catch (const GraphError& e) {
            err << "error: " << e.what() << '\n';
            out << "ERROR\n";
            code = std::max(code, exit_usage);
        }
    }
    return code;
}

int cmd_verify(const std::vector<Input>& inputs, std::istream& in, std::ostream& out, std::ostream& err) {
    if (inputs.size() != 1 || !inputs.front().graph) {
        err << "error: " << (inputs.front().graph ? "expected exactly one graph" : inputs.front().error)
            << '\n';
        return exit_usage;
    }
    std::vector<VertexId> order;
    std::string token;
    while (in >> token) {
        VertexId v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            err << "error: cycle entry '" << token << "' is not a vertex id\n";
            return exit_usage;
        }
        order.push_back(v);
    }
    if (auto problem = cycle_violation(*inputs.front().graph, order)) {
        out << "INVALID " << *problem << '\n';
        return exit_none;
    }
    out << "VALID\n";
    return exit_ok;
}

int cmd_check(std::size_t n_min, std::size_t n_max, unsigned threads, std::ostream& out) {
    const auto report = check::exhaustive(n_min, n_max, threads);
    out << check::format_report(report);
    return report.clean() ? exit_ok : exit_none;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t seeds, std::uint64_t first_seed,
              std::ostream& out, std::ostream& err) {
    out << "n,seed,edges,outcome,wall_ms\n";
    int code = exit_ok;
    for (std::size_t n : sizes) {
        if (n < 3) throw UsageError("bench sizes must be at least 3");
        for (std::uint64_t s = first_seed; s < first_seed + seeds; ++s) {
            const Graph g = gen::random_min_degree(n, s);
            const auto start = std::chrono::steady_clock::now();
            const SolveOutcome outcome = find_hamiltonian(g);
            const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
            // Tiny orders can draw an exceptional graph; a validated
            // certificate is a correct answer, anything else is a failure.
            std::string label = "HAMILTONIAN";
            bool ok = true;
            if (outcome.hamiltonian()) {
                ok = verify_cycle(g, outcome.cycle());
                if (!ok) label = "INVALID_CYCLE";
            } else {
                const auto& cert = outcome.certificate();
                label = std::holds_alternative<CutVertex>(cert)                ? "NONE_CUT_VERTEX"
                        : std::holds_alternative<BigIndependentComponent>(cert) ? "NONE_INDEPENDENT_SET"
                                                                                : "NONE_ROTATION_EXHAUSTED";
                ok = !std::holds_alternative<RotationExhausted>(cert) && !certificate_violation(g, cert);
            }
            if (!ok) {
                err << "error: n=" << n << " seed=" << s << " failed verification (" << label << ")\n";
                code = exit_none;
            }
            out << n << ',' << s << ',' << g.edge_count() << ',' << label << ','
                << std::fixed << std::setprecision(3) << took.count() << '\n';
        }
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hamiltonian cycles in graphs with minimum degree at least floor(n/2)", "hamdirac"};
    app.require_subcommand(1);

    std::string input_path, format_flag;
    bool stats = false;

    auto* solve = app.add_subcommand("solve", "Find a Hamiltonian cycle or a non-Hamiltonicity certificate");
    solve->add_option("input", input_path, "Graph file (default: stdin)");
    solve->add_option("-f,--format", format_flag, "g6, dimacs or el (default: from extension, else g6)");
    solve->add_flag("--stats", stats, "Print n, edge count and timing to stderr");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force Hamiltonicity (n <= 14)");
    oracle_cmd->add_option("input", input_path, "Graph file (default: stdin)");
    oracle_cmd->add_option("-f,--format", format_flag, "g6, dimacs or el");

    auto* verify = app.add_subcommand("verify", "Check a cycle read from stdin against a graph");
    verify->add_option("graph", input_path, "Graph file")->required();
    verify->add_option("-f,--format", format_flag, "g6, dimacs or el");

    std::string family;
    gen::GenSpec spec;
    std::string out_format = "g6";
    auto* generate = app.add_subcommand("generate", "Emit an exceptional-family or random instance");
    generate->add_option("--family", family, "a, b or random")
        ->required()
        ->check(CLI::IsMember({"a", "b", "random"}));
    auto* r_opt = generate->add_option("--r", spec.r, "Family parameter, n = 2r + 1");
    auto* n_opt = generate->add_option("--n", spec.n, "Vertex count (random family)");
    auto* p_opt = generate->add_option("--inner-p", spec.inner_edge_prob, "Edge probability inside family B");
    generate->add_option("--seed", spec.seed, "RNG seed");
    generate->add_option("-f,--format", out_format, "g6, dimacs or el");

    std::size_t n_min = 3, n_max = 7;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* check_cmd = app.add_subcommand("check", "Exhaustive solver-vs-oracle comparison on small graphs");
    check_cmd->add_option("--n-max", n_max, "Largest vertex count (<= 7)")->check(CLI::Range(3, 7));
    check_cmd->add_option("--n-min", n_min, "Smallest vertex count")->check(CLI::Range(3, 7));
    check_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::size_t> sizes;
    std::size_t seeds = 5;
    std::uint64_t first_seed = 0;
    auto* bench = app.add_subcommand("bench", "Time the solver on random min-degree instances (CSV)");
    bench->add_option("--sizes", sizes, "Comma-separated vertex counts")->required()->delimiter(',');
    bench->add_option("--seeds-per-size", seeds, "Instances per size");
    bench->add_option("--first-seed", first_seed, "Seed of the first instance");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed()) return cmd_solve(read_graphs(input_path, format_flag, in, err), stats, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(read_graphs(input_path, format_flag, in, err), out, err);
        if (verify->parsed()) {
            // The cycle arrives on stdin, so the graph must come from a file.
            if (input_path == "-") throw UsageError("verify reads the cycle from stdin; give a graph file");
            return cmd_verify(read_graphs(input_path, format_flag, in, err), in, out, err);
        }
        if (generate->parsed()) {
            if (family == "a") {
                if (n_opt->count() || p_opt->count()) throw UsageError("--family a takes only --r");
                if (!r_opt->count()) throw UsageError("--family a needs --r");
                spec.family = gen::Family::a;
            } else if (family == "b") {
                if (n_opt->count()) throw UsageError("--family b takes --r, not --n");
                if (!r_opt->count()) throw UsageError("--family b needs --r");
                spec.family = gen::Family::b;
            } else {
                if (r_opt->count() || p_opt->count()) throw UsageError("--family random takes only --n and --seed");
                if (!n_opt->count()) throw UsageError("--family random needs --n");
                spec.family = gen::Family::random;
            }
            const Graph g = gen::generate(spec);
            out << formats::encode(resolve_format(out_format, ""), g);
            return exit_ok;
        }
        if (check_cmd->parsed()) {
            if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
            return cmd_check(n_min, n_max, threads, out);
        }
        if (bench->parsed()) return cmd_bench(sizes, seeds, first_seed, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace hamdirac::cli
