// gnpdense command-line tool: generate / greedy / bounds / oracle / experiment.
// Errors go to stderr as single-line JSON; exit code 0 only on success.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gnpdense/analysis.hpp"
#include "gnpdense/experiment.hpp"
#include "gnpdense/graph.hpp"
#include "gnpdense/greedy.hpp"
#include "gnpdense/oracle.hpp"
#include "gnpdense/rng.hpp"

namespace {

using namespace gnpdense;

constexpr std::uint32_t kMaxOrder = 65536;  // 512 MiB of adjacency bits

std::string json_escape_msg(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += ' ';
            continue;
        }
        out += c;
    }
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

Graph load_or_generate(const std::string& in_path, std::uint32_t n, double p,
                       std::uint64_t graph_seed) {
    if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in) throw std::runtime_error("cannot open input file: " + in_path);
        return Graph::read_edge_list(in);
    }
    if (n == 0) throw std::invalid_argument("--n or --in is required");
    if (n > kMaxOrder) throw std::invalid_argument("--n exceeds the supported maximum (65536)");
    return Graph::generate(n, p, graph_seed);
}

std::uint32_t default_k(std::uint32_t n) {
    return static_cast<std::uint32_t>(std::lround(2.0 * std::log2(static_cast<double>(n))));
}

std::string set_json(const VertexSet& s) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    out << ']';
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"dense subgraphs in G(n,1/2): greedy search, analytical bounds, exact oracles"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "sample G(n,p) and write its edge list");
    std::uint32_t gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability")->default_val(0.5);
    gen->add_option("--seed", gen_seed, "generator seed")->default_val(0);
    gen->add_option("--out", gen_out, "output path (default: stdout)");
    gen->callback([&] {
        if (gen_n > kMaxOrder) throw std::invalid_argument("--n exceeds the supported maximum (65536)");
        const Graph g = Graph::generate(gen_n, gen_p, gen_seed);
        if (gen_out.empty()) {
            g.write_edge_list(std::cout);
        } else {
            auto out = open_out(gen_out);
            g.write_edge_list(out);
            std::cout << "{\"n\":" << g.order() << ",\"edges\":" << g.edge_count()
                      << ",\"p\":" << format_double(gen_p) << ",\"seed\":" << gen_seed << "}\n";
        }
    });

    // greedy
    auto* gr = app.add_subcommand("greedy", "run the partitioned greedy and emit its trace");
    std::uint32_t gr_n = 0, gr_k = 0;
    double gr_p = 0.5;
    std::uint64_t gr_seed = 0;
    std::optional<std::uint64_t> gr_graph_seed, gr_part_seed;
    std::string gr_in, gr_out, gr_format = "json";
    gr->add_option("--n", gr_n, "vertex count (generates G(n,p))");
    gr->add_option("--in", gr_in, "edge-list file instead of generating");
    gr->add_option("--k", gr_k, "set size (default round(2 log2 n))");
    gr->add_option("--p", gr_p, "edge probability when generating")->default_val(0.5);
    gr->add_option("--seed", gr_seed,
                   "trial seed; graph/partition seeds are its SplitMix64 outputs 1 and 2")
        ->default_val(0);
    gr->add_option("--graph-seed", gr_graph_seed, "override the derived graph seed");
    gr->add_option("--partition-seed", gr_part_seed, "override the derived partition seed");
    gr->add_option("--format", gr_format, "trace format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    gr->add_option("--out", gr_out, "trace output path (default: stdout)");
    gr->callback([&] {
        const std::uint64_t gseed = gr_graph_seed.value_or(splitmix64_at(gr_seed, 0));
        const std::uint64_t pseed = gr_part_seed.value_or(splitmix64_at(gr_seed, 1));
        const Graph g = load_or_generate(gr_in, gr_n, gr_p, gseed);
        const std::uint32_t k = gr_k ? gr_k : default_k(g.order());
        const Partition part = partition_vertices(g.order(), k, pseed);
        const GreedyTrace trace = greedy_dense(g, part);
        const std::string rendered =
            gr_format == "csv" ? trace_steps_csv(trace) : trace_steps_json(trace);
        if (gr_out.empty()) {
            std::cout << rendered;
            if (gr_format == "json") std::cout << '\n';
        } else {
            auto out = open_out(gr_out);
            out << rendered;
            if (gr_format == "json") out << '\n';
            std::cout << "{\"k\":" << k << ",\"final_set\":" << set_json(trace.final_set)
                      << ",\"final_edges\":" << trace.final_edges
                      << ",\"final_density\":" << format_double(trace.final_density) << "}\n";
        }
    });

    // bounds
    auto* bo = app.add_subcommand("bounds", "print the analytical bound report");
    std::uint32_t bo_n = 0, bo_k = 0;
    double bo_delta = 0.049, bo_tol = 1e-8;
    std::string bo_format = "json", bo_out;
    bo->add_option("--n", bo_n, "vertex count")->required();
    bo->add_option("--k", bo_k, "set size (default round(2 log2 n))");
    bo->add_option("--delta", bo_delta, "density slack in [0, 1/2)")->default_val(0.049);
    bo->add_option("--tol", bo_tol, "quadrature tolerance")->default_val(1e-8);
    bo->add_option("--format", bo_format, "json|text")->check(CLI::IsMember({"json", "text"}));
    bo->add_option("--out", bo_out, "output path (default: stdout)");
    bo->callback([&] {
        const std::uint32_t k = bo_k ? bo_k : default_k(bo_n);
        const BoundReport r = make_bound_report(bo_n, k, bo_delta, bo_tol);
        const std::string rendered =
            bo_format == "text" ? bound_report_text(r) : bound_report_json(r) + "\n";
        if (bo_out.empty()) {
            std::cout << rendered;
        } else {
            auto out = open_out(bo_out);
            out << rendered;
        }
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "exact brute-force searches (desk scale)");
    std::uint32_t orc_n = 0, orc_k = 0;
    double orc_p = 0.5;
    std::uint64_t orc_seed = 0, orc_budget = 0;
    std::optional<double> orc_delta;
    bool orc_clique = false;
    std::string orc_in, orc_out;
    orc->add_option("--n", orc_n, "vertex count (generates G(n,p))");
    orc->add_option("--in", orc_in, "edge-list file instead of generating");
    orc->add_option("--p", orc_p, "edge probability when generating")->default_val(0.5);
    orc->add_option("--seed", orc_seed, "graph seed")->default_val(0);
    orc->add_option("--k", orc_k, "subset size");
    orc->add_option("--delta", orc_delta, "count subsets of density >= 1-delta instead");
    orc->add_flag("--clique", orc_clique, "exact maximum clique instead");
    orc->add_option("--budget", orc_budget, "search budget (nodes or subsets)")->default_val(0);
    orc->add_option("--out", orc_out, "output path (default: stdout)");
    orc->callback([&] {
        const Graph g = load_or_generate(orc_in, orc_n, orc_p, orc_seed);
        std::ostringstream res;
        if (orc_clique) {
            const VertexSet clique =
                max_clique_exact(g, orc_budget ? static_cast<std::uint32_t>(orc_budget)
                                               : kDefaultCliqueOrderLimit);
            res << "{\"task\":\"max-clique\",\"size\":" << clique.size()
                << ",\"best_set\":" << set_json(clique) << "}";
        } else if (orc_delta.has_value()) {
            if (orc_k == 0) throw std::invalid_argument("--k is required with --delta");
            const std::uint64_t count = count_dense_subgraphs(
                g, orc_k, *orc_delta, orc_budget ? orc_budget : kDefaultSubsetBudget);
            const std::uint64_t pairs = std::uint64_t{orc_k} * (orc_k - 1) / 2;
            res << "{\"task\":\"count-dense\",\"k\":" << orc_k
                << ",\"delta\":" << format_double(*orc_delta)
                << ",\"threshold_edges\":" << dense_edge_threshold(pairs, *orc_delta)
                << ",\"count\":" << count << "}";
        } else {
            if (orc_k == 0) throw std::invalid_argument("--k is required");
            const OracleResult r = max_density_subgraph_exact(
                g, orc_k, orc_budget ? orc_budget : kDefaultNodeBudget);
            res << "{\"task\":\"max-density\",\"k\":" << orc_k
                << ",\"best_set\":" << set_json(r.best_set) << ",\"best_edges\":" << r.best_edges
                << ",\"best_density\":" << format_double(r.best_density)
                << ",\"subsets_examined\":" << r.subsets_examined << ",\"pruned\":" << r.pruned
                << "}";
        }
        if (orc_out.empty()) {
            std::cout << res.str() << '\n';
        } else {
            auto out = open_out(orc_out);
            out << res.str() << '\n';
        }
    });

    // experiment
    auto* ex = app.add_subcommand("experiment", "seeded Monte Carlo runs vs the predictions");
    ExperimentConfig cfg;
    std::string ex_mode = "greedy-density", ex_format = "csv", ex_out, ex_sweep;
    ex->add_option("--mode", ex_mode,
                   "greedy-density|lemma1-rate|lemma2-edges|clique-baseline|first-moment|"
                   "threshold-scan")
        ->default_val("greedy-density");
    ex->add_option("--n", cfg.n, "vertex count")->required();
    ex->add_option("--k", cfg.k, "set size (default round(2 log2 n); threshold-scan: scan start)");
    ex->add_option("--delta", cfg.delta, "density slack")->default_val(0.0);
    ex->add_option("--p", cfg.p, "edge probability; bounds require 1/2")->default_val(0.5);
    ex->add_option("--trials", cfg.trials, "number of trials")->default_val(1);
    ex->add_option("--seed", cfg.master_seed, "master seed")->default_val(0);
    ex->add_option("--format", ex_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    ex->add_option("--workers", cfg.workers, "worker threads (0 = auto)")->default_val(0);
    ex->add_option("--budget", cfg.subset_budget, "oracle subset budget")
        ->default_val(kDefaultSubsetBudget);
    ex->add_option("--sweep-k", ex_sweep,
                   "LO:HI — greedy-density k-sweep emitting plot data "
                   "(k, predicted_density, mean_observed_density)");
    ex->add_option("--out", ex_out, "output path (default: stdout)");
    ex->callback([&] {
        if (cfg.p != 0.5)
            throw std::invalid_argument(
                "experiment: the analytical bounds hold only at p = 1/2; --p must be 0.5");
        cfg.mode = mode_from_string(ex_mode);
        cfg.format = ex_format == "json" ? OutputFormat::json : OutputFormat::csv;

        if (!ex_sweep.empty()) {
            if (cfg.mode != Mode::greedy_density)
                throw std::invalid_argument("--sweep-k requires --mode greedy-density");
            const auto colon = ex_sweep.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("--sweep-k expects LO:HI");
            const std::uint32_t lo = static_cast<std::uint32_t>(std::stoul(ex_sweep.substr(0, colon)));
            const std::uint32_t hi = static_cast<std::uint32_t>(std::stoul(ex_sweep.substr(colon + 1)));
            if (lo < 2 || hi < lo) throw std::invalid_argument("--sweep-k expects 2 <= LO <= HI");
            std::vector<PlotRow> rows;
            for (std::uint32_t kk = lo; kk <= hi; ++kk) {
                ExperimentConfig c = cfg;
                c.k = kk;
                const ExperimentResult r = run_experiment(c);
                rows.push_back({kk, r.summary.predicted, r.summary.mean});
            }
            if (ex_out.empty()) {
                emit_plot_data(rows, std::cout);
            } else {
                auto out = open_out(ex_out);
                emit_plot_data(rows, out);
            }
            return;
        }

        const ExperimentResult result = run_experiment(cfg);
        if (ex_out.empty()) {
            emit_report(result, std::cout);
        } else {
            auto out = open_out(ex_out);
            emit_report(result, out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // normal help text
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\"error\":\"" << json_escape_msg(e.what()) << "\",\"type\":\"usage\"}\n";
        return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gnpdense::budget_error& e) {
        std::cerr << "{\"error\":\"" << json_escape_msg(e.what()) << "\",\"type\":\"budget\"}\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"error\":\"" << json_escape_msg(e.what()) << "\",\"type\":\"argument\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"" << json_escape_msg(e.what()) << "\",\"type\":\"runtime\"}\n";
        return 1;
    }
}
