#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gnpdense/analysis.hpp"
#include "gnpdense/experiment.hpp"
#include "gnpdense/graph.hpp"
#include "gnpdense/greedy.hpp"
#include "gnpdense/oracle.hpp"
#include "gnpdense/rng.hpp"

namespace py = pybind11;
using namespace gnpdense;

namespace {

VertexSet to_set(const std::vector<std::uint32_t>& v) { return VertexSet(v); }

}  // namespace

PYBIND11_MODULE(_gnpdense, m) {
    m.doc() = "dense subgraphs in G(n,1/2): partitioned greedy, analytical bounds, exact oracles";

    py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_static("generate", &Graph::generate, py::arg("n"), py::arg("p"), py::arg("seed"))
        .def_static(
            "from_edges",
            [](std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& e) {
                return Graph::from_edges(n, e);
            },
            py::arg("n"), py::arg("edges"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("generated", &Graph::generated)
        .def_property_readonly("p", &Graph::gen_p)
        .def_property_readonly("seed", &Graph::gen_seed)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("write_edge_list",
             [](const Graph& g) {
                 std::ostringstream out;
                 g.write_edge_list(out);
                 return out.str();
             })
        .def_static("read_edge_list", [](const std::string& text) {
            std::istringstream in(text);
            return Graph::read_edge_list(in);
        })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.order() << ", edges=" << g.edge_count() << ")";
            return out.str();
        });

    m.def(
        "edge_count_between",
        [](const Graph& g, const std::vector<std::uint32_t>& s,
           const std::vector<std::uint32_t>& t) { return edge_count_between(g, to_set(s), to_set(t)); },
        py::arg("g"), py::arg("s"), py::arg("t"));
    m.def(
        "density",
        [](const Graph& g, const std::vector<std::uint32_t>& s) {
            const Density d = density(g, to_set(s));
            return py::make_tuple(d.numerator, d.denominator, d.value);
        },
        py::arg("g"), py::arg("s"), "returns (numerator, denominator, value)");
    m.def(
        "degree_into",
        [](const Graph& g, std::uint32_t v, const std::vector<std::uint32_t>& s) {
            return degree_into(g, v, to_set(s));
        },
        py::arg("g"), py::arg("v"), py::arg("s"));

    py::class_<Partition>(m, "Partition")
        .def_property_readonly(
            "cells",
            [](const Partition& p) {
                std::vector<std::vector<std::uint32_t>> cells;
                for (const auto& c : p.cells) cells.push_back(c.members());
                return cells;
            })
        .def_property_readonly("leftover",
                               [](const Partition& p) { return p.leftover.members(); })
        .def_readonly("seed", &Partition::seed);

    m.def("partition_vertices", &partition_vertices, py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def(
        "make_partition",
        [](std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cells,
           const std::vector<std::uint32_t>& leftover) {
            std::vector<VertexSet> cs;
            cs.reserve(cells.size());
            for (const auto& c : cells) cs.emplace_back(c);
            return make_partition(n, std::move(cs), VertexSet(leftover));
        },
        py::arg("n"), py::arg("cells"), py::arg("leftover") = std::vector<std::uint32_t>{});

    py::class_<GreedyStep>(m, "GreedyStep")
        .def_readonly("step", &GreedyStep::step)
        .def_readonly("vertex", &GreedyStep::vertex)
        .def_readonly("gained", &GreedyStep::gained)
        .def_readonly("cell", &GreedyStep::cell);

    py::class_<GreedyTrace>(m, "GreedyTrace")
        .def_readonly("steps", &GreedyTrace::steps)
        .def_property_readonly("final_set",
                               [](const GreedyTrace& t) { return t.final_set.members(); })
        .def_readonly("final_edges", &GreedyTrace::final_edges)
        .def_readonly("final_density", &GreedyTrace::final_density)
        .def("to_json", &trace_steps_json)
        .def("to_csv", &trace_steps_csv);

    m.def("greedy_dense", &greedy_dense, py::arg("g"), py::arg("partition"));
    m.def(
        "plain_greedy_clique",
        [](const Graph& g) { return plain_greedy_clique(g).members(); },
        py::arg("g"));

    // analysis
    m.def("entropy", &entropy, py::arg("d"));
    m.def("inverse_entropy", &inverse_entropy, py::arg("y"));
    m.def("binomial_tail", &binomial_tail, py::arg("i"), py::arg("t"));
    m.def("log2_binomial_tail", &log2_binomial_tail, py::arg("i"), py::arg("t"));
    m.def("delta_schedule", &delta_schedule, py::arg("n"), py::arg("k"));
    m.def("dense_edge_threshold", &dense_edge_threshold, py::arg("pairs"), py::arg("delta"));
    m.def("lemma1_success_bound", &lemma1_success_bound, py::arg("n"), py::arg("k"), py::arg("i"),
          py::arg("d"));
    m.def("predicted_edges_lower_bound", &predicted_edges_lower_bound, py::arg("n"), py::arg("k"));
    m.def("density_integral", &density_integral, py::arg("alpha"), py::arg("tol") = 1e-8);
    m.def(
        "predicted_density",
        [](std::uint32_t n, std::uint32_t k) {
            const auto p = predicted_density(n, k);
            return py::make_tuple(p.discrete, p.integral_form);
        },
        py::arg("n"), py::arg("k"), "returns (discrete, integral_form)");
    m.def("clique_number_estimate", &clique_number_estimate, py::arg("n"));
    m.def("expected_dense_subgraph_count", &expected_dense_subgraph_count, py::arg("n"),
          py::arg("k"), py::arg("delta"), "log2 of the expectation");
    m.def(
        "size_threshold",
        [](double delta, std::uint64_t n) {
            const auto t = size_threshold(delta, n);
            return py::make_tuple(t.size, t.coefficient);
        },
        py::arg("delta"), py::arg("n"), "returns (size, coefficient)");
    m.def("gap_ratio", &gap_ratio, py::arg("delta"));

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("n", &BoundReport::n)
        .def_readonly("k", &BoundReport::k)
        .def_readonly("delta", &BoundReport::delta)
        .def_readonly("m", &BoundReport::m)
        .def_readonly("delta_schedule", &BoundReport::delta_schedule)
        .def_readonly("predicted_edges", &BoundReport::predicted_edges)
        .def_readonly("predicted_density_discrete", &BoundReport::predicted_density_discrete)
        .def_readonly("predicted_density_integral", &BoundReport::predicted_density_integral)
        .def_readonly("alpha", &BoundReport::alpha)
        .def_readonly("integral_value", &BoundReport::integral_value)
        .def_readonly("size_threshold", &BoundReport::size_threshold)
        .def_readonly("threshold_coefficient", &BoundReport::threshold_coefficient)
        .def_readonly("gap_ratio", &BoundReport::gap_ratio)
        .def_readonly("expected_count_log2", &BoundReport::expected_count_log2)
        .def("to_json", &bound_report_json)
        .def("to_text", &bound_report_text);
    m.def("make_bound_report", &make_bound_report, py::arg("n"), py::arg("k"), py::arg("delta"),
          py::arg("tol") = 1e-8);

    // oracle
    py::class_<OracleResult>(m, "OracleResult")
        .def_property_readonly("best_set",
                               [](const OracleResult& r) { return r.best_set.members(); })
        .def_readonly("best_edges", &OracleResult::best_edges)
        .def_readonly("best_density", &OracleResult::best_density)
        .def_readonly("subsets_examined", &OracleResult::subsets_examined)
        .def_readonly("pruned", &OracleResult::pruned);
    m.def("max_density_subgraph_exact", &max_density_subgraph_exact, py::arg("g"), py::arg("k"),
          py::arg("node_budget") = kDefaultNodeBudget);
    m.def(
        "max_clique_exact",
        [](const Graph& g, std::uint32_t order_limit) {
            return max_clique_exact(g, order_limit).members();
        },
        py::arg("g"), py::arg("order_limit") = kDefaultCliqueOrderLimit);
    m.def("count_dense_subgraphs", &count_dense_subgraphs, py::arg("g"), py::arg("k"),
          py::arg("delta"), py::arg("subset_budget") = kDefaultSubsetBudget);
    m.def("exists_dense_subgraph", &exists_dense_subgraph, py::arg("g"), py::arg("k"),
          py::arg("delta"), py::arg("subset_budget") = kDefaultSubsetBudget);

    // experiments
    py::enum_<Mode>(m, "Mode")
        .value("greedy_density", Mode::greedy_density)
        .value("lemma1_rate", Mode::lemma1_rate)
        .value("lemma2_edges", Mode::lemma2_edges)
        .value("clique_baseline", Mode::clique_baseline)
        .value("first_moment", Mode::first_moment)
        .value("threshold_scan", Mode::threshold_scan);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("n", &ExperimentConfig::n)
        .def_readwrite("k", &ExperimentConfig::k)
        .def_readwrite("delta", &ExperimentConfig::delta)
        .def_readwrite("p", &ExperimentConfig::p)
        .def_readwrite("trials", &ExperimentConfig::trials)
        .def_readwrite("master_seed", &ExperimentConfig::master_seed)
        .def_readwrite("mode", &ExperimentConfig::mode)
        .def_readwrite("workers", &ExperimentConfig::workers)
        .def_readwrite("node_budget", &ExperimentConfig::node_budget)
        .def_readwrite("subset_budget", &ExperimentConfig::subset_budget);

    py::class_<TrialRecord>(m, "TrialRecord")
        .def_readonly("trial_index", &TrialRecord::trial_index)
        .def_readonly("seed", &TrialRecord::seed)
        .def_readonly("observed", &TrialRecord::observed)
        .def_readonly("predicted", &TrialRecord::predicted)
        .def_readonly("pass_", &TrialRecord::pass)
        .def_readonly("errored", &TrialRecord::errored)
        .def_readonly("error", &TrialRecord::error)
        .def_readonly("gained", &TrialRecord::gained)
        .def_readonly("dense_k", &TrialRecord::dense_k);

    py::class_<Summary>(m, "Summary")
        .def_readonly("trials", &Summary::trials)
        .def_readonly("errored", &Summary::errored)
        .def_readonly("mean", &Summary::mean)
        .def_readonly("stddev", &Summary::stddev)
        .def_readonly("min", &Summary::min)
        .def_readonly("max", &Summary::max)
        .def_readonly("pass_rate", &Summary::pass_rate)
        .def_readonly("predicted", &Summary::predicted)
        .def_readonly("step_rate", &Summary::step_rate)
        .def_readonly("step_bound", &Summary::step_bound)
        .def_readonly("scan_k", &Summary::scan_k)
        .def_readonly("scan_rate", &Summary::scan_rate)
        .def_readonly("standard_error", &Summary::standard_error)
        .def_readonly("z", &Summary::z);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("config", &ExperimentResult::config)
        .def_readonly("records", &ExperimentResult::records)
        .def_readonly("summary", &ExperimentResult::summary)
        .def("report", [](const ExperimentResult& r) {
            std::ostringstream out;
            emit_report(r, out);
            return out.str();
        });

    m.def("run_experiment", &run_experiment, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("trial_seed", &trial_seed, py::arg("master_seed"), py::arg("trial_index"));
    m.def("splitmix64_at", &splitmix64_at, py::arg("seed"), py::arg("index"));
}
