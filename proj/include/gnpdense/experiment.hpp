#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gnpdense/oracle.hpp"

namespace gnpdense {

enum class Mode {
    greedy_density,   // final_density vs the predicted density
    lemma1_rate,      // per-step gains vs the per-step thresholds
    lemma2_edges,     // final_edges vs the predicted edge lower bound
    clique_baseline,  // plain greedy clique size vs log2 n
    first_moment,     // exact dense-subgraph counts vs the expectation
    threshold_scan,   // existence of dense subgraphs at and above the size threshold
};

Mode mode_from_string(std::string_view s);
std::string_view to_string(Mode m);

enum class OutputFormat { csv, json };

struct ExperimentConfig {
    std::uint32_t n = 0;
    std::uint32_t k = 0;       // 0 = default round(2 log2 n) where a k is needed
    double delta = 0.0;
    double p = 0.5;            // accepted generally; the bounds assume 1/2
    std::uint32_t trials = 1;
    std::uint64_t master_seed = 0;
    Mode mode = Mode::greedy_density;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    std::uint32_t workers = 0;  // 0 = auto; never affects the output bytes
};

struct TrialRecord {
    std::uint32_t trial_index = 0;
    std::uint64_t seed = 0;
    double observed = 0.0;
    double predicted = 0.0;
    bool pass = false;
    bool errored = false;
    std::string error;
    std::vector<std::uint32_t> gained;   // lemma1-rate: per-step gains
    std::vector<std::uint32_t> dense_k;  // threshold-scan: sizes with a dense witness
};

struct Summary {
    std::uint32_t trials = 0;
    std::uint32_t errored = 0;
    double mean = 0.0;    // over `observed` of non-errored records
    double stddev = 0.0;  // sample standard deviation
    double min = 0.0;
    double max = 0.0;
    double pass_rate = 0.0;  // passes / non-errored
    double predicted = 0.0;
    // lemma1-rate: per-step empirical rates and bounds
    std::vector<double> step_rate;
    std::vector<double> step_bound;
    // threshold-scan: per-k dense-witness rates
    std::vector<std::uint32_t> scan_k;
    std::vector<double> scan_rate;
    // first-moment: standard error of the mean and z vs predicted
    double standard_error = 0.0;
    double z = 0.0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    Summary summary;
};

/// Per-trial seed: the (trial_index+1)-th SplitMix64 output from master_seed.
/// From it, graph seed = splitmix64_at(seed, 0) and partition seed =
/// splitmix64_at(seed, 1).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Deterministic given the config: records ordered by trial_index, summary a
/// sequential reduction, regardless of worker count. Per-trial failures are
/// recorded, not thrown.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV: fixed header + one row per trial. JSON: {config, records, summary}.
/// Floats carry 12 significant digits; output bytes are reproducible.
void emit_report(const ExperimentResult& result, std::ostream& out);

struct PlotRow {
    std::uint32_t k = 0;
    double predicted_density = 0.0;
    double mean_observed_density = 0.0;
};
/// CSV triples for a k-sweep: header "k,predicted_density,mean_observed_density".
void emit_plot_data(const std::vector<PlotRow>& rows, std::ostream& out);

}  // namespace gnpdense
