#include "gnpdense/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "gnpdense/analysis.hpp"
#include "gnpdense/greedy.hpp"
#include "gnpdense/rng.hpp"

namespace gnpdense {

Mode mode_from_string(std::string_view s) {
    if (s == "greedy-density") return Mode::greedy_density;
    if (s == "lemma1-rate") return Mode::lemma1_rate;
    if (s == "lemma2-edges") return Mode::lemma2_edges;
    if (s == "clique-baseline") return Mode::clique_baseline;
    if (s == "first-moment") return Mode::first_moment;
    if (s == "threshold-scan") return Mode::threshold_scan;
    throw std::invalid_argument("unknown experiment mode: " + std::string(s));
}

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::greedy_density: return "greedy-density";
        case Mode::lemma1_rate: return "lemma1-rate";
        case Mode::lemma2_edges: return "lemma2-edges";
        case Mode::clique_baseline: return "clique-baseline";
        case Mode::first_moment: return "first-moment";
        case Mode::threshold_scan: return "threshold-scan";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64_at(master_seed, trial_index);
}

namespace {

// plain greedy clique sizes are accepted within this band around log2 n;
// greedy clique sizes concentrate near log2 n at these scales
constexpr double kCliqueBandLow = 0.85;
constexpr double kCliqueBandHigh = 1.15;

struct ModeContext {
    std::uint32_t k = 0;
    double predicted = 0.0;
    std::vector<double> deltas;
    std::vector<std::uint64_t> step_threshold;  // lemma1-rate
    std::vector<double> step_bound;
    double all_steps_bound = 1.0;  // product of the per-step bounds
    std::uint32_t scan_lo = 0, scan_hi = 0;     // threshold-scan range
};

ModeContext prepare(const ExperimentConfig& cfg) {
    ModeContext ctx;
    if (cfg.n < 1) throw std::invalid_argument("experiment: n must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    ctx.k = cfg.k;
    if (ctx.k == 0)
        ctx.k = static_cast<std::uint32_t>(
            std::lround(2.0 * std::log2(static_cast<double>(cfg.n))));
    switch (cfg.mode) {
        case Mode::greedy_density:
            ctx.predicted = predicted_density(cfg.n, ctx.k).discrete;
            break;
        case Mode::lemma2_edges:
            ctx.predicted = predicted_edges_lower_bound(cfg.n, ctx.k);
            break;
        case Mode::lemma1_rate: {
            ctx.deltas = delta_schedule(cfg.n, ctx.k);
            ctx.step_threshold.resize(ctx.k);
            ctx.step_bound.resize(ctx.k);
            for (std::uint32_t i = 0; i < ctx.k; ++i) {
                ctx.step_threshold[i] = dense_edge_threshold(i, ctx.deltas[i]);
                ctx.step_bound[i] = lemma1_success_bound(cfg.n, ctx.k, i, ctx.deltas[i]);
                ctx.all_steps_bound *= ctx.step_bound[i];
            }
            ctx.predicted = ctx.all_steps_bound;
            break;
        }
        case Mode::clique_baseline:
            ctx.predicted = std::log2(static_cast<double>(cfg.n));
            break;
        case Mode::first_moment:
            ctx.predicted = std::exp2(expected_dense_subgraph_count(cfg.n, ctx.k, cfg.delta));
            break;
        case Mode::threshold_scan: {
            ctx.scan_lo = cfg.k > 0 ? cfg.k
                                    : static_cast<std::uint32_t>(
                                          std::ceil(size_threshold(cfg.delta, cfg.n).size));
            if (ctx.scan_lo < 2) ctx.scan_lo = 2;
            if (ctx.scan_lo > cfg.n)
                throw std::invalid_argument("threshold-scan: scan start exceeds n");
            ctx.scan_hi = cfg.n;
            ctx.predicted = 0.0;  // expected number of witness sizes
            break;
        }
    }
    return ctx;
}

TrialRecord run_trial(const ExperimentConfig& cfg, const ModeContext& ctx,
                      std::uint32_t index) {
    TrialRecord rec;
    rec.trial_index = index;
    rec.seed = trial_seed(cfg.master_seed, index);
    const std::uint64_t graph_seed = splitmix64_at(rec.seed, 0);
    const std::uint64_t partition_seed = splitmix64_at(rec.seed, 1);
    rec.predicted = ctx.predicted;
    try {
        switch (cfg.mode) {
            case Mode::greedy_density:
            case Mode::lemma2_edges:
            case Mode::lemma1_rate: {
                const Graph g = Graph::generate(cfg.n, cfg.p, graph_seed);
                const Partition part = partition_vertices(cfg.n, ctx.k, partition_seed);
                const GreedyTrace trace = greedy_dense(g, part);
                if (cfg.mode == Mode::greedy_density) {
                    rec.observed = trace.final_density;
                    rec.pass = rec.observed >= rec.predicted;
                } else if (cfg.mode == Mode::lemma2_edges) {
                    rec.observed = static_cast<double>(trace.final_edges);
                    rec.pass = rec.observed >= rec.predicted;
                } else {
                    rec.gained.reserve(ctx.k);
                    std::uint32_t met = 0;
                    for (const auto& step : trace.steps) {
                        rec.gained.push_back(step.gained);
                        if (step.gained >= ctx.step_threshold[step.step]) ++met;
                    }
                    rec.observed = static_cast<double>(met) / static_cast<double>(ctx.k);
                    rec.pass = met == ctx.k;
                }
                break;
            }
            case Mode::clique_baseline: {
                const Graph g = Graph::generate(cfg.n, cfg.p, graph_seed);
                const auto clique = plain_greedy_clique(g);
                rec.observed = static_cast<double>(clique.size());
                rec.pass = rec.observed >= kCliqueBandLow * rec.predicted &&
                           rec.observed <= kCliqueBandHigh * rec.predicted;
                break;
            }
            case Mode::first_moment: {
                const Graph g = Graph::generate(cfg.n, cfg.p, graph_seed);
                rec.observed = static_cast<double>(
                    count_dense_subgraphs(g, ctx.k, cfg.delta, cfg.subset_budget));
                rec.pass = true;  // agreement is judged on the summary mean
                break;
            }
            case Mode::threshold_scan: {
                const Graph g = Graph::generate(cfg.n, cfg.p, graph_seed);
                for (std::uint32_t kk = ctx.scan_lo; kk <= ctx.scan_hi; ++kk)
                    if (exists_dense_subgraph(g, kk, cfg.delta, cfg.subset_budget))
                        rec.dense_k.push_back(kk);
                rec.observed = static_cast<double>(rec.dense_k.size());
                rec.pass = rec.dense_k.empty();
                break;
            }
        }
    } catch (const std::exception& e) {
        rec.errored = true;
        rec.error = e.what();
        rec.pass = false;
    }
    return rec;
}

Summary summarize(const ExperimentConfig& cfg, const ModeContext& ctx,
                  const std::vector<TrialRecord>& records) {
    Summary s;
    s.trials = static_cast<std::uint32_t>(records.size());
    s.predicted = ctx.predicted;
    double sum = 0.0;
    std::uint32_t ok = 0, passes = 0;
    bool first = true;
    for (const auto& r : records) {
        if (r.errored) {
            ++s.errored;
            continue;
        }
        ++ok;
        if (r.pass) ++passes;
        sum += r.observed;
        if (first || r.observed < s.min) s.min = r.observed;
        if (first || r.observed > s.max) s.max = r.observed;
        first = false;
    }
    if (ok > 0) {
        s.mean = sum / ok;
        double ss = 0.0;
        for (const auto& r : records)
            if (!r.errored) ss += (r.observed - s.mean) * (r.observed - s.mean);
        s.stddev = ok > 1 ? std::sqrt(ss / (ok - 1)) : 0.0;
        s.pass_rate = static_cast<double>(passes) / ok;
    }
    if (cfg.mode == Mode::lemma1_rate && ok > 0) {
        s.step_bound = ctx.step_bound;
        s.step_rate.assign(ctx.k, 0.0);
        for (const auto& r : records) {
            if (r.errored) continue;
            for (std::uint32_t i = 0; i < ctx.k && i < r.gained.size(); ++i)
                if (r.gained[i] >= ctx.step_threshold[i]) s.step_rate[i] += 1.0;
        }
        for (auto& v : s.step_rate) v /= ok;
    }
    if (cfg.mode == Mode::threshold_scan) {
        for (std::uint32_t kk = ctx.scan_lo; kk <= ctx.scan_hi; ++kk) s.scan_k.push_back(kk);
        s.scan_rate.assign(s.scan_k.size(), 0.0);
        for (const auto& r : records) {
            if (r.errored) continue;
            for (std::uint32_t kk : r.dense_k) s.scan_rate[kk - ctx.scan_lo] += 1.0;
        }
        if (ok > 0)
            for (auto& v : s.scan_rate) v /= ok;
    }
    if (cfg.mode == Mode::first_moment && ok > 1) {
        s.standard_error = s.stddev / std::sqrt(static_cast<double>(ok));
        s.z = s.standard_error > 0.0 ? (s.mean - s.predicted) / s.standard_error : 0.0;
    }
    return s;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    const ModeContext ctx = prepare(config);

    // distinct per-trial seeds, checked up front
    {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(config.trials * 2);
        for (std::uint32_t i = 0; i < config.trials; ++i)
            if (!seen.insert(trial_seed(config.master_seed, i)).second)
                throw std::invalid_argument("experiment: per-trial seed collision");
    }

    ExperimentResult result;
    result.config = config;
    result.records.resize(config.trials);

    std::uint32_t workers = config.workers;
    if (workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = std::clamp(hw == 0 ? 1u : hw, 1u, 8u);
    }
    workers = std::min(workers, config.trials);

    if (workers <= 1) {
        for (std::uint32_t i = 0; i < config.trials; ++i)
            result.records[i] = run_trial(config, ctx, i);
    } else {
        std::atomic<std::uint32_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::uint32_t i = next.fetch_add(1);
                if (i >= config.trials) return;
                result.records[i] = run_trial(config, ctx, i);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.summary = summarize(config, ctx, result.records);
    return result;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

template <typename T>
std::string join_semicolon(const std::vector<T>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ';';
        out << v[i];
    }
    return out.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void emit_csv(const ExperimentResult& r, std::ostream& out) {
    out << "trial_index,seed,observed,predicted,pass,gained,dense_k,error\n";
    for (const auto& rec : r.records) {
        out << rec.trial_index << ',' << rec.seed << ',' << format_double(rec.observed) << ','
            << format_double(rec.predicted) << ',' << (rec.pass ? 1 : 0) << ','
            << join_semicolon(rec.gained) << ',' << join_semicolon(rec.dense_k) << ','
            << csv_escape(rec.error) << '\n';
    }
}

void emit_config_json(const ExperimentConfig& c, std::ostream& out) {
    out << "{\"mode\":\"" << to_string(c.mode) << "\",\"n\":" << c.n << ",\"k\":" << c.k
        << ",\"delta\":" << format_double(c.delta) << ",\"p\":" << format_double(c.p)
        << ",\"trials\":" << c.trials << ",\"master_seed\":" << c.master_seed
        << ",\"node_budget\":" << c.node_budget << ",\"subset_budget\":" << c.subset_budget
        << '}';
}

template <typename T, typename F>
void emit_array(std::ostream& out, const std::vector<T>& v, F item) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        item(v[i]);
    }
    out << ']';
}

void emit_json(const ExperimentResult& r, std::ostream& out) {
    out << "{\"config\":";
    emit_config_json(r.config, out);
    out << ",\"records\":[";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const auto& rec = r.records[i];
        if (i) out << ',';
        out << "{\"trial_index\":" << rec.trial_index << ",\"seed\":" << rec.seed
            << ",\"observed\":" << format_double(rec.observed)
            << ",\"predicted\":" << format_double(rec.predicted)
            << ",\"pass\":" << (rec.pass ? "true" : "false");
        if (!rec.gained.empty()) {
            out << ",\"gained\":";
            emit_array(out, rec.gained, [&](std::uint32_t g) { out << g; });
        }
        if (!rec.dense_k.empty()) {
            out << ",\"dense_k\":";
            emit_array(out, rec.dense_k, [&](std::uint32_t kk) { out << kk; });
        }
        if (rec.errored) out << ",\"error\":\"" << json_escape(rec.error) << '"';
        out << '}';
    }
    out << "],\"summary\":{";
    const auto& s = r.summary;
    out << "\"trials\":" << s.trials << ",\"errored\":" << s.errored
        << ",\"mean\":" << format_double(s.mean) << ",\"stddev\":" << format_double(s.stddev)
        << ",\"min\":" << format_double(s.min) << ",\"max\":" << format_double(s.max)
        << ",\"pass_rate\":" << format_double(s.pass_rate)
        << ",\"predicted\":" << format_double(s.predicted);
    if (!s.step_rate.empty()) {
        out << ",\"step_rate\":";
        emit_array(out, s.step_rate, [&](double v) { out << format_double(v); });
        out << ",\"step_bound\":";
        emit_array(out, s.step_bound, [&](double v) { out << format_double(v); });
    }
    if (!s.scan_k.empty()) {
        out << ",\"scan_k\":";
        emit_array(out, s.scan_k, [&](std::uint32_t kk) { out << kk; });
        out << ",\"scan_rate\":";
        emit_array(out, s.scan_rate, [&](double v) { out << format_double(v); });
    }
    if (r.config.mode == Mode::first_moment) {
        out << ",\"standard_error\":" << format_double(s.standard_error)
            << ",\"z\":" << format_double(s.z);
    }
    out << "}}";
}

}  // namespace

void emit_report(const ExperimentResult& result, std::ostream& out) {
    if (result.records.empty()) throw std::invalid_argument("emit_report: no records");
    if (result.config.format == OutputFormat::csv)
        emit_csv(result, out);
    else
        emit_json(result, out);
}

void emit_plot_data(const std::vector<PlotRow>& rows, std::ostream& out) {
    out << "k,predicted_density,mean_observed_density\n";
    for (const auto& row : rows)
        out << row.k << ',' << format_double(row.predicted_density) << ','
            << format_double(row.mean_observed_density) << '\n';
}

}  // namespace gnpdense
