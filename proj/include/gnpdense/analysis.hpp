#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gnpdense {

/// Binary Shannon entropy H(d) = -d log2 d - (1-d) log2(1-d), H(0)=H(1)=0.
double entropy(double d);

/// Unique d in [0, 1/2] with entropy(d) = y; bisection to |err| <= 1e-12.
double inverse_entropy(double y);

/// P(Binomial(i, 1/2) >= t), exact in integer arithmetic for i <= 64,
/// log-domain beyond.
double binomial_tail(std::uint64_t i, std::uint64_t t);

/// 2^i * binomial_tail(i, t) as an exact integer; requires i <= 64.
unsigned __int128 binomial_tail_numerator(unsigned i, unsigned t);

/// log2 of binomial_tail(i, t); exact big-integer route for i <= 400,
/// log-domain summation beyond. Handles tails far below double range.
double log2_binomial_tail(std::uint64_t i, std::uint64_t t);

/// The scale m = n / (2k ln(log2 n)); log2(m) is the length of the
/// all-edges prefix of the schedule. Throws if m <= 1 (regime vacuous).
double schedule_scale_m(std::uint32_t n, std::uint32_t k);

/// Per-step allowed missing-edge fractions delta_0..delta_{k-1}:
/// delta_i = 0 for i <= log2(m), else H^{-1}(1 - log2(m)/i), in [0, 1/2].
std::vector<double> delta_schedule(std::uint32_t n, std::uint32_t k);

/// Smallest integer edge count >= (1-delta) * pairs (extended-precision
/// product so decimal deltas round the intended way).
std::uint64_t dense_edge_threshold(std::uint64_t pairs, double delta);

/// Lower bound on P(step-i argmax gains >= (1-d)*i edges):
/// 1 - (1 - binomial_tail(i, ceil((1-d) i)))^floor(n/k).
double lemma1_success_bound(std::uint32_t n, std::uint32_t k, std::uint32_t i, double d);

/// Sum_{i=0}^{k-1} (1 - delta_i) * i with the computed schedule.
double predicted_edges_lower_bound(std::uint32_t n, std::uint32_t k);

/// Adaptive-Simpson value of integral_0^alpha (1+x) H^{-1}(1 - 1/(1+x)) dx
/// to absolute error <= tol.
double density_integral(double alpha, double tol);

struct DensityPrediction {
    double discrete;       // predicted_edges_lower_bound / C(k,2)
    double integral_form;  // 1 - log2(m)^2/C(k,2) * integral(alpha), alpha = (k-1)/log2(m) - 1
};
/// Both prediction routes; 1 in the clique regime k <= log2(m). The two
/// routes agree to within the discretization gap of the integral.
DensityPrediction predicted_density(std::uint32_t n, std::uint32_t k);

/// ceil(2 log2 n - 2 log2 log2 n - 1); the clique number concentrates near
/// this value for large n. Requires n >= 4.
std::uint32_t clique_number_estimate(std::uint64_t n);

/// log2 of C(n,k) * P(Binomial(C(k,2), 1/2) >= ceil((1-delta) C(k,2))) —
/// the exact expected number of size-k sets of density >= 1-delta in
/// G(n,1/2). Exact big-integer arithmetic when C(k,2) <= 400.
double expected_dense_subgraph_count(std::uint32_t n, std::uint32_t k, double delta);

struct SizeThreshold {
    double size;         // (2 log2 n + 2 log2 e) / (1 - H(delta)) + 1
    double coefficient;  // 2 / (1 - H(delta))
};
/// First-moment threshold: sizes beyond it have vanishing expected counts
/// of density-(1-delta) subgraphs. Requires 0 <= delta < 1/2.
SizeThreshold size_threshold(double delta, std::uint64_t n);

/// coefficient / 2: ratio between the non-existence size scale and the
/// greedy's 2 log2 n.
double gap_ratio(double delta);

/// All analytical quantities for one (n, k, delta).
struct BoundReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    double delta = 0.0;
    double m = 0.0;
    std::vector<double> delta_schedule;
    double predicted_edges = 0.0;
    double predicted_density_discrete = 0.0;
    double predicted_density_integral = 0.0;
    double alpha = 0.0;
    double integral_value = 0.0;
    double size_threshold = 0.0;
    double threshold_coefficient = 0.0;
    double gap_ratio = 0.0;
    double expected_count_log2 = 0.0;  // at (n, k, delta)
};
BoundReport make_bound_report(std::uint32_t n, std::uint32_t k, double delta, double tol = 1e-8);

std::string bound_report_json(const BoundReport& r);
std::string bound_report_text(const BoundReport& r);

/// Doubles rendered with 12 significant digits ("%.12g"); the project-wide
/// number format for reports.
std::string format_double(double v);

}  // namespace gnpdense
