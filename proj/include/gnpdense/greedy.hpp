#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gnpdense/graph.hpp"

namespace gnpdense {

/// k disjoint cells of size floor(n/k); the n mod k unassigned vertices sit
/// in `leftover` and are never used by the algorithm.
struct Partition {
    std::vector<VertexSet> cells;
    VertexSet leftover;
    std::uint64_t seed = 0;
};

/// Shuffle 0..n-1 (seeded Fisher-Yates), deal consecutive blocks of
/// floor(n/k) into the k cells, rest to leftover.
Partition partition_vertices(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Explicit partition for fixtures/tests; validates the Partition invariants
/// (disjoint nonempty cells, cells + leftover cover exactly 0..n-1).
Partition make_partition(std::uint32_t n, std::vector<VertexSet> cells,
                         VertexSet leftover = VertexSet{});

void validate_partition(const Partition& part, std::uint32_t n);

struct GreedyStep {
    std::uint32_t step;    // i = 0..k-1
    std::uint32_t vertex;  // chosen from cell `step`
    std::uint32_t gained;  // edges from the chosen vertex into the current set
    std::uint32_t cell;    // 1-based cell index (= step + 1)
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    VertexSet final_set;          // one vertex per cell, |final_set| = k
    std::uint64_t final_edges = 0;
    double final_density = 0.0;   // final_edges / C(k,2)
};

/**
 * One pass of the partitioned greedy: starting from the empty set, step i
 * picks from cell i+1 the vertex with the most edges into the set built so
 * far, ties broken by lowest vertex index. Deterministic given (g, partition).
 */
GreedyTrace greedy_dense(const Graph& g, const Partition& partition);

/// Classical baseline: scan vertices in index order, keep those adjacent to
/// everything kept so far. Always returns a clique.
VertexSet plain_greedy_clique(const Graph& g);

/// JSON array of {"i":..,"vertex":..,"gained":..}.
std::string trace_steps_json(const GreedyTrace& trace);

/// CSV with header "step,vertex,gained".
std::string trace_steps_csv(const GreedyTrace& trace);

}  // namespace gnpdense
