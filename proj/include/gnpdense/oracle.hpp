#pragma once

#include <cstdint>
#include <stdexcept>

#include "gnpdense/graph.hpp"

namespace gnpdense {

/// Thrown when an exact search would exceed its configured budget. Exceeding
/// a budget is always an error, never a silent approximation.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;
inline constexpr std::uint64_t kDefaultSubsetBudget = 100'000'000;
inline constexpr std::uint32_t kDefaultCliqueOrderLimit = 256;

struct OracleResult {
    VertexSet best_set;
    std::uint64_t best_edges = 0;
    double best_density = 0.0;
    std::uint64_t subsets_examined = 0;  // complete size-k subsets evaluated
    std::uint64_t pruned = 0;            // branches cut by the bound
};

/**
 * Exact maximizer of induced edge count over all size-k subsets.
 * Depth-first lexicographic enumeration with the sound clique-completion
 * bound: cur_edges + C(r,2) + r*|chosen| < best  =>  cut. The first
 * maximizer in lexicographic order is reported. Throws budget_error once
 * more than node_budget search nodes are visited.
 */
OracleResult max_density_subgraph_exact(const Graph& g, std::uint32_t k,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

/// Exact maximum clique via branch and bound with greedy-coloring upper
/// bounds. Throws budget_error when g.order() > order_limit.
VertexSet max_clique_exact(const Graph& g, std::uint32_t order_limit = kDefaultCliqueOrderLimit);

/// Exact number of size-k subsets with induced edge count
/// >= ceil((1-delta) * C(k,2)). Requires C(n,k) <= subset_budget.
std::uint64_t count_dense_subgraphs(const Graph& g, std::uint32_t k, double delta,
                                    std::uint64_t subset_budget = kDefaultSubsetBudget);

/// True iff some size-k subset reaches density >= 1-delta; same search as
/// count_dense_subgraphs but stops at the first witness.
bool exists_dense_subgraph(const Graph& g, std::uint32_t k, double delta,
                           std::uint64_t subset_budget = kDefaultSubsetBudget);

}  // namespace gnpdense
