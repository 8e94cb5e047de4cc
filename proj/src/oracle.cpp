#include "gnpdense/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "gnpdense/analysis.hpp"

namespace gnpdense {

namespace {

std::uint64_t pairs_of(std::uint64_t k) { return k * (k - 1) / 2; }

// C(n,k) capped at `cap` (returns cap+1 once the count exceeds it)
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    cap = std::min(cap, std::uint64_t{1} << 62);
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
        c = c * (n - k + j) / j;
        if (c > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(c);
}

struct SubsetSearch {
    const Graph& g;
    std::uint32_t k;
    std::uint64_t node_budget;
    std::uint64_t nodes = 0;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;

    std::vector<std::uint32_t> chosen;
    std::vector<std::uint64_t> mask;

    // max-density state
    std::uint64_t best_edges = 0;
    bool have_best = false;
    std::vector<std::uint32_t> best_set;

    SubsetSearch(const Graph& graph, std::uint32_t kk, std::uint64_t budget)
        : g(graph), k(kk), node_budget(budget), mask(graph.words_per_row(), 0) {
        chosen.reserve(kk);
    }

    void toggle(std::uint32_t v) { mask[v >> 6] ^= std::uint64_t{1} << (v & 63); }

    // lexicographic DFS maximizing induced edges
    void run_max(std::uint32_t next, std::uint64_t cur_edges) {
        if (++nodes > node_budget) throw budget_error("max_density_subgraph_exact: node budget exceeded");
        const std::uint32_t depth = static_cast<std::uint32_t>(chosen.size());
        if (depth == k) {
            ++examined;
            if (!have_best || cur_edges > best_edges) {
                best_edges = cur_edges;
                best_set = chosen;
                have_best = true;
            }
            return;
        }
        const std::uint32_t remaining = k - depth;
        for (std::uint32_t v = next; v + remaining <= g.order(); ++v) {
            const std::uint64_t gain = g.degree_into_mask(v, mask.data());
            const std::uint64_t ub =
                cur_edges + gain + pairs_of(remaining - 1) +
                std::uint64_t{remaining - 1} * (depth + 1);
            if (have_best && ub < best_edges) {
                ++pruned;
                continue;
            }
            chosen.push_back(v);
            toggle(v);
            run_max(v + 1, cur_edges + gain);
            toggle(v);
            chosen.pop_back();
        }
    }

    // counting variant: all completions counted when the partial set already
    // meets `threshold`; subtree skipped when even a clique completion misses it
    std::uint64_t count_threshold(std::uint32_t next, std::uint64_t cur_edges,
                                  std::uint64_t threshold, bool stop_at_first) {
        const std::uint32_t depth = static_cast<std::uint32_t>(chosen.size());
        const std::uint32_t remaining = k - depth;
        if (cur_edges >= threshold) {
            const std::uint64_t pool = g.order() - next;
            return binomial_capped(pool, remaining, std::uint64_t{1} << 62);
        }
        if (remaining == 0) return 0;
        std::uint64_t total = 0;
        for (std::uint32_t v = next; v + remaining <= g.order(); ++v) {
            const std::uint64_t gain = g.degree_into_mask(v, mask.data());
            const std::uint64_t ub = cur_edges + gain + pairs_of(remaining - 1) +
                                     std::uint64_t{remaining - 1} * (depth + 1);
            if (ub < threshold) continue;
            chosen.push_back(v);
            toggle(v);
            total += count_threshold(v + 1, cur_edges + gain, threshold, stop_at_first);
            toggle(v);
            chosen.pop_back();
            if (stop_at_first && total > 0) return total;
        }
        return total;
    }
};

}  // namespace

OracleResult max_density_subgraph_exact(const Graph& g, std::uint32_t k,
                                        std::uint64_t node_budget) {
    if (k < 2 || k > g.order())
        throw std::invalid_argument("max_density_subgraph_exact: need 2 <= k <= n");
    SubsetSearch search(g, k, node_budget);
    search.run_max(0, 0);
    OracleResult result;
    result.best_set = VertexSet(search.best_set);
    result.best_edges = search.best_edges;
    result.best_density =
        static_cast<double>(search.best_edges) / static_cast<double>(pairs_of(k));
    result.subsets_examined = search.examined;
    result.pruned = search.pruned;
    return result;
}

std::uint64_t count_dense_subgraphs(const Graph& g, std::uint32_t k, double delta,
                                    std::uint64_t subset_budget) {
    if (k < 2 || k > g.order())
        throw std::invalid_argument("count_dense_subgraphs: need 2 <= k <= n");
    if (binomial_capped(g.order(), k, subset_budget) > subset_budget)
        throw budget_error("count_dense_subgraphs: C(n,k) exceeds subset budget");
    const std::uint64_t threshold = dense_edge_threshold(pairs_of(k), delta);
    SubsetSearch search(g, k, ~std::uint64_t{0});
    return search.count_threshold(0, 0, threshold, false);
}

bool exists_dense_subgraph(const Graph& g, std::uint32_t k, double delta,
                           std::uint64_t subset_budget) {
    if (k < 2 || k > g.order())
        throw std::invalid_argument("exists_dense_subgraph: need 2 <= k <= n");
    if (binomial_capped(g.order(), k, subset_budget) > subset_budget)
        throw budget_error("exists_dense_subgraph: C(n,k) exceeds subset budget");
    const std::uint64_t threshold = dense_edge_threshold(pairs_of(k), delta);
    SubsetSearch search(g, k, ~std::uint64_t{0});
    return search.count_threshold(0, 0, threshold, true) > 0;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    std::size_t words;
    std::vector<std::uint32_t> current;
    std::vector<std::uint32_t> best;

    explicit CliqueSearch(const Graph& graph)
        : g(graph), words(graph.words_per_row()) {}

    // Tomita-style: color candidates, branch in reverse color order with the
    // |R| + color <= |best| cut.
    void expand(std::vector<std::uint64_t>& cand) {
        std::vector<std::uint32_t> order;
        std::vector<std::uint32_t> color_of;
        std::vector<std::uint64_t> uncolored = cand;
        std::uint32_t color = 0;
        while (true) {
            bool any = false;
            for (std::size_t w = 0; w < words; ++w)
                if (uncolored[w]) { any = true; break; }
            if (!any) break;
            ++color;
            std::vector<std::uint64_t> avail = uncolored;
            for (std::uint32_t w = 0; w < words; ++w) {
                while (avail[w]) {
                    const std::uint32_t v =
                        static_cast<std::uint32_t>(w * 64 + std::countr_zero(avail[w]));
                    order.push_back(v);
                    color_of.push_back(color);
                    uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                    const std::uint64_t* row = g.row(v);
                    for (std::size_t x = 0; x < words; ++x) avail[x] &= ~row[x];
                    avail[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                }
            }
        }
        std::vector<std::uint64_t> sub = cand;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + color_of[idx] <= best.size()) return;
            const std::uint32_t v = order[idx];
            current.push_back(v);
            std::vector<std::uint64_t> next(words);
            const std::uint64_t* row = g.row(v);
            bool nonempty = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = sub[w] & row[w];
                nonempty |= next[w] != 0;
            }
            if (nonempty)
                expand(next);
            else if (current.size() > best.size())
                best = current;
            current.pop_back();
            sub[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }
};

}  // namespace

VertexSet max_clique_exact(const Graph& g, std::uint32_t order_limit) {
    if (g.order() > order_limit)
        throw budget_error("max_clique_exact: graph exceeds the configured order limit");
    CliqueSearch search(g);
    std::vector<std::uint64_t> all(g.words_per_row(), 0);
    for (std::uint32_t v = 0; v < g.order(); ++v)
        all[v >> 6] |= std::uint64_t{1} << (v & 63);
    search.expand(all);
    return VertexSet(search.best);
}

}  // namespace gnpdense
