#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gnpdense/analysis.hpp"
#include "gnpdense/graph.hpp"
#include "gnpdense/greedy.hpp"
#include "gnpdense/oracle.hpp"
#include "gnpdense/rng.hpp"

using namespace gnpdense;

namespace {

// unpruned reference: walk every size-k subset in lexicographic order
struct NaiveBest {
    std::vector<std::uint32_t> set;
    std::uint64_t edges = 0;
};

NaiveBest naive_densest(const Graph& g, std::uint32_t k) {
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    NaiveBest best;
    bool first = true;
    while (true) {
        std::uint64_t edges = 0;
        for (std::uint32_t a = 0; a < k; ++a)
            for (std::uint32_t b = a + 1; b < k; ++b)
                if (g.adjacent(idx[a], idx[b])) ++edges;
        if (first || edges > best.edges) {
            best.set = idx;
            best.edges = edges;
            first = false;
        }
        // next combination
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == g.order() - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::uint32_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

std::uint64_t naive_count_dense(const Graph& g, std::uint32_t k, std::uint64_t threshold) {
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    std::uint64_t count = 0;
    while (true) {
        std::uint64_t edges = 0;
        for (std::uint32_t a = 0; a < k; ++a)
            for (std::uint32_t b = a + 1; b < k; ++b)
                if (g.adjacent(idx[a], idx[b])) ++edges;
        if (edges >= threshold) ++count;
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == g.order() - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (std::uint32_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return count;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!g.adjacent(s[a], s[b])) return false;
    return true;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

}  // namespace

TEST_CASE("max_density_subgraph_exact: fixtures") {
    const auto complete = max_density_subgraph_exact(Graph::complete(10), 4);
    CHECK(complete.best_density == 1.0);
    CHECK(complete.best_edges == 6);
    CHECK(complete.best_set.members() == std::vector<std::uint32_t>{0, 1, 2, 3});

    // planted 5-clique at odd positions in an otherwise empty graph
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const std::vector<std::uint32_t> planted{3, 7, 11, 15, 19};
    for (std::size_t a = 0; a < planted.size(); ++a)
        for (std::size_t b = a + 1; b < planted.size(); ++b)
            edges.push_back({planted[a], planted[b]});
    const Graph g = Graph::from_edges(20, edges);
    const auto found = max_density_subgraph_exact(g, 5);
    CHECK(found.best_set.members() == planted);
    CHECK(found.best_density == 1.0);

    CHECK_THROWS_AS(max_density_subgraph_exact(g, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_density_subgraph_exact(g, 25), std::invalid_argument);
}

TEST_CASE("max_density_subgraph_exact: pruned equals unpruned on 100 seeds") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = Graph::generate(20, 0.5, splitmix64_at(555, seed));
        const auto fast = max_density_subgraph_exact(g, 5);
        const auto slow = naive_densest(g, 5);
        CHECK(fast.best_edges == slow.edges);
        CHECK(fast.best_set.members() == slow.set);  // first lexicographic maximizer
        CHECK(fast.best_density == static_cast<double>(slow.edges) / 10.0);
        CHECK(fast.subsets_examined <= binom(20, 5));
    }
}

TEST_CASE("max_density_subgraph_exact: budget is an error, not an approximation") {
    const Graph g = Graph::generate(24, 0.5, 1);
    CHECK_THROWS_AS(max_density_subgraph_exact(g, 8, 50), budget_error);
}

TEST_CASE("max_clique_exact: fixtures") {
    CHECK(max_clique_exact(Graph::generate(7, 0.0, 1)).size() == 1);
    CHECK(max_clique_exact(Graph::complete(12)).size() == 12);
    const Graph g300 = Graph::generate(300, 0.1, 2);
    CHECK_THROWS_AS(max_clique_exact(g300), budget_error);
    CHECK_NOTHROW(max_clique_exact(g300, 300));
}

TEST_CASE("max_clique_exact: always a clique, maximum by exact counting") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Graph g = Graph::generate(16, 0.5, splitmix64_at(777, seed));
        const VertexSet clique = max_clique_exact(g);
        CHECK(is_clique(g, clique));
        const std::uint32_t omega = static_cast<std::uint32_t>(clique.size());
        // the clique number is the largest k with a density-1 subset
        CHECK(count_dense_subgraphs(g, omega, 0.0) > 0);
        if (omega < 16) CHECK(count_dense_subgraphs(g, omega + 1, 0.0) == 0);
        // agreement with the densest-set search
        CHECK(max_density_subgraph_exact(g, omega).best_density == 1.0);
    }
}

TEST_CASE("max_clique_exact: G(128,1/2) lands in the oracle-verified band" *
          doctest::timeout(1200)) {
    // the clique number of G(128,1/2) concentrates on {9,10} with occasional
    // 11 (first-moment counts: E[#9] = 277, E[#10] = 6.4, E[#11] = 0.068)
    int in_band = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Graph g = Graph::generate(128, 0.5, splitmix64_at(20260810 + 9, s));
        const std::size_t omega = max_clique_exact(g).size();
        CHECK(omega >= 8);
        CHECK(omega <= 12);
        if (omega >= 9 && omega <= 11) ++in_band;
    }
    CHECK(in_band >= 18);
}

TEST_CASE("count_dense_subgraphs: fixtures") {
    const Graph g = Graph::generate(16, 0.5, 3);
    CHECK(count_dense_subgraphs(g, 5, 1.0) == binom(16, 5));  // every subset qualifies
    CHECK(count_dense_subgraphs(Graph::complete(16), 5, 0.0) == binom(16, 5));
    CHECK(count_dense_subgraphs(Graph::complete(16), 5, 0.37) == binom(16, 5));
    CHECK_THROWS_AS(count_dense_subgraphs(g, 1, 0.5), std::invalid_argument);
    // C(30,15) = 155117520 over the default budget's smaller sibling
    const Graph big = Graph::generate(30, 0.5, 4);
    CHECK_THROWS_AS(count_dense_subgraphs(big, 15, 0.5, 1'000'000), budget_error);
}

TEST_CASE("count_dense_subgraphs matches naive enumeration") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = Graph::generate(14, 0.5, splitmix64_at(888, seed));
        for (const double delta : {0.0, 0.1, 0.25, 0.5}) {
            const std::uint32_t k = 4 + static_cast<std::uint32_t>(seed % 3);
            const std::uint64_t threshold =
                dense_edge_threshold(std::uint64_t{k} * (k - 1) / 2, delta);
            CHECK(count_dense_subgraphs(g, k, delta) == naive_count_dense(g, k, threshold));
        }
    }
}

TEST_CASE("exists_dense_subgraph agrees with the counter") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = Graph::generate(15, 0.5, splitmix64_at(999, seed));
        for (const double delta : {0.0, 0.2}) {
            for (std::uint32_t k : {4u, 6u, 8u}) {
                CHECK(exists_dense_subgraph(g, k, delta) ==
                      (count_dense_subgraphs(g, k, delta) > 0));
            }
        }
    }
}

TEST_CASE("count > 0 iff the densest subset is a clique (delta = 0)") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = Graph::generate(14, 0.5, splitmix64_at(1111, seed));
        for (std::uint32_t k : {4u, 5u, 6u}) {
            const bool any = count_dense_subgraphs(g, k, 0.0) > 0;
            const bool clique = max_density_subgraph_exact(g, k).best_density == 1.0;
            CHECK(any == clique);
        }
    }
}

TEST_CASE("oracle dominates the greedy heuristic") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = Graph::generate(24, 0.5, splitmix64_at(2222, seed));
        const Partition part = partition_vertices(24, 6, seed);
        const GreedyTrace tr = greedy_dense(g, part);
        const auto best = max_density_subgraph_exact(g, 6);
        CHECK(best.best_edges >= tr.final_edges);
        CHECK(best.best_density >= tr.final_density);
    }
}
