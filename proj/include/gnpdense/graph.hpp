#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace gnpdense {

/// Strictly increasing set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts `members`; throws std::invalid_argument on duplicates.
    explicit VertexSet(std::vector<std::uint32_t> members);

    /// {0, 1, ..., n-1}
    static VertexSet full(std::uint32_t n);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return members_[i]; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(std::uint32_t v) const;

    /// Throws std::invalid_argument if any index is >= n.
    void check_range(std::uint32_t n) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<std::uint32_t> members_;
};

/**
 * Immutable simple undirected graph with bit-packed adjacency rows.
 *
 * adjacent(u,v) == adjacent(v,u), adjacent(v,v) == false. Row v is a bitmap
 * of v's neighbourhood, so set-degree queries are word AND + popcount.
 * Safe for unrestricted concurrent reads.
 */
class Graph {
public:
    /**
     * G(n,p) sampler. Pairs are drawn in the fixed canonical order
     * (u = 0..n-2, v = u+1..n-1); each pair is an edge iff
     * unit_draw(engine) < p, with the engine std::mt19937_64 seeded by
     * `seed`. Identical (n, p, seed) always reproduce the identical graph.
     */
    static Graph generate(std::uint32_t n, double p, std::uint64_t seed);

    /// Build from an explicit edge list (u < v not required; validated, deduped is an error).
    static Graph from_edges(std::uint32_t n,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    static Graph complete(std::uint32_t n);

    std::uint32_t order() const { return n_; }
    std::uint64_t edge_count() const { return edge_count_; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    /// Generation provenance; meaningful only when generated() is true.
    bool generated() const { return generated_; }
    double gen_p() const { return p_; }
    std::uint64_t gen_seed() const { return seed_; }

    std::size_t words_per_row() const { return words_; }
    const std::uint64_t* row(std::uint32_t v) const { return bits_.data() + std::size_t{v} * words_; }

    /// Bitmap of a vertex set, words_per_row() words.
    std::vector<std::uint64_t> mask_of(const VertexSet& s) const;

    /// popcount(row(v) & mask); mask must have words_per_row() words.
    std::uint64_t degree_into_mask(std::uint32_t v, const std::uint64_t* mask) const;

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    /// Text edge-list format: "n m\n" then m lines "u v\n" with u < v, sorted
    /// lexicographically. write/read round-trip bit-exactly.
    void write_edge_list(std::ostream& out) const;
    static Graph read_edge_list(std::istream& in);

private:
    Graph(std::uint32_t n);
    void add_edge(std::uint32_t u, std::uint32_t v);

    std::uint32_t n_ = 0;
    std::size_t words_ = 0;
    std::uint64_t edge_count_ = 0;
    bool generated_ = false;
    double p_ = 0.0;
    std::uint64_t seed_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// |E(S,T)|: edges with one endpoint in s and the other in t; an edge with
/// both endpoints in the intersection is counted once.
std::uint64_t edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Exact induced density |E(S,S)| / C(|S|,2).
struct Density {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
    double value = 0.0;
};
Density density(const Graph& g, const VertexSet& s);

/// |E({v}, S)|; v itself never counts (no self-loops).
std::uint64_t degree_into(const Graph& g, std::uint32_t v, const VertexSet& s);

}  // namespace gnpdense
