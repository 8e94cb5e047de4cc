#include "gnpdense/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gnpdense/rng.hpp"

namespace gnpdense {

VertexSet::VertexSet(std::vector<std::uint32_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("VertexSet: duplicate vertex index");
}

VertexSet VertexSet::full(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
    VertexSet s;
    s.members_ = std::move(v);
    return s;
}

bool VertexSet::contains(std::uint32_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_range(std::uint32_t n) const {
    if (!members_.empty() && members_.back() >= n)
        throw std::invalid_argument("VertexSet: vertex index out of range");
}

Graph::Graph(std::uint32_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Graph: n must be >= 1");
    words_ = (std::size_t{n} + 63) / 64;
    bits_.assign(std::size_t{n} * words_, 0);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    bits_[std::size_t{u} * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[std::size_t{v} * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
}

namespace {

// 64x64 bit-matrix transpose, LSB-first columns (element (r,c) = bit c of a[r])
void transpose64(std::uint64_t a[64]) {
    std::uint64_t m = 0x00000000FFFFFFFFull;
    for (unsigned j = 32; j != 0; j >>= 1, m ^= m << j) {
        for (unsigned k = 0; k < 64; k = (k + j + 1) & ~j) {
            const std::uint64_t t = ((a[k] >> j) ^ a[k | j]) & m;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

}  // namespace

Graph Graph::generate(std::uint32_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("generate: p must be in [0,1]");
    Graph g(n);
    g.generated_ = true;
    g.p_ = p;
    g.seed_ = seed;
    std::mt19937_64 eng(seed);

    // pass 1: draw pairs in canonical order, writing the upper triangle only
    // (row-sequential; the scattered mirror writes would thrash the cache);
    // bits are collected per word in a register before the store
    std::uint64_t edges = 0;
    for (std::uint32_t u = 0; u + 1 < n; ++u) {
        std::uint64_t* row_u = g.bits_.data() + std::size_t{u} * g.words_;
        std::uint32_t v = u + 1;
        while (v < n) {
            const std::uint32_t word = v >> 6;
            const std::uint32_t end = std::min(n, (word + 1) << 6);
            std::uint64_t bits = 0;
            for (; v < end; ++v)
                if (unit_draw(eng) < p) bits |= std::uint64_t{1} << (v & 63);
            row_u[word] |= bits;
            edges += std::popcount(bits);
        }
    }
    g.edge_count_ = edges;

    // pass 2: mirror via 64x64 block transposes
    const std::size_t blocks = g.words_;
    std::uint64_t buf[64];
    for (std::size_t bi = 0; bi < blocks; ++bi) {
        for (std::size_t bj = bi; bj < blocks; ++bj) {
            for (unsigned r = 0; r < 64; ++r) {
                const std::size_t row = bi * 64 + r;
                buf[r] = row < n ? g.bits_[row * g.words_ + bj] : 0;
            }
            transpose64(buf);
            for (unsigned r = 0; r < 64; ++r) {
                const std::size_t row = bj * 64 + r;
                if (row < n) g.bits_[row * g.words_ + bi] |= buf[r];
            }
        }
    }
    return g;
}

Graph Graph::from_edges(std::uint32_t n,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("from_edges: vertex out of range");
        if (u == v) throw std::invalid_argument("from_edges: self-loop");
        if (g.adjacent(u, v)) throw std::invalid_argument("from_edges: duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::complete(std::uint32_t n) {
    Graph g(n);
    for (std::uint32_t u = 0; u + 1 < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::vector<std::uint64_t> Graph::mask_of(const VertexSet& s) const {
    s.check_range(n_);
    std::vector<std::uint64_t> mask(words_, 0);
    for (std::uint32_t v : s) mask[v >> 6] |= std::uint64_t{1} << (v & 63);
    return mask;
}

std::uint64_t Graph::degree_into_mask(std::uint32_t v, const std::uint64_t* mask) const {
    const std::uint64_t* r = row(v);
    std::uint64_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(r[w] & mask[w]);
    return d;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u + 1 < n_; ++u)
        for (std::uint32_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

void Graph::write_edge_list(std::ostream& out) const {
    out << n_ << ' ' << edge_count_ << '\n';
    for (std::uint32_t u = 0; u + 1 < n_; ++u)
        for (std::uint32_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out << u << ' ' << v << '\n';
}

Graph Graph::read_edge_list(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n == 0 || n > 0xFFFFFFFFull) throw std::invalid_argument("edge list: bad vertex count");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(m);
    std::pair<std::uint32_t, std::uint32_t> prev{0, 0};
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        if (u >= v || v >= n) throw std::invalid_argument("edge list: edge must satisfy u < v < n");
        std::pair<std::uint32_t, std::uint32_t> cur{static_cast<std::uint32_t>(u),
                                                    static_cast<std::uint32_t>(v)};
        if (i > 0 && !(prev < cur)) throw std::invalid_argument("edge list: edges not sorted");
        prev = cur;
        edges.push_back(cur);
    }
    return from_edges(static_cast<std::uint32_t>(n), edges);
}

std::uint64_t edge_count_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    s.check_range(g.order());
    t.check_range(g.order());
    const auto tmask = g.mask_of(t);
    std::uint64_t total = 0;
    for (std::uint32_t u : s) total += g.degree_into_mask(u, tmask.data());
    // total counts S∩T-internal edges twice; subtract one copy
    std::vector<std::uint32_t> inter;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(inter));
    if (!inter.empty()) {
        VertexSet both(std::move(inter));
        const auto bmask = g.mask_of(both);
        std::uint64_t twice = 0;
        for (std::uint32_t u : both) twice += g.degree_into_mask(u, bmask.data());
        total -= twice / 2;
    }
    return total;
}

Density density(const Graph& g, const VertexSet& s) {
    if (s.size() < 2) throw std::domain_error("density: undefined for |S| < 2");
    const std::uint64_t pairs = std::uint64_t{s.size()} * (s.size() - 1) / 2;
    const std::uint64_t e = edge_count_between(g, s, s);
    return Density{e, pairs, static_cast<double>(e) / static_cast<double>(pairs)};
}

std::uint64_t degree_into(const Graph& g, std::uint32_t v, const VertexSet& s) {
    if (v >= g.order()) throw std::invalid_argument("degree_into: vertex out of range");
    s.check_range(g.order());
    const auto mask = g.mask_of(s);
    return g.degree_into_mask(v, mask.data());
}

}  // namespace gnpdense
