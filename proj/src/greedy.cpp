#include "gnpdense/greedy.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gnpdense/rng.hpp"

namespace gnpdense {

Partition partition_vertices(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (k == 0 || k > n) throw std::invalid_argument("partition_vertices: need 1 <= k <= n");
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::mt19937_64 eng(seed);
    fisher_yates(order, eng);

    const std::uint32_t cell_size = n / k;
    Partition part;
    part.seed = seed;
    part.cells.reserve(k);
    for (std::uint32_t c = 0; c < k; ++c) {
        std::vector<std::uint32_t> cell(order.begin() + std::size_t{c} * cell_size,
                                        order.begin() + std::size_t{c + 1} * cell_size);
        part.cells.emplace_back(std::move(cell));
    }
    part.leftover = VertexSet(std::vector<std::uint32_t>(
        order.begin() + std::size_t{k} * cell_size, order.end()));
    return part;
}

void validate_partition(const Partition& part, std::uint32_t n) {
    if (part.cells.empty()) throw std::invalid_argument("partition: no cells");
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    auto visit = [&](const VertexSet& s) {
        s.check_range(n);
        for (std::uint32_t v : s) {
            if (seen[v]) throw std::invalid_argument("partition: cells/leftover overlap");
            seen[v] = true;
            ++covered;
        }
    };
    const std::size_t cell_size = part.cells.front().size();
    for (const auto& cell : part.cells) {
        if (cell.empty()) throw std::invalid_argument("partition: empty cell");
        if (cell.size() != cell_size)
            throw std::invalid_argument("partition: cells must have equal size");
        visit(cell);
    }
    visit(part.leftover);
    if (covered != n) throw std::invalid_argument("partition: does not cover all vertices");
}

Partition make_partition(std::uint32_t n, std::vector<VertexSet> cells, VertexSet leftover) {
    Partition part{std::move(cells), std::move(leftover), 0};
    validate_partition(part, n);
    return part;
}

GreedyTrace greedy_dense(const Graph& g, const Partition& partition) {
    validate_partition(partition, g.order());
    const std::size_t k = partition.cells.size();

    GreedyTrace trace;
    trace.steps.reserve(k);
    std::vector<std::uint64_t> chosen_mask(g.words_per_row(), 0);
    std::vector<std::uint32_t> chosen;
    chosen.reserve(k);
    std::uint64_t total = 0;

    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t best_v = 0;
        std::uint64_t best_gain = 0;
        bool first = true;
        for (std::uint32_t v : partition.cells[i]) {
            const std::uint64_t gain = g.degree_into_mask(v, chosen_mask.data());
            if (first || gain > best_gain) {  // cells are ascending, so first max wins ties
                best_v = v;
                best_gain = gain;
                first = false;
            }
        }
        chosen.push_back(best_v);
        chosen_mask[best_v >> 6] |= std::uint64_t{1} << (best_v & 63);
        total += best_gain;
        trace.steps.push_back({static_cast<std::uint32_t>(i), best_v,
                               static_cast<std::uint32_t>(best_gain),
                               static_cast<std::uint32_t>(i + 1)});
    }

    trace.final_set = VertexSet(std::move(chosen));
    trace.final_edges = total;
    const std::uint64_t pairs = std::uint64_t{k} * (k - 1) / 2;
    trace.final_density = pairs ? static_cast<double>(total) / static_cast<double>(pairs) : 0.0;
    return trace;
}

VertexSet plain_greedy_clique(const Graph& g) {
    std::vector<std::uint64_t> mask(g.words_per_row(), 0);
    std::vector<std::uint32_t> clique;
    std::uint64_t size = 0;
    for (std::uint32_t v = 0; v < g.order(); ++v) {
        if (g.degree_into_mask(v, mask.data()) == size) {
            clique.push_back(v);
            mask[v >> 6] |= std::uint64_t{1} << (v & 63);
            ++size;
        }
    }
    return VertexSet(std::move(clique));
}

std::string trace_steps_json(const GreedyTrace& trace) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (i) out << ',';
        out << "{\"i\":" << s.step << ",\"vertex\":" << s.vertex << ",\"gained\":" << s.gained
            << '}';
    }
    out << ']';
    return out.str();
}

std::string trace_steps_csv(const GreedyTrace& trace) {
    std::ostringstream out;
    out << "step,vertex,gained\n";
    for (const auto& s : trace.steps) out << s.step << ',' << s.vertex << ',' << s.gained << '\n';
    return out.str();
}

}  // namespace gnpdense
