#include "qipa/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qipa/rng.hpp"

namespace qipa {

double WeightedGraph::total_weight() const {
    double w = 0.0;
    for (const Edge& e : edges) w += e.w;
    return w;
}

void WeightedGraph::validate() const {
    if (num_nodes < 1) throw std::invalid_argument("graph needs at least one node");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u >= e.v) throw std::invalid_argument("edges must satisfy u < v");
        if (e.w <= 0.0) throw std::invalid_argument("edge weights must be positive");
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ")");
    }
}

std::uint64_t bits_from_string(const std::string& s) {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            b |= std::uint64_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("partition string must be over {0,1}");
    }
    return b;
}

std::string string_from_bits(std::uint64_t bits, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

double cut_value(const WeightedGraph& g, std::uint64_t partition_bits) {
    double cut = 0.0;
    for (const Edge& e : g.edges)
        if (((partition_bits >> e.u) ^ (partition_bits >> e.v)) & 1u) cut += e.w;
    return cut;
}

double cut_value(const WeightedGraph& g, const std::string& partition) {
    if (partition.size() != static_cast<std::size_t>(g.num_nodes))
        throw std::invalid_argument("partition length " + std::to_string(partition.size()) +
                                    " != num_nodes " + std::to_string(g.num_nodes));
    return cut_value(g, bits_from_string(partition));
}

MaxCutResult brute_force_maxcut(const WeightedGraph& g) {
    g.validate();
    if (g.num_nodes > 24) throw std::invalid_argument("brute force guarded at 24 nodes");
    const std::uint64_t dim = std::uint64_t{1} << g.num_nodes;
    MaxCutResult result;
    result.best_value = 0.0;
    for (std::uint64_t b = 0; b < dim; ++b) {
        const double c = cut_value(g, b);
        if (c > result.best_value) result.best_value = c;
    }
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (cut_value(g, b) == result.best_value) {
            ++result.total_optima;
            // Global flip never changes the cut, so representatives with node 0
            // on side '0' enumerate the optimum set exactly twice over.
            if ((b & 1u) == 0) result.optimal_partitions.push_back(string_from_bits(b, g.num_nodes));
        }
    }
    return result;
}

WeightedGraph random_graph(int n, int max_weight, double density, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_graph needs n >= 2");
    if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    if (!(density > 0.0) || density > 1.0) throw std::invalid_argument("density must be in (0, 1]");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        SplitMix64 sub = rng.split();
        WeightedGraph g;
        g.num_nodes = n;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const bool keep = sub.next_double() < density;
                if (!keep) continue;
                const double w = 1.0 + static_cast<double>(sub.next_below(static_cast<std::uint64_t>(max_weight)));
                g.edges.push_back({u, v, w});
            }
        }
        if (!g.edges.empty()) return g;
    }
    throw std::runtime_error("random_graph produced no edges in 100 attempts");
}

}  // namespace qipa
