#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qipa {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;
};

// Undirected weighted MaxCut instance. Edges are stored with u < v, no
// duplicates, strictly positive weights (weight 0 means "no edge" and is
// dropped at parse time).
struct WeightedGraph {
    int num_nodes = 0;
    std::vector<Edge> edges;

    double total_weight() const;
    // Throws std::invalid_argument when an invariant is broken.
    void validate() const;
};

// Bit i of the mask / character i of the string is the side of node i.
std::uint64_t bits_from_string(const std::string& s);
std::string string_from_bits(std::uint64_t bits, int n);

double cut_value(const WeightedGraph& g, std::uint64_t partition_bits);
double cut_value(const WeightedGraph& g, const std::string& partition);

struct MaxCutResult {
    double best_value = 0.0;
    // Canonical representatives: node 0 on side '0'. The full optimum set is
    // these plus their global flips.
    std::vector<std::string> optimal_partitions;
    std::uint64_t total_optima = 0;  // including flips
};

MaxCutResult brute_force_maxcut(const WeightedGraph& g);

// Integer weights uniform in [1, max_weight]; each pair kept with probability
// `density`. Deterministic in `seed`; retries with derived sub-seeds if the
// draw produces no edges (error after 100 attempts).
WeightedGraph random_graph(int n, int max_weight, double density, std::uint64_t seed);

}  // namespace qipa
