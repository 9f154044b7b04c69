#pragma once

#include <optional>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/rational.hpp"

namespace recolor {

// Level assignment L: V -> 1..t with a degree bound: every vertex v has at
// most degree_bound neighbors at levels >= L(v). Writing G_i for the
// subgraph induced by levels >= i, this says deg_{G_L(v)}(v) <= bound.
struct LevelPartition {
    std::vector<int> levels;  // levels[v] in 1..t
    int t = 0;
    int degree_bound = 0;

    // Validates well-formedness: levels in 1..t with every level non-empty
    // (t = max level). The degree condition is checked separately by
    // validate_partition. Throws std::invalid_argument.
    static LevelPartition make(std::vector<int> levels, int degree_bound);
};

// Renumbers the distinct values of `raw` to 1..t preserving order. Used when
// restricting a partition to an induced subgraph leaves empty levels.
std::vector<int> compress_levels(const std::vector<int>& raw);

// True iff every vertex has at most p.degree_bound neighbors at
// same-or-higher levels. p must cover all vertices (std::invalid_argument).
bool validate_partition(const Graph& g, const LevelPartition& p);

// Result of the greedy peeling. On failure `residual` is the non-empty set
// of vertices of the subgraph where every vertex has degree >= d; it
// certifies mad(g) >= d.
struct BuildPartitionResult {
    std::optional<LevelPartition> partition;  // degree bound d-1
    std::vector<int> residual;
    std::vector<int> level_sizes;  // |V_1|, ..., |V_t| for the built prefix

    bool ok() const { return partition.has_value(); }
};

// Greedy peeling: level 1 takes every vertex of degree <= d-1, then recurse
// on the rest. Succeeds iff the peeling exhausts V. The greedy level of each
// vertex is minimum over all valid degree-(d-1) partitions.
BuildPartitionResult build_partition(const Graph& g, int d);

// Parameters of the depth bound t <= ceil(log(n) / log(d/(d-eps))).
// c is the derived exponent, kept in floating point for reporting only;
// all bound checks use exact integer comparisons.
struct PartitionSpec {
    int d = 1;
    Rational epsilon;
    double c = 0.0;

    // Requires 0 < eps < d (std::invalid_argument otherwise).
    static PartitionSpec make(int d, const Rational& eps);
};

// Smallest t with (d/(d-eps))^t >= n, by exact integer comparison.
int level_depth_bound(long long n, const PartitionSpec& spec);

// Stable set S = S_1 u ... u S_t peeled from the top level down, such that
// removing S drops the partition's degree bound by one.
struct StableSetResult {
    std::vector<int> stable_set;                   // ascending vertex ids in g
    std::vector<std::vector<int>> per_level_sets;  // per_level_sets[i-1] = S_i
    Graph reduced_graph;                           // g minus S
    std::vector<int> reduced_vertex_ids;           // reduced id -> original id
    LevelPartition reduced_partition;              // degree bound l-1, levels compressed
};

// S_t is a greedy maximal stable set in G_t; below that, S_i is a greedy
// maximal stable set in G_i minus the higher S_j and their G_i-neighbors.
// Greedy insertion is smallest-vertex-first. Requires a validating partition
// with degree_bound >= 1.
StableSetResult extract_stable_set(const Graph& g, const LevelPartition& p);

}  // namespace recolor
