#pragma once

#include <utility>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/partition.hpp"

namespace recolor {

// One procedure of the recursive recoloring algorithm: the level-decreasing
// path it was initiated with, its current vertex (the last path element) and
// the target color chosen for that vertex.
struct ProcedureFrame {
    std::vector<int> path;
    int current;
    int target_color;
};

// Per-vertex recoloring counters for one recolor_vertex run, bounded by
// degree_bound^(L(v) - L(w)) for each recolored w (the level-decreasing
// path count from v to w).
struct RecolorBudget {
    std::vector<long long> per_vertex_counts;
    int level_of_origin = 0;
};

// Optional instrumentation: frames in initiation order (strictly decreasing
// in the path order path_less) plus the final budget.
struct RecolorTrace {
    std::vector<ProcedureFrame> frames;
    RecolorBudget budget;
};

// The vertex order used to sort neighbor processing: by (level, id).
bool vertex_precedes(const LevelPartition& p, int a, int b);

// Lexicographic order on vertex paths: compares front vertices first under
// vertex_precedes; a path extending another is smaller than it (the empty
// path is largest).
bool path_less(const LevelPartition& p, const std::vector<int>& a, const std::vector<int>& b);

// Changes the color of v without touching any other vertex at level >=
// L(v), keeping every intermediate coloring proper. Conflicts at lower
// levels are cleared by recursive level-decreasing procedures; each vertex w
// is recolored at most degree_bound^(L(v)-L(w)) times. Requires a proper
// coloring, a validating partition, and k >= degree_bound + 2
// (PreconditionError otherwise).
std::pair<RecolorSequence, Coloring> recolor_vertex(const Graph& g, const LevelPartition& p,
                                                    const Coloring& gamma, int v,
                                                    RecolorTrace* trace = nullptr);

// Removes dead_color (which must be the top color, gamma.k) from the whole
// graph, cleaning levels t down to 1. While level i is cleaned no vertex at
// level >= i gains the dead color, so one pass per level suffices. Total
// steps are bounded by degree_bound^t * n^2.
std::pair<RecolorSequence, Coloring> eliminate_color(const Graph& g, const LevelPartition& p,
                                                     const Coloring& gamma, int dead_color);

struct CanonicalizeResult {
    RecolorSequence seq;
    Coloring gamma_star;
};

// Transforms alpha into the canonical coloring gamma_star, which depends
// only on the graph and d, never on alpha. For l = d-1 down to 1: eliminate
// the top active color from the current subgraph, recolor the extracted
// stable set S_l to that color, and drop S_l from the active subgraph;
// finally the edgeless remainder is set to color 1. Requires alpha.k >= d+1
// and a successful build_partition(g, d); on partition failure the
// PreconditionError carries the residual witness (mad >= d).
CanonicalizeResult canonicalize(const Graph& g, int d, const Coloring& alpha);

// Route alpha -> gamma_star -> beta: canonicalize both endpoints and append
// the reversal of beta's sequence.
RecolorSequence transform_sparse(const Graph& g, int d, const Coloring& alpha,
                                 const Coloring& beta);

}  // namespace recolor
