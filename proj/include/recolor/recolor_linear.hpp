#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// A recoloring of a neighbor of the vertex being inserted: position in the
// base sequence and the color that neighbor switches to.
struct InsertionEvent {
    std::size_t time_index;
    int vertex;
    int target_color;
};

// Extends a valid recoloring sequence for G minus u to one for G.
//
// Whenever a neighbor event would recolor onto u's current color, a step for
// u is inserted right before it. The new color avoids all current neighbor
// colors (at most d-1) and the next d event targets (fewer if fewer remain),
// so u needs no further move for at least d events; smallest admissible
// color wins. A final step to beta_u is appended if needed. u is recolored
// at most d times in total.
//
// `events` are the base-sequence steps touching u's neighbors, in order;
// `neighbor_start_colors` gives each neighbor's color at the start.
RecolorSequence insert_vertex(int u, const RecolorSequence& base_seq, int alpha_u, int beta_u,
                              const std::vector<InsertionEvent>& events,
                              const std::vector<std::pair<int, int>>& neighbor_start_colors,
                              int k, int d);

// Transforms alpha into beta with k >= 2d colors on a (d-1)-degenerate
// graph, where d-1 is the exact degeneracy; every vertex is recolored at
// most d times, so the sequence length is at most d*n. Processes the
// peeling order from the last vertex backwards, inserting one vertex at a
// time. Throws PreconditionError when k < 2d, std::invalid_argument on
// improper or mismatched colorings.
RecolorSequence transform_linear(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                 int k);

}  // namespace recolor
