#pragma once

#include <cstdint>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Identical seed and parameters give bit-identical outputs.
using Seed = std::uint64_t;

// The icosahedron: 12 vertices, 30 edges, 5-regular planar triangulation.
// Labeling: 0 = top apex; 1..5 = upper ring; 6..10 = lower ring; 11 = bottom
// apex. Ring vertex i (1..5) attaches to lower vertices 5+i and 5+(i mod 5)+1.
Graph icosahedron();

// 2m x 2m grid with one diagonal per cell: vertices (i,j), 1 <= i,j <= 2m,
// edges between vertices at L1-distance one plus the diagonals
// (i+1,j+1)-(i,j). Inner vertices have degree 6. Vertex (i,j) has id
// (i-1)*2m + (j-1).
Graph triangulated_grid(int m);

// Plain 2m x 2m grid graph (triangle-free). Same id convention.
Graph square_grid(int m);

// Vertices added in order, each joined to min(d-1, #earlier) distinct
// uniformly chosen earlier vertices; (d-1)-degenerate by construction.
Graph random_degenerate(int n, int d, Seed seed);

// Greedy along the reverse peeling order with a uniformly random admissible
// color per vertex. Requires k >= degeneracy+1 (std::invalid_argument).
Coloring random_proper_coloring(const Graph& g, int k, Seed seed);

}  // namespace recolor
