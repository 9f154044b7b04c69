#pragma once

#include <vector>

#include "recolor/graph.hpp"
#include "recolor/rational.hpp"

namespace recolor {

struct DensestSubgraph {
    Rational mad;              // 2|E(H)|/|V(H)| of the witness
    std::vector<int> witness;  // vertex set of a maximum-density induced subgraph
};

// Exact maximum average degree: max over non-empty induced subgraphs H of
// 2|E(H)|/|V(H)|. Computed by iterating a min-cut feasibility test over
// candidate densities (denominators <= n, so the search is finite and
// exact); no floating point is involved. Throws std::invalid_argument on an
// empty graph.
DensestSubgraph mad_with_witness(const Graph& g);

Rational mad(const Graph& g);

}  // namespace recolor
