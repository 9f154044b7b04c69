#pragma once

#include <utility>
#include <vector>

namespace recolor {

// Simple undirected graph on vertices 0..n-1. Immutable once built:
// adjacency lists are sorted ascending, symmetric, with no self-loops and
// no parallel edges (all enforced by from_edges).
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints, self-loops,
    // or duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Normalized to u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Peeling order e_1..e_n with the exact degeneracy: order[i] has at most
// `degeneracy` neighbors among order[i..n-1], and some vertex meets the bound.
struct DegeneracyCertificate {
    std::vector<int> order;
    int degeneracy = 0;
};

// Greedy minimum-degree peeling; ties broken by smallest vertex id.
// The greedy minimum over this process equals the true degeneracy.
DegeneracyCertificate degeneracy_order(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_ids;  // vertex_ids[new_id] = old_id, ascending
};

// `vertices` must be sorted, unique and in range.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace recolor
