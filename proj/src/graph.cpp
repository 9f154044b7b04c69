#include "recolor/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace recolor {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        }
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second) {
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        }
    }
    for (auto [u, v] : seen) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.edges_.assign(seen.begin(), seen.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

DegeneracyCertificate degeneracy_order(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::set<std::pair<int, int>> queue;  // (current degree, id)
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    DegeneracyCertificate cert;
    cert.order.reserve(n);
    std::vector<bool> removed(n, false);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        cert.order.push_back(v);
        cert.degeneracy = std::max(cert.degeneracy, d);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.insert({deg[w], w});
        }
    }
    return cert;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> new_id(g.num_vertices(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.num_vertices()) {
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        }
        if (new_id[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        if (i > 0 && vertices[i - 1] >= v) {
            throw std::invalid_argument("induced_subgraph: vertices must be sorted");
        }
        new_id[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        if (new_id[u] != -1 && new_id[v] != -1) edges.push_back({new_id[u], new_id[v]});
    }
    return {Graph::from_edges(static_cast<int>(vertices.size()), edges), vertices};
}

}  // namespace recolor
