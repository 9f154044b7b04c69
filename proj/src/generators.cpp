#include "recolor/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace recolor {

namespace {

// mt19937_64 modulo n. The slight bias is irrelevant for test families and
// keeps outputs independent of the standard library's distribution details.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

Graph icosahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 5; ++i) {
        int next = i % 5 + 1;
        edges.push_back({0, i});              // top apex to upper ring
        edges.push_back({i, next});           // upper ring cycle
        edges.push_back({11, 5 + i});         // bottom apex to lower ring
        edges.push_back({5 + i, 5 + next});   // lower ring cycle
        edges.push_back({i, 5 + i});          // ring-to-ring
        edges.push_back({i, 5 + next});
    }
    return Graph::from_edges(12, edges);
}

namespace {

Graph grid_graph(int m, bool diagonals) {
    if (m < 1) throw std::invalid_argument("grid: m must be >= 1");
    const int side = 2 * m;
    auto id = [side](int i, int j) { return (i - 1) * side + (j - 1); };
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= side; ++i) {
        for (int j = 1; j <= side; ++j) {
            if (j < side) edges.push_back({id(i, j), id(i, j + 1)});
            if (i < side) edges.push_back({id(i, j), id(i + 1, j)});
            if (diagonals && i < side && j < side) edges.push_back({id(i, j), id(i + 1, j + 1)});
        }
    }
    return Graph::from_edges(side * side, edges);
}

}  // namespace

Graph triangulated_grid(int m) { return grid_graph(m, true); }

Graph square_grid(int m) { return grid_graph(m, false); }

Graph random_degenerate(int n, int d, Seed seed) {
    if (n < 1) throw std::invalid_argument("random_degenerate: n must be >= 1");
    if (d < 1) throw std::invalid_argument("random_degenerate: d must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pool;
    for (int v = 1; v < n; ++v) {
        int picks = std::min(d - 1, v);
        // partial Fisher-Yates over the earlier vertices
        pool.resize(v);
        for (int i = 0; i < v; ++i) pool[i] = i;
        for (int i = 0; i < picks; ++i) {
            std::uint64_t j = i + uniform_below(rng, static_cast<std::uint64_t>(v - i));
            std::swap(pool[i], pool[j]);
            edges.push_back({pool[i], v});
        }
    }
    return Graph::from_edges(n, edges);
}

Coloring random_proper_coloring(const Graph& g, int k, Seed seed) {
    std::mt19937_64 rng(seed);
    DegeneracyCertificate cert = degeneracy_order(g);
    Coloring c;
    c.k = k;
    c.colors.assign(g.num_vertices(), 0);
    std::vector<bool> used(k + 1, false);
    // reverse peeling order: already-colored neighbors number <= degeneracy
    for (auto it = cert.order.rbegin(); it != cert.order.rend(); ++it) {
        int v = *it;
        std::fill(used.begin(), used.end(), false);
        for (int w : g.neighbors(v)) {
            if (c.colors[w] != 0) used[c.colors[w]] = true;
        }
        std::vector<int> admissible;
        for (int a = 1; a <= k; ++a) {
            if (!used[a]) admissible.push_back(a);
        }
        if (admissible.empty()) {
            throw std::invalid_argument("random_proper_coloring: k=" + std::to_string(k) +
                                        " too small for greedy along the peeling order");
        }
        c.colors[v] = admissible[uniform_below(rng, admissible.size())];
    }
    return c;
}

}  // namespace recolor
