#include "recolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recolor {

namespace {

void check_matches(const Graph& g, const Coloring& c, const char* where) {
    if (static_cast<int>(c.colors.size()) != g.num_vertices()) {
        throw std::invalid_argument(std::string(where) + ": coloring has " +
                                    std::to_string(c.colors.size()) + " entries for a graph on " +
                                    std::to_string(g.num_vertices()) + " vertices");
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (c.colors[v] < 1 || c.colors[v] > c.k) {
            throw std::invalid_argument(std::string(where) + ": color of vertex " +
                                        std::to_string(v) + " outside 1.." + std::to_string(c.k));
        }
    }
}

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    check_matches(g, c, "is_proper");
    for (auto [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) return false;
    }
    return true;
}

bool is_frozen(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("is_frozen: coloring is not proper");
    std::vector<bool> seen(c.k + 1, false);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::fill(seen.begin(), seen.end(), false);
        int distinct = 0;
        for (int w : g.neighbors(v)) {
            if (!seen[c.colors[w]]) {
                seen[c.colors[w]] = true;
                ++distinct;
            }
        }
        // Proper, so the vertex's own color never occurs among neighbors;
        // frozen requires all k-1 other colors present.
        if (distinct < c.k - 1) return false;
    }
    return true;
}

VerifyResult verify_sequence(const Graph& g, const Coloring& start, const RecolorSequence& seq) {
    if (!is_proper(g, start)) throw std::invalid_argument("verify_sequence: start is not proper");
    Coloring cur = start;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const RecolorStep& s = seq[i];
        if (s.vertex < 0 || s.vertex >= g.num_vertices()) {
            return {std::nullopt, VerifyError{i, "vertex out of range"}};
        }
        if (s.to_color < 1 || s.to_color > cur.k || s.from_color < 1 || s.from_color > cur.k) {
            return {std::nullopt, VerifyError{i, "color outside 1..k"}};
        }
        if (s.from_color == s.to_color) {
            return {std::nullopt, VerifyError{i, "step does not change the color"}};
        }
        if (cur.colors[s.vertex] != s.from_color) {
            return {std::nullopt,
                    VerifyError{i, "from_color mismatch: vertex " + std::to_string(s.vertex) +
                                       " currently has color " +
                                       std::to_string(cur.colors[s.vertex])}};
        }
        for (int w : g.neighbors(s.vertex)) {
            if (cur.colors[w] == s.to_color) {
                return {std::nullopt,
                        VerifyError{i, "monochromatic edge (" + std::to_string(s.vertex) + "," +
                                           std::to_string(w) + ") with color " +
                                           std::to_string(s.to_color)}};
            }
        }
        cur.colors[s.vertex] = s.to_color;
    }
    return {cur, std::nullopt};
}

RecolorSequence reversed_sequence(const RecolorSequence& seq) {
    RecolorSequence out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        out.push_back({it->vertex, it->to_color, it->from_color});
    }
    return out;
}

}  // namespace recolor
