#include "recolor/recolor_linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "recolor/errors.hpp"

namespace recolor {

RecolorSequence insert_vertex(int u, const RecolorSequence& base_seq, int alpha_u, int beta_u,
                              const std::vector<InsertionEvent>& events,
                              const std::vector<std::pair<int, int>>& neighbor_start_colors,
                              int k, int d) {
    std::map<int, int> neighbor_color(neighbor_start_colors.begin(), neighbor_start_colors.end());

    RecolorSequence out;
    out.reserve(base_seq.size() + d);
    int cur = alpha_u;
    int recolorings = 0;
    std::size_t eidx = 0;
    long long last_forced_event = -1;

    for (std::size_t j = 0; j < base_seq.size(); ++j) {
        if (eidx < events.size() && events[eidx].time_index == j) {
            const InsertionEvent& ev = events[eidx];
            if (ev.target_color == cur) {
                // u must move before this event; ban current neighbor colors
                // and the next d event targets (window truncates at the end)
                std::vector<bool> banned(k + 1, false);
                for (const auto& [w, color] : neighbor_color) banned[color] = true;
                for (std::size_t e = eidx; e < events.size() && e < eidx + d; ++e) {
                    banned[events[e].target_color] = true;
                }
                int pick = 0;
                for (int a = 1; a <= k; ++a) {
                    if (!banned[a]) {
                        pick = a;
                        break;
                    }
                }
                if (pick == 0) {
                    throw std::logic_error("insert_vertex: no admissible color with k >= 2d");
                }
                // the avoided window guarantees >= d events between forced moves
                if (last_forced_event >= 0 &&
                    static_cast<long long>(eidx) - last_forced_event < d) {
                    throw std::logic_error("insert_vertex: forced moves closer than d events");
                }
                last_forced_event = static_cast<long long>(eidx);
                out.push_back({u, cur, pick});
                cur = pick;
                ++recolorings;
            }
            neighbor_color[ev.vertex] = ev.target_color;
            ++eidx;
        }
        out.push_back(base_seq[j]);
    }
    if (eidx != events.size()) {
        throw std::invalid_argument("insert_vertex: event list does not match base sequence");
    }
    if (cur != beta_u) {
        out.push_back({u, cur, beta_u});
        ++recolorings;
    }
    if (recolorings > d) {
        throw std::logic_error("insert_vertex: vertex recolored more than d times");
    }
    return out;
}

RecolorSequence transform_linear(const Graph& g, const Coloring& alpha, const Coloring& beta,
                                 int k) {
    if (alpha.k != k || beta.k != k) {
        throw std::invalid_argument("transform_linear: colorings must use the given k");
    }
    if (!is_proper(g, alpha)) throw std::invalid_argument("transform_linear: alpha is not proper");
    if (!is_proper(g, beta)) throw std::invalid_argument("transform_linear: beta is not proper");

    DegeneracyCertificate cert = degeneracy_order(g);
    const int d = cert.degeneracy + 1;
    if (k < 2 * d) {
        throw PreconditionError("transform_linear: graph has degeneracy " +
                                std::to_string(cert.degeneracy) + ", needs k >= " +
                                std::to_string(2 * d) + " but k = " + std::to_string(k));
    }

    const int n = g.num_vertices();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cert.order[i]] = i;

    // Insert vertices from the end of the peeling order backwards; `seq`
    // always transforms alpha into beta on the current suffix graph.
    RecolorSequence seq;
    for (int i = n - 1; i >= 0; --i) {
        int u = cert.order[i];
        std::vector<int> suffix_neighbors;
        for (int w : g.neighbors(u)) {
            if (pos[w] > i) suffix_neighbors.push_back(w);
        }
        if (static_cast<int>(suffix_neighbors.size()) > d - 1) {
            throw std::logic_error("transform_linear: peeling order violates back-degree bound");
        }
        std::vector<InsertionEvent> events;
        for (std::size_t j = 0; j < seq.size(); ++j) {
            if (std::binary_search(suffix_neighbors.begin(), suffix_neighbors.end(),
                                   seq[j].vertex)) {
                events.push_back({j, seq[j].vertex, seq[j].to_color});
            }
        }
        // each suffix vertex moves at most d times, so <= d(d-1) events
        if (events.size() > static_cast<std::size_t>(d) * (d - 1)) {
            throw std::logic_error("transform_linear: more than d(d-1) neighbor events");
        }
        std::vector<std::pair<int, int>> neighbor_start;
        for (int w : suffix_neighbors) neighbor_start.push_back({w, alpha.colors[w]});
        seq = insert_vertex(u, seq, alpha.colors[u], beta.colors[u], events, neighbor_start, k, d);
    }
    if (seq.size() > static_cast<std::size_t>(d) * n) {
        throw std::logic_error("transform_linear: sequence longer than d*n");
    }
    return seq;
}

}  // namespace recolor
