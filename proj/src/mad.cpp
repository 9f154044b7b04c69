#include "recolor/mad.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace recolor {

namespace {

// Dinic max-flow, long long capacities.
struct FlowNetwork {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };

    explicit FlowNetwork(int n) : arcs(n), level(n), iter(n) {}

    void add_arc(int a, int b, long long cap_ab, long long cap_ba) {
        arcs[a].push_back({b, cap_ab, static_cast<int>(arcs[b].size())});
        arcs[b].push_back({a, cap_ba, static_cast<int>(arcs[a].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
        }
        return flow;
    }

    // Source side of the min cut: residual reachability from s.
    std::vector<bool> source_side(int s) const {
        std::vector<bool> reach(arcs.size(), false);
        std::queue<int> q;
        reach[s] = true;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && !reach[a.to]) {
                    reach[a.to] = true;
                    q.push(a.to);
                }
            }
        }
        return reach;
    }

    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;
};

// Goldberg's network for the guess density p/q (density = |E|/|V|), with all
// capacities scaled by q. The cut induced by a vertex set V1 has value
// q*m*n - 2*(q|E(V1)| - p|V1|), so min cut < q*m*n iff some non-empty
// subgraph has density strictly above p/q.
bool strictly_denser_subgraph(const Graph& g, long long p, long long q,
                              std::vector<int>& out_witness) {
    const long long n = g.num_vertices();
    const long long m = g.num_edges();
    const int source = static_cast<int>(n);
    const int sink = static_cast<int>(n) + 1;
    FlowNetwork net(static_cast<int>(n) + 2);
    for (int v = 0; v < n; ++v) {
        net.add_arc(source, v, m * q, 0);
        net.add_arc(v, sink, m * q + 2 * p - q * g.degree(v), 0);
    }
    for (auto [u, v] : g.edges()) net.add_arc(u, v, q, q);

    long long cut = net.max_flow(source, sink);
    if (cut >= q * m * n) return false;
    std::vector<bool> side = net.source_side(source);
    out_witness.clear();
    for (int v = 0; v < n; ++v) {
        if (side[v]) out_witness.push_back(v);
    }
    if (out_witness.empty()) throw std::logic_error("mad: non-trivial cut with empty source side");
    return true;
}

long long edges_inside(const Graph& g, const std::vector<int>& vertices) {
    std::vector<bool> in(g.num_vertices(), false);
    for (int v : vertices) in[v] = true;
    long long count = 0;
    for (auto [u, v] : g.edges()) {
        if (in[u] && in[v]) ++count;
    }
    return count;
}

}  // namespace

DensestSubgraph mad_with_witness(const Graph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("mad: empty graph");
    if (g.num_edges() == 0) return {Rational(0), {0}};

    // Start from the whole graph and repeat: if some subgraph is strictly
    // denser than the current best, it becomes the new witness. Densities
    // take finitely many values, so this terminates with the exact maximum.
    std::vector<int> witness(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) witness[v] = v;
    Rational best(g.num_edges(), g.num_vertices());

    std::vector<int> candidate;
    while (strictly_denser_subgraph(g, best.num, best.den, candidate)) {
        Rational density(edges_inside(g, candidate), static_cast<long long>(candidate.size()));
        if (!(best < density)) {
            throw std::logic_error("mad: min-cut witness is not strictly denser");
        }
        best = density;
        witness = candidate;
    }
    return {Rational(2 * best.num, best.den), witness};
}

Rational mad(const Graph& g) { return mad_with_witness(g).mad; }

}  // namespace recolor
