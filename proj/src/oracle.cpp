#include "recolor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

#include "recolor/errors.hpp"

namespace recolor {

namespace {

// Backtracking enumeration of proper colorings, vertices in id order,
// colors ascending. Calls on_state(colors) for every complete coloring.
template <typename F>
void enumerate_proper(const Graph& g, int k, long long budget, F&& on_state) {
    if (k < 1) throw std::invalid_argument("oracle: k must be >= 1");
    const int n = g.num_vertices();
    long long count = 0;
    auto emit = [&](const std::vector<int>& colors) {
        if (++count > budget) {
            throw BudgetExceeded("oracle: more than " + std::to_string(budget) +
                                 " proper colorings");
        }
        on_state(colors);
    };
    if (n == 0) {
        emit({});
        return;
    }
    std::vector<std::vector<int>> earlier(n);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) {
            if (w < v) earlier[v].push_back(w);
        }
    }
    std::vector<int> colors(n, 0);
    int v = 0;
    while (v >= 0) {
        ++colors[v];
        if (colors[v] > k) {
            colors[v] = 0;
            --v;
            continue;
        }
        bool clash = false;
        for (int w : earlier[v]) {
            if (colors[w] == colors[v]) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        if (v == n - 1) {
            emit(colors);
        } else {
            ++v;
        }
    }
}

// True iff no single-vertex recoloring of `colors` stays proper. This is an
// independent code path from is_frozen (which counts distinct neighbor
// colors); the two are cross-checked in tests.
bool no_admissible_move(const Graph& g, int k, const std::vector<int>& colors) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        for (int a = 1; a <= k; ++a) {
            if (a == colors[v]) continue;
            bool blocked = false;
            for (int w : g.neighbors(v)) {
                if (colors[w] == a) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) return false;
        }
    }
    return true;
}

struct UnionFind {
    std::vector<long long> parent;

    explicit UnionFind(long long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    long long find(long long x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

StateSpace StateSpace::build(const Graph& g, int k, long long budget) {
    const int n = g.num_vertices();
    // codes live in 64 bits
    long double bits = n * std::log2(static_cast<long double>(k));
    if (bits > 63.0L) {
        throw BudgetExceeded("oracle: k^n does not fit the 64-bit state encoding");
    }
    StateSpace space;
    space.graph_ = g;
    space.k_ = k;
    space.powers_.assign(n, 1);
    for (int v = n - 2; v >= 0; --v) space.powers_[v] = space.powers_[v + 1] * k;
    enumerate_proper(g, k, budget, [&](const std::vector<int>& colors) {
        space.codes_.push_back(space.encode(colors));
    });
    return space;
}

std::uint64_t StateSpace::encode(const std::vector<int>& colors) const {
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        code += static_cast<std::uint64_t>(colors[v] - 1) * powers_[v];
    }
    return code;
}

std::vector<int> StateSpace::decode(std::uint64_t code) const {
    std::vector<int> colors(powers_.size());
    for (std::size_t v = 0; v < powers_.size(); ++v) {
        colors[v] = static_cast<int>(code / powers_[v]) + 1;
        code %= powers_[v];
    }
    return colors;
}

std::optional<long long> StateSpace::index_of(const std::vector<int>& colors) const {
    std::uint64_t code = encode(colors);
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return it - codes_.begin();
}

std::vector<long long> StateSpace::neighbors_of(long long index) const {
    std::vector<int> colors = decode(codes_[index]);
    std::vector<long long> out;
    for (int v = 0; v < graph_.num_vertices(); ++v) {
        for (int a = 1; a <= k_; ++a) {
            if (a == colors[v]) continue;
            bool blocked = false;
            for (int w : graph_.neighbors(v)) {
                if (colors[w] == a) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            std::uint64_t code =
                codes_[index] + (static_cast<std::uint64_t>(a) - colors[v]) * powers_[v];
            auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
            out.push_back(it - codes_.begin());
        }
    }
    return out;
}

std::optional<long long> StateSpace::distance(long long from, long long to) const {
    if (from == to) return 0;
    std::vector<long long> dist(codes_.size(), -1);
    std::queue<long long> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        long long s = q.front();
        q.pop();
        for (long long nb : neighbors_of(s)) {
            if (dist[nb] >= 0) continue;
            dist[nb] = dist[s] + 1;
            if (nb == to) return dist[nb];
            q.push(nb);
        }
    }
    return std::nullopt;
}

namespace {

// Eccentricity of `source` over a precomputed adjacency list.
long long eccentricity(const std::vector<std::vector<long long>>& adj, long long source,
                       std::vector<long long>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<long long> q;
    dist[source] = 0;
    q.push(source);
    long long ecc = 0;
    while (!q.empty()) {
        long long s = q.front();
        q.pop();
        for (long long nb : adj[s]) {
            if (dist[nb] >= 0) continue;
            dist[nb] = dist[s] + 1;
            ecc = std::max(ecc, dist[nb]);
            q.push(nb);
        }
    }
    return ecc;
}

constexpr long long kExactDiameterLimit = 20'000;

}  // namespace

ReconfGraphStats reconf_stats(const Graph& g, int k, long long budget, int threads) {
    StateSpace space = StateSpace::build(g, k, budget);
    const long long n_states = space.num_states();

    ReconfGraphStats stats;
    stats.num_colorings = n_states;
    if (n_states == 0) return stats;

    for (long long i = 0; i < n_states; ++i) {
        if (no_admissible_move(g, k, space.state(i))) ++stats.num_frozen;
    }

    UnionFind uf(n_states);
    for (long long i = 0; i < n_states; ++i) {
        for (long long nb : space.neighbors_of(i)) uf.merge(i, nb);
    }
    for (long long i = 0; i < n_states; ++i) {
        if (uf.find(i) == i) ++stats.num_components;
    }

    if (stats.num_components != 1) return stats;  // diameter infinite

    if (n_states <= kExactDiameterLimit) {
        std::vector<std::vector<long long>> adj(n_states);
        for (long long i = 0; i < n_states; ++i) adj[i] = space.neighbors_of(i);
        int nthreads = std::max(1, threads);
        std::vector<long long> maxima(nthreads, 0);
        auto worker = [&](int tid) {
            std::vector<long long> dist(n_states);
            for (long long s = tid; s < n_states; s += nthreads) {
                maxima[tid] = std::max(maxima[tid], eccentricity(adj, s, dist));
            }
        };
        if (nthreads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        stats.diameter = *std::max_element(maxima.begin(), maxima.end());
    } else {
        // two-sweep lower bound: farthest point from state 0, then its own BFS
        std::vector<long long> dist(n_states);
        auto sweep = [&](long long source) {
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<long long> q;
            dist[source] = 0;
            q.push(source);
            long long far = source;
            while (!q.empty()) {
                long long s = q.front();
                q.pop();
                for (long long nb : space.neighbors_of(s)) {
                    if (dist[nb] >= 0) continue;
                    dist[nb] = dist[s] + 1;
                    if (dist[nb] > dist[far]) far = nb;
                    q.push(nb);
                }
            }
            return far;
        };
        long long far = sweep(0);
        long long far2 = sweep(far);
        stats.diameter = dist[far2];
        stats.diameter_is_lower_bound = true;
    }
    return stats;
}

std::optional<long long> shortest_transformation(const Graph& g, int k, const Coloring& alpha,
                                                 const Coloring& beta, long long budget) {
    if (alpha.k != k || beta.k != k) {
        throw std::invalid_argument("shortest_transformation: colorings must use the given k");
    }
    if (!is_proper(g, alpha) || !is_proper(g, beta)) {
        throw std::invalid_argument("shortest_transformation: colorings must be proper");
    }
    StateSpace space = StateSpace::build(g, k, budget);
    auto from = space.index_of(alpha.colors);
    auto to = space.index_of(beta.colors);
    if (!from || !to) {
        throw std::logic_error("shortest_transformation: proper coloring missing from state space");
    }
    return space.distance(*from, *to);
}

std::vector<Coloring> find_frozen(const Graph& g, int k, long long budget) {
    std::vector<Coloring> frozen;
    enumerate_proper(g, k, budget, [&](const std::vector<int>& colors) {
        if (no_admissible_move(g, k, colors)) frozen.push_back(Coloring{k, colors});
    });
    return frozen;
}

}  // namespace recolor
