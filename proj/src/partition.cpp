#include "recolor/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace recolor {

LevelPartition LevelPartition::make(std::vector<int> levels, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("partition: negative degree bound");
    int t = 0;
    for (int l : levels) {
        if (l < 1) throw std::invalid_argument("partition: level below 1");
        t = std::max(t, l);
    }
    std::vector<int> count(t + 1, 0);
    for (int l : levels) ++count[l];
    for (int i = 1; i <= t; ++i) {
        if (count[i] == 0) {
            throw std::invalid_argument("partition: level " + std::to_string(i) + " is empty");
        }
    }
    LevelPartition p;
    p.levels = std::move(levels);
    p.t = t;
    p.degree_bound = degree_bound;
    return p;
}

std::vector<int> compress_levels(const std::vector<int>& raw) {
    std::map<int, int> remap;
    for (int l : raw) remap[l] = 0;
    int next = 1;
    for (auto& [l, id] : remap) id = next++;
    std::vector<int> out;
    out.reserve(raw.size());
    for (int l : raw) out.push_back(remap[l]);
    return out;
}

bool validate_partition(const Graph& g, const LevelPartition& p) {
    if (static_cast<int>(p.levels.size()) != g.num_vertices()) {
        throw std::invalid_argument("validate_partition: levels do not cover all vertices");
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        int up = 0;
        for (int w : g.neighbors(v)) {
            if (p.levels[w] >= p.levels[v]) ++up;
        }
        if (up > p.degree_bound) return false;
    }
    return true;
}

BuildPartitionResult build_partition(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("build_partition: d must be >= 1");
    const int n = g.num_vertices();
    std::vector<int> levels(n, 0);
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    BuildPartitionResult result;
    int assigned = 0;
    int level = 0;
    while (assigned < n) {
        ++level;
        std::vector<int> peel;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] <= d - 1) peel.push_back(v);
        }
        if (peel.empty()) break;  // residual: every remaining vertex has degree >= d
        for (int v : peel) {
            levels[v] = level;
            removed[v] = true;
        }
        for (int v : peel) {
            for (int w : g.neighbors(v)) {
                if (!removed[w]) --deg[w];
            }
        }
        assigned += static_cast<int>(peel.size());
        result.level_sizes.push_back(static_cast<int>(peel.size()));
    }
    if (assigned < n) {
        for (int v = 0; v < n; ++v) {
            if (!removed[v]) result.residual.push_back(v);
        }
        return result;
    }
    result.partition = LevelPartition::make(std::move(levels), d - 1);
    return result;
}

PartitionSpec PartitionSpec::make(int d, const Rational& eps) {
    if (d < 1) throw std::invalid_argument("PartitionSpec: d must be >= 1");
    if (eps <= Rational(0) || eps >= Rational(d)) {
        throw std::invalid_argument("PartitionSpec: epsilon must satisfy 0 < eps < d");
    }
    PartitionSpec spec;
    spec.d = d;
    spec.epsilon = eps;
    // c(d, eps) = 1/log_d(d/(d-eps)) + 2; reporting only.
    double ratio = static_cast<double>(d) / (d - eps.to_double());
    spec.c = std::log(static_cast<double>(d)) / std::log(ratio) + 2.0;
    return spec;
}

int level_depth_bound(long long n, const PartitionSpec& spec) {
    if (n < 1) throw std::invalid_argument("level_depth_bound: n must be >= 1");
    // ratio = d/(d-eps) = P/Q with P > Q >= 1; find smallest t with P^t >= n Q^t.
    using boost::multiprecision::cpp_int;
    cpp_int p = spec.d * spec.epsilon.den;
    cpp_int q = p - spec.epsilon.num;
    cpp_int lhs = 1;
    cpp_int rhs = n;
    int t = 0;
    while (lhs < rhs) {
        lhs *= p;
        rhs *= q;
        ++t;
    }
    return t;
}

StableSetResult extract_stable_set(const Graph& g, const LevelPartition& p) {
    if (p.degree_bound < 1) {
        throw std::invalid_argument("extract_stable_set: degree bound must be >= 1");
    }
    if (!validate_partition(g, p)) {
        throw std::invalid_argument("extract_stable_set: partition does not validate");
    }
    const int n = g.num_vertices();
    const int t = p.t;

    StableSetResult result;
    result.per_level_sets.assign(t, {});
    std::vector<bool> chosen(n, false);

    // From V_t down to V_1. The eligible vertices of G_i \ T_i are those at
    // level >= i that are neither chosen nor adjacent to a chosen vertex
    // (every chosen vertex sits at level >= i here, so adjacency to any
    // chosen vertex is exactly membership in T_i or conflict with this
    // round's picks). Greedy maximality at higher levels forces every
    // eligible vertex down to level exactly i, which the loop asserts.
    for (int i = t; i >= 1; --i) {
        std::vector<int>& s_i = result.per_level_sets[i - 1];
        for (int v = 0; v < n; ++v) {
            if (p.levels[v] < i || chosen[v]) continue;
            bool blocked = false;
            for (int w : g.neighbors(v)) {
                if (chosen[w]) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            if (p.levels[v] != i) {
                throw std::logic_error("extract_stable_set: eligible vertex above current level");
            }
            s_i.push_back(v);
            chosen[v] = true;
        }
    }

    for (int v = 0; v < n; ++v) {
        if (chosen[v]) result.stable_set.push_back(v);
    }
    // independence in g is a defining property; check it outright
    for (std::size_t a = 0; a < result.stable_set.size(); ++a) {
        for (std::size_t b = a + 1; b < result.stable_set.size(); ++b) {
            if (g.has_edge(result.stable_set[a], result.stable_set[b])) {
                throw std::logic_error("extract_stable_set: result is not independent");
            }
        }
    }

    std::vector<int> survivors;
    std::vector<int> survivor_levels;
    for (int v = 0; v < n; ++v) {
        if (!chosen[v]) {
            survivors.push_back(v);
            survivor_levels.push_back(p.levels[v]);
        }
    }
    auto reduced = induced_subgraph(g, survivors);
    result.reduced_graph = reduced.graph;
    result.reduced_vertex_ids = reduced.vertex_ids;
    if (!survivors.empty()) {
        result.reduced_partition =
            LevelPartition::make(compress_levels(survivor_levels), p.degree_bound - 1);
    } else {
        result.reduced_partition = LevelPartition::make({}, p.degree_bound - 1);
    }
    if (!validate_partition(result.reduced_graph, result.reduced_partition)) {
        throw std::logic_error("extract_stable_set: reduced partition fails validation");
    }
    return result;
}

}  // namespace recolor
