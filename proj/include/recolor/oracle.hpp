#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Budget on the number of proper colorings the oracle may enumerate.
// Exceeding it raises BudgetExceeded; there are no partial results.
inline constexpr long long kDefaultStateBudget = 10'000'000;

struct ReconfGraphStats {
    long long num_colorings = 0;
    long long num_components = 0;
    // nullopt means infinite (the recoloring graph is disconnected or empty).
    std::optional<long long> diameter;
    // When the state count is too large for all-sources BFS the diameter
    // field holds a sampled lower bound instead of the exact value.
    bool diameter_is_lower_bound = false;
    long long num_frozen = 0;
};

// All proper k-colorings of g, encoded as base-k integers (vertex 0 most
// significant). Color permutations are distinct states. Enumeration order is
// lexicographic in the color vector, so codes are sorted.
class StateSpace {
public:
    static StateSpace build(const Graph& g, int k, long long budget = kDefaultStateBudget);

    long long num_states() const { return static_cast<long long>(codes_.size()); }
    int k() const { return k_; }
    const Graph& graph() const { return graph_; }

    std::uint64_t encode(const std::vector<int>& colors) const;
    std::vector<int> decode(std::uint64_t code) const;
    std::vector<int> state(long long index) const { return decode(codes_[index]); }
    std::optional<long long> index_of(const std::vector<int>& colors) const;

    // Single-vertex recolorings of the state at `index` that stay proper.
    std::vector<long long> neighbors_of(long long index) const;

    // BFS distance between two states given by index.
    std::optional<long long> distance(long long from, long long to) const;

private:
    Graph graph_;
    int k_ = 0;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint64_t> powers_;
};

// Exhaustive statistics of the k-recoloring graph of g.
ReconfGraphStats reconf_stats(const Graph& g, int k, long long budget = kDefaultStateBudget,
                              int threads = 1);

// BFS distance between alpha and beta in the k-recoloring graph; nullopt if
// they lie in different components. Both colorings must be proper.
std::optional<long long> shortest_transformation(const Graph& g, int k, const Coloring& alpha,
                                                 const Coloring& beta,
                                                 long long budget = kDefaultStateBudget);

// All frozen k-colorings, in enumeration order. Streams the search, so only
// the frozen colorings are kept in memory.
std::vector<Coloring> find_frozen(const Graph& g, int k, long long budget = kDefaultStateBudget);

}  // namespace recolor
