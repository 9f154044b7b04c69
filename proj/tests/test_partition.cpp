#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/generators.hpp"
#include "recolor/mad.hpp"
#include "recolor/partition.hpp"
#include "test_support.hpp"

using namespace recolor;
using namespace testsupport;

TEST_CASE("build_partition on named graphs") {
    SUBCASE("star, d=2: leaves peel first, then the center") {
        Graph g = make_star(5);
        auto res = build_partition(g, 2);
        REQUIRE(res.ok());
        CHECK(res.partition->t == 2);
        CHECK(res.partition->levels[0] == 2);
        for (int v = 1; v <= 5; ++v) CHECK(res.partition->levels[v] == 1);
        CHECK(validate_partition(g, *res.partition));
    }
    SUBCASE("K4, d=3: the whole graph is the residual witness") {
        auto res = build_partition(make_complete(4), 3);
        REQUIRE(!res.ok());
        CHECK(res.residual == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("triangulated grid, d=6: center of the 2m-grid sits at level m") {
        for (int m : {2, 3, 4}) {
            Graph g = triangulated_grid(m);
            auto res = build_partition(g, 6);
            REQUIRE(res.ok());
            int center = (m - 1) * 2 * m + (m - 1);
            CHECK(res.partition->levels[center] == m);
        }
    }
}

TEST_CASE("validate_partition") {
    Graph edgeless = Graph::from_edges(3, {});
    CHECK(validate_partition(edgeless, LevelPartition::make({1, 1, 1}, 0)));
    Graph edge = make_path(2);
    CHECK(!validate_partition(edge, LevelPartition::make({1, 1}, 0)));
    // the lower endpoint still sees its higher neighbor, so bound 0 never
    // admits an edge
    CHECK(!validate_partition(edge, LevelPartition::make({1, 2}, 0)));
    CHECK(validate_partition(edge, LevelPartition::make({1, 2}, 1)));
    CHECK_THROWS_AS(validate_partition(edge, LevelPartition::make({1}, 0)),
                    std::invalid_argument);
}

TEST_CASE("partition type invariants") {
    CHECK_THROWS_AS(LevelPartition::make({1, 3}, 1), std::invalid_argument);  // level 2 empty
    CHECK_THROWS_AS(LevelPartition::make({0, 1}, 1), std::invalid_argument);
    CHECK(LevelPartition::make({}, 0).t == 0);
    CHECK(compress_levels({5, 9, 5, 2}) == std::vector<int>{2, 3, 2, 1});
}

namespace {

// greedy levels are pointwise minimal among all assignments satisfying the
// degree condition (levels drawn from 1..n, gaps allowed)
void check_greedy_minimality(const Graph& g, int d) {
    auto res = build_partition(g, d);
    REQUIRE(res.ok());
    const int n = g.num_vertices();
    std::vector<int> assign(n, 1);
    while (true) {
        bool valid = true;
        for (int v = 0; v < n && valid; ++v) {
            int up = 0;
            for (int w : g.neighbors(v)) {
                if (assign[w] >= assign[v]) ++up;
            }
            valid = up <= d - 1;
        }
        if (valid) {
            for (int v = 0; v < n; ++v) REQUIRE(res.partition->levels[v] <= assign[v]);
        }
        int pos = n - 1;
        while (pos >= 0 && assign[pos] == n) assign[pos--] = 1;
        if (pos < 0) break;
        ++assign[pos];
    }
}

}  // namespace

TEST_CASE("greedy level minimality against all valid assignments") {
    check_greedy_minimality(make_path(4), 2);
    check_greedy_minimality(make_cycle(5), 3);
    check_greedy_minimality(make_star(4), 2);
    check_greedy_minimality(triangulated_grid(1), 6);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        check_greedy_minimality(random_degenerate(6, 2, seed), 2);
        check_greedy_minimality(random_degenerate(6, 3, seed), 3);
    }
}

TEST_CASE("level_depth_bound") {
    PartitionSpec spec61 = PartitionSpec::make(6, Rational(1));
    CHECK(level_depth_bound(1, spec61) == 0);
    CHECK(level_depth_bound(46656, spec61) == 59);
    CHECK(level_depth_bound(8, PartitionSpec::make(2, Rational(1))) == 3);
    CHECK(level_depth_bound(9, PartitionSpec::make(2, Rational(1))) == 4);
    CHECK_THROWS_AS(PartitionSpec::make(2, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::make(2, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::make(2, Rational(-1, 2)), std::invalid_argument);
    CHECK(PartitionSpec::make(6, Rational(1)).c == doctest::Approx(11.827).epsilon(0.01));
}

TEST_CASE("peeling shrinks levels geometrically when mad is bounded away from d") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = random_degenerate(40, 3, seed);
        int d = 4;
        Rational m = mad(g);
        REQUIRE(m < Rational(d));
        Rational eps = Rational(d) - m;
        auto res = build_partition(g, d);
        REQUIRE(res.ok());
        long long remaining = g.num_vertices();
        for (int size : res.level_sizes) {
            long long next = remaining - size;
            // next <= (d - eps)/d * remaining, exactly
            CHECK(next * d * eps.den <= remaining * (d * eps.den - eps.num));
            remaining = next;
        }
        CHECK(res.partition->t <=
              level_depth_bound(g.num_vertices(), PartitionSpec::make(d, eps)));
    }
}

TEST_CASE("extract_stable_set") {
    SUBCASE("edgeless single level takes everything") {
        Graph g = Graph::from_edges(3, {});
        auto res = extract_stable_set(g, LevelPartition::make({1, 1, 1}, 1));
        CHECK(res.stable_set == std::vector<int>{0, 1, 2});
        CHECK(res.reduced_graph.num_vertices() == 0);
    }
    SUBCASE("path at one level: greedy smallest-first picks the endpoints") {
        Graph g = make_path(3);
        auto res = extract_stable_set(g, LevelPartition::make({1, 1, 1}, 2));
        CHECK(res.stable_set == std::vector<int>{0, 2});
        REQUIRE(res.reduced_graph.num_vertices() == 1);
        CHECK(res.reduced_partition.degree_bound == 1);
        CHECK(validate_partition(res.reduced_graph, res.reduced_partition));
    }
    SUBCASE("requires a positive degree bound") {
        Graph g = Graph::from_edges(2, {});
        CHECK_THROWS_AS(extract_stable_set(g, LevelPartition::make({1, 1}, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("stable set invariants on random leveled instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int ell = 1 + static_cast<int>(seed % 3);
        std::vector<int> sizes;
        std::mt19937_64 rng(seed * 77 + 5);
        int t = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < t; ++i) sizes.push_back(2 + static_cast<int>(rng() % 8));
        std::vector<int> levels;
        Graph g = random_leveled_graph(sizes, ell, seed, levels);
        LevelPartition p = LevelPartition::make(levels, ell);
        REQUIRE(validate_partition(g, p));

        auto res = extract_stable_set(g, p);
        // independence in g
        for (std::size_t a = 0; a < res.stable_set.size(); ++a) {
            for (std::size_t b = a + 1; b < res.stable_set.size(); ++b) {
                REQUIRE(!g.has_edge(res.stable_set[a], res.stable_set[b]));
            }
        }
        // the reduced partition validates one bound lower
        CHECK(res.reduced_partition.degree_bound == ell - 1);
        CHECK(validate_partition(res.reduced_graph, res.reduced_partition));
        // every survivor at level i has a neighbor in the union of S_j, j >= i
        std::vector<bool> in_s(g.num_vertices(), false);
        for (int v : res.stable_set) in_s[v] = true;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (in_s[v]) continue;
            bool has = false;
            for (int w : g.neighbors(v)) {
                if (in_s[w] && p.levels[w] >= p.levels[v]) has = true;
            }
            CHECK(has);
        }
    }
}
