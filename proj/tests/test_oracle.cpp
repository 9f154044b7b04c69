#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/errors.hpp"
#include "recolor/generators.hpp"
#include "recolor/oracle.hpp"
#include "test_support.hpp"

using namespace recolor;
using namespace testsupport;

TEST_CASE("P2 with two colors: both proper colorings are frozen") {
    ReconfGraphStats stats = reconf_stats(make_path(2), 2);
    CHECK(stats.num_colorings == 2);
    CHECK(stats.num_components == 2);
    CHECK(stats.num_frozen == 2);
    CHECK(!stats.diameter.has_value());  // infinite
}

TEST_CASE("K3 with three colors: six isolated states") {
    ReconfGraphStats stats = reconf_stats(make_complete(3), 3);
    CHECK(stats.num_colorings == 6);
    CHECK(stats.num_components == 6);
    CHECK(stats.num_frozen == 6);
    CHECK(!stats.diameter.has_value());
}

TEST_CASE("single state has diameter zero") {
    ReconfGraphStats stats = reconf_stats(Graph::from_edges(1, {}), 1);
    CHECK(stats.num_colorings == 1);
    CHECK(stats.num_components == 1);
    CHECK(stats.diameter == 0);
}

TEST_CASE("no proper colorings at all") {
    ReconfGraphStats stats = reconf_stats(make_complete(4), 3);
    CHECK(stats.num_colorings == 0);
    CHECK(stats.num_components == 0);
    CHECK(!stats.diameter.has_value());
}

TEST_CASE("shortest_transformation") {
    Graph edge = make_path(2);
    SUBCASE("identity distance is zero") {
        Coloring a{3, {1, 2}};
        CHECK(shortest_transformation(edge, 3, a, a) == 0);
    }
    SUBCASE("swap across three colors takes three moves") {
        CHECK(shortest_transformation(edge, 3, Coloring{3, {1, 2}}, Coloring{3, {2, 1}}) == 3);
    }
    SUBCASE("two frozen colorings are unreachable") {
        CHECK(!shortest_transformation(edge, 2, Coloring{2, {1, 2}}, Coloring{2, {2, 1}})
                   .has_value());
    }
    SUBCASE("improper input is rejected") {
        CHECK_THROWS_AS(
            shortest_transformation(edge, 2, Coloring{2, {1, 1}}, Coloring{2, {1, 2}}),
            std::invalid_argument);
    }
    SUBCASE("distance is symmetric on sampled pairs") {
        Graph g = make_cycle(5);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Coloring a = random_proper_coloring(g, 4, seed);
            Coloring b = random_proper_coloring(g, 4, seed + 100);
            CHECK(shortest_transformation(g, 4, a, b) == shortest_transformation(g, 4, b, a));
        }
    }
}

TEST_CASE("find_frozen") {
    CHECK(find_frozen(make_path(3), 3).empty());
    auto k4 = find_frozen(make_complete(4), 4);
    CHECK(k4.size() == 24);  // every proper coloring of K4 is frozen
    for (const Coloring& c : k4) CHECK(is_frozen(make_complete(4), c));
}

TEST_CASE("frozen counts agree between enumeration and is_frozen") {
    std::vector<Graph> corpus = {make_path(4), make_cycle(5), make_complete(3), make_star(3)};
    for (const Graph& g : corpus) {
        for (int k = 2; k <= 4; ++k) {
            StateSpace space = StateSpace::build(g, k);
            long long frozen = 0;
            for (long long i = 0; i < space.num_states(); ++i) {
                if (is_frozen(g, Coloring{k, space.state(i)})) ++frozen;
            }
            CHECK(reconf_stats(g, k).num_frozen == frozen);
            CHECK(static_cast<long long>(find_frozen(g, k).size()) == frozen);
        }
    }
}

TEST_CASE("budget errors are loud and carry no partial result") {
    Graph g = Graph::from_edges(4, {});
    CHECK_THROWS_AS(reconf_stats(g, 3, 10), BudgetExceeded);  // 81 proper colorings
    CHECK_THROWS_AS(find_frozen(g, 3, 80), BudgetExceeded);
    CHECK(find_frozen(g, 3, 81).size() == 0);  // exactly at the budget is fine
}

TEST_CASE("state space encoding round trips") {
    Graph g = make_cycle(5);
    StateSpace space = StateSpace::build(g, 3);
    CHECK(space.num_states() == 30);  // chromatic polynomial of C5 at 3
    for (long long i = 0; i < space.num_states(); ++i) {
        std::vector<int> colors = space.state(i);
        CHECK(space.index_of(colors) == i);
        CHECK(is_proper(g, Coloring{3, colors}));
    }
    CHECK(!space.index_of({1, 1, 1, 1, 1}).has_value());
}

TEST_CASE("large connected spaces report a flagged diameter lower bound") {
    // P14 with 3 colors: 3*2^13 = 24576 states, above the exact-diameter cap
    Graph g = make_path(14);
    ReconfGraphStats stats = reconf_stats(g, 3);
    CHECK(stats.num_colorings == 24576);
    CHECK(stats.num_components == 1);
    REQUIRE(stats.diameter.has_value());
    CHECK(stats.diameter_is_lower_bound);
    CHECK(*stats.diameter >= 13);  // at least one move per differing vertex

    // P8 stays under the cap: exact value, no flag
    ReconfGraphStats exact = reconf_stats(make_path(8), 3);
    CHECK(exact.num_colorings == 384);
    CHECK(!exact.diameter_is_lower_bound);
    CHECK(exact.diameter.has_value());
}

TEST_CASE("diameter is deterministic across thread counts") {
    Graph g = make_path(4);
    ReconfGraphStats seq = reconf_stats(g, 3, kDefaultStateBudget, 1);
    ReconfGraphStats par = reconf_stats(g, 3, kDefaultStateBudget, 4);
    REQUIRE(seq.diameter.has_value());
    CHECK(seq.diameter == par.diameter);
    CHECK(seq.num_components == par.num_components);
    CHECK(seq.num_frozen == par.num_frozen);
    CHECK(seq.num_components == 1);
}
