#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/generators.hpp"
#include "test_support.hpp"

using namespace recolor;
using namespace testsupport;

TEST_CASE("icosahedron: 12 vertices, 30 edges, 5-regular") {
    Graph g = icosahedron();
    CHECK(g.num_vertices() == 12);
    CHECK(g.num_edges() == 30);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 5);
    // triangulation: every edge lies on exactly two triangles
    for (auto [u, v] : g.edges()) {
        int common = 0;
        for (int w : g.neighbors(u)) {
            if (g.has_edge(v, w)) ++common;
        }
        CHECK(common == 2);
    }
}

TEST_CASE("triangulated grid") {
    SUBCASE("m=1: 4 vertices, 4 grid edges plus one diagonal") {
        Graph g = triangulated_grid(1);
        CHECK(g.num_vertices() == 4);
        CHECK(g.num_edges() == 5);
        CHECK(g.has_edge(0, 3));  // the (1,1)-(2,2) diagonal
    }
    SUBCASE("edge count formula and inner degrees") {
        for (int m : {1, 2, 3}) {
            Graph g = triangulated_grid(m);
            int side = 2 * m;
            CHECK(g.num_vertices() == side * side);
            CHECK(g.num_edges() == 2 * side * (side - 1) + (side - 1) * (side - 1));
            for (int i = 2; i < side; ++i) {
                for (int j = 2; j < side; ++j) {
                    CHECK(g.degree((i - 1) * side + (j - 1)) == 6);
                }
            }
        }
    }
    CHECK_THROWS_AS(triangulated_grid(0), std::invalid_argument);
}

TEST_CASE("square grid") {
    SUBCASE("m=1 is the 4-cycle") {
        Graph g = square_grid(1);
        CHECK(g.num_vertices() == 4);
        CHECK(g.num_edges() == 4);
        CHECK(degeneracy_order(g).degeneracy == 2);
    }
    SUBCASE("triangle-free") {
        for (int m : {1, 2, 3, 4}) {
            Graph g = square_grid(m);
            for (auto [u, v] : g.edges()) {
                for (int w : g.neighbors(u)) {
                    CHECK(!g.has_edge(v, w));
                }
            }
        }
    }
    CHECK_THROWS_AS(square_grid(0), std::invalid_argument);
}

TEST_CASE("random_degenerate") {
    CHECK(random_degenerate(1, 3, 0).num_vertices() == 1);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        for (int d : {1, 2, 3, 5}) {
            Graph g = random_degenerate(25, d, seed);
            CHECK(degeneracy_order(g).degeneracy <= d - 1);
        }
    }
    // bit-identical reproducibility
    Graph a = random_degenerate(30, 4, 123);
    Graph b = random_degenerate(30, 4, 123);
    CHECK(a.edges() == b.edges());
    Graph c = random_degenerate(30, 4, 124);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("random_proper_coloring") {
    Graph edgeless = Graph::from_edges(5, {});
    Coloring c = random_proper_coloring(edgeless, 3, 9);
    CHECK(is_proper(edgeless, c));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_degenerate(20, 3, seed);
        Coloring col = random_proper_coloring(g, 3, seed);  // degeneracy <= 2, so 3 suffices
        CHECK(is_proper(g, col));
        Coloring again = random_proper_coloring(g, 3, seed);
        CHECK(col.colors == again.colors);
    }

    CHECK_THROWS_AS(random_proper_coloring(make_complete(4), 3, 0), std::invalid_argument);
}
