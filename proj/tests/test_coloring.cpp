#include <doctest.h>

#include <stdexcept>

#include "potlab/coloring.hpp"
#include "potlab/multigraph.hpp"

using namespace potlab;

namespace {

// Four vertices with two parallel edges, a loop, and three colors; its
// induced tiles are {1,2,2}, {-1,-2,3}, {1,-2,-3}, {1,-1,-1}.
EdgeColoring mixed_example() {
    Multigraph g(4, {{0, 1}, {0, 2}, {0, 1}, {1, 2}, {2, 3}, {3, 3}});
    //              0->1(2)  0->2(2)  0->1(1)  1->2(3)  2->3(1)  loop(1)
    std::vector<uint8_t> reversed = {0, 0, 0, 0, 0, 0};
    std::vector<int> colors = {2, 2, 1, 3, 1, 1};
    return EdgeColoring(std::move(g), std::move(reversed), std::move(colors));
}

}  // namespace

TEST_CASE("induced tiles of the mixed example") {
    EdgeColoring lam = mixed_example();
    CHECK(lam.induced_tile(0) == Tile({1, 2, 2}));
    CHECK(lam.induced_tile(1) == Tile({-1, -2, 3}));
    CHECK(lam.induced_tile(2) == Tile({1, -2, -3}));
    CHECK(lam.induced_tile(3) == Tile({1, -1, -1}));
    Pot pot = lam.induced_pot();
    CHECK(pot.size() == 4);
    CHECK(pot == make_pot({{1, 2, 2}, {-1, -2, 3}, {1, -2, -3}, {1, -1, -1}}));
}

TEST_CASE("a directed loop contributes both signs") {
    Multigraph g(1, {{0, 0}});
    EdgeColoring lam(g, {0}, {3});
    CHECK(lam.induced_tile(0) == Tile({3, -3}));
}

TEST_CASE("an undirected loop contributes its color twice") {
    Multigraph g(1, {{0, 0}});
    UndirectedColoring lam(g, {3});
    CHECK(lam.induced_tile(0) == Tile({3, 3}));
}

TEST_CASE("underlying coloring projects the induced pot") {
    EdgeColoring lam = mixed_example();
    UndirectedColoring under = underlying_coloring(lam);
    CHECK(under.induced_pot() == absolute_pot(lam.induced_pot()));
    CHECK(under.induced_pot().size() == 3);
    CHECK(under.induced_pot().size() <= lam.induced_pot().size());
}

TEST_CASE("oriented K2 with one color") {
    Multigraph k2(2, {{0, 1}});
    EdgeColoring lam(k2, {0}, {1});
    CHECK(lam.induced_pot() == make_pot({{1}, {-1}}));
}

TEST_CASE("direction uniformity per color") {
    // directed 4-cycle, one color: every vertex sees +1 and -1
    Multigraph c4 = cycle(4);
    EdgeColoring around(c4, {0, 0, 0, 1}, {1, 1, 1, 1});
    // edges (0,1),(1,2),(2,3),(0,3) with the last reversed: 3->0 keeps the cycle oriented
    CHECK_FALSE(same_color_same_direction(around));

    // alternate colors so every vertex is tail of one color and head of the other
    EdgeColoring proper(c4, {0, 1, 0, 1}, {1, 2, 1, 2});
    CHECK(same_color_same_direction(proper));

    // injective colorings are vacuously uniform
    EdgeColoring injective(c4, {0, 0, 1, 1}, {1, 2, 3, 4});
    CHECK(same_color_same_direction(injective));

    Multigraph with_loop(2, {{0, 1}, {1, 1}});
    EdgeColoring bad(with_loop, {0, 0}, {1, 1});
    CHECK_THROWS_AS(same_color_same_direction(bad), std::invalid_argument);
}

TEST_CASE("colorings must cover every edge with positive colors") {
    Multigraph k2(2, {{0, 1}});
    CHECK_THROWS_AS(EdgeColoring(k2, {0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoring(k2, {}, {1}), std::invalid_argument);
    EdgeColoring sparse(k2, {0}, {7});
    CHECK(sparse.color_count() == 1);
    CHECK(sparse.normalized().color(0) == 1);
}
