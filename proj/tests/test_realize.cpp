#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "potlab/canonical.hpp"
#include "potlab/realize.hpp"

using namespace potlab;

namespace {

// Reference tile table for the first pot, keyed by cube vertex.
EdgeColoring p1_table_coloring() {
    Multigraph q = cube();
    std::vector<int> colors(12, 0);
    std::vector<uint8_t> reversed(12, 0);
    auto set_edge = [&](int tail, int head, int color) {
        for (int e = 0; e < q.edge_count(); ++e) {
            const Edge& ed = q.edge(e);
            if ((ed.u == std::min(tail, head)) && (ed.v == std::max(tail, head))) {
                colors[static_cast<size_t>(e)] = color;
                reversed[static_cast<size_t>(e)] = static_cast<uint8_t>(tail != ed.u);
            }
        }
    };
    // star at 000 colored 1, star at 111 colored 2, 2-star into 011 colored 3,
    // 2-star into 100 colored 4, antipodal matching colored 5
    set_edge(0, 4, 1);
    set_edge(0, 2, 1);
    set_edge(0, 1, 1);
    set_edge(7, 6, 2);
    set_edge(7, 5, 2);
    set_edge(7, 3, 2);
    set_edge(2, 3, 3);
    set_edge(1, 3, 3);
    set_edge(5, 4, 4);
    set_edge(6, 4, 4);
    set_edge(5, 1, 5);
    set_edge(6, 2, 5);
    return EdgeColoring(std::move(q), std::move(reversed), std::move(colors));
}

}  // namespace

TEST_CASE("the reference table induces the first pot exactly") {
    EdgeColoring lam = p1_table_coloring();
    CHECK(lam.induced_tile(0) == Tile({1, 1, 1}));
    CHECK(lam.induced_tile(7) == Tile({2, 2, 2}));
    CHECK(lam.induced_tile(4) == Tile({-1, -4, -4}));
    CHECK(lam.induced_tile(3) == Tile({-2, -3, -3}));
    CHECK(lam.induced_tile(1) == Tile({-1, 3, -5}));
    CHECK(lam.induced_tile(2) == Tile({-1, 3, -5}));
    CHECK(lam.induced_tile(5) == Tile({-2, 4, 5}));
    CHECK(lam.induced_tile(6) == Tile({-2, 4, 5}));
    CHECK(lam.induced_pot() == pot_p1());
    CHECK(same_color_same_direction(lam));
}

TEST_CASE("realize the cube through both pots") {
    Multigraph q = cube();
    for (const Pot& p : {pot_p1(), pot_p2()}) {
        auto witness = realize(q, p);
        REQUIRE(witness.has_value());
        CHECK(validate_witness(*witness, p));
        CHECK(witness->induced == p);
        CHECK(witness->usage == std::vector<int>{1, 1, 1, 1, 2, 2});
        CHECK(same_color_same_direction(witness->coloring));
    }
}

TEST_CASE("simple positive and negative cases") {
    Multigraph k2(2, {{0, 1}});
    auto witness = realize(k2, make_pot({{1}, {-1}}));
    REQUIRE(witness.has_value());
    CHECK(witness->coloring.color(0) == 1);

    // every tile has size 3, the triangle has degree 2
    CHECK_FALSE(realize(cycle(3), pot_p1()).has_value());

    // tile size 2 against degree 3
    CHECK_FALSE(realize(cube(), make_pot({{1, -1}})).has_value());

    Multigraph disconnected(2, {});
    CHECK_THROWS_AS(realize(disconnected, make_pot({{1}})), std::invalid_argument);
}

TEST_CASE("loops consume both signs at one vertex") {
    Multigraph loop(1, {{0, 0}});
    auto witness = realize(loop, make_pot({{1, -1}}));
    REQUIRE(witness.has_value());
    CHECK(witness->induced == make_pot({{1, -1}}));
    CHECK_FALSE(realize(loop, make_pot({{1, 1}})).has_value());
}

TEST_CASE("realization is invariant under relabeling") {
    uint64_t seed = 77;
    auto mix = [&]() {
        seed += 0x9E3779B97F4A7C15ULL;
        uint64_t z = seed;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        return z ^ (z >> 27);
    };
    Multigraph q = cube();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 7; i > 0; --i) std::swap(perm[static_cast<size_t>(i)],
                                              perm[static_cast<size_t>(mix() % (i + 1))]);
        Multigraph h = q.relabeled(perm);
        auto witness = realize(h, pot_p1());
        REQUIRE(witness.has_value());
        CHECK(validate_witness(*witness, pot_p1()));
    }
}

TEST_CASE("strict color usage can forbid otherwise valid witnesses") {
    // K2 through a pot with a spare color: the lax search succeeds, the
    // surjective one cannot use color 2 anywhere
    Multigraph k2(2, {{0, 1}});
    Pot pot = make_pot({{1}, {-1}, {2, -2}});
    CHECK(realize(k2, pot).has_value());
    RealizeOptions strict;
    strict.require_all_colors = true;
    CHECK_FALSE(realize(k2, pot, strict).has_value());

    // the cube pots force all five colors even without the flag
    auto witness = realize(cube(), pot_p1(), strict);
    CHECK(witness.has_value());
}

TEST_CASE("pots with non-contiguous colors keep their color values") {
    Multigraph c4 = cycle(4);
    Pot gapped = make_pot({{2, -7}, {7, -2}});
    auto witness = realize(c4, gapped);
    REQUIRE(witness.has_value());
    CHECK(validate_witness(*witness, gapped));
    for (int e = 0; e < 4; ++e) {
        int c = witness->coloring.color(e);
        CHECK((c == 2 || c == 7));
    }
}

TEST_CASE("witness determinism") {
    auto a = realize(cube(), pot_p1());
    auto b = realize(cube(), pot_p1());
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->coloring.colors() == b->coloring.colors());
    CHECK(a->coloring.reversed_flags() == b->coloring.reversed_flags());
}
