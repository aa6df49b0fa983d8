#include <doctest.h>

#include <stdexcept>

#include "potlab/tile.hpp"

using namespace potlab;

TEST_CASE("tile invariants") {
    CHECK_THROWS_AS(Tile({}), std::invalid_argument);
    CHECK_THROWS_AS(Tile({1, 0}), std::invalid_argument);
    Tile t({-5, 3, -1});
    CHECK(t.values() == std::vector<int>{-1, 3, -5});  // by absolute color, + before -
    CHECK(t.size() == 3);
    CHECK(t.count(-5) == 1);
    CHECK(t.count(5) == 0);
    CHECK(t.distinct_abs_count() == 3);
    CHECK(Tile({1, 1, 1}).monochromatic());
    CHECK(Tile({-2, -3, -3}).bichromatic());
    CHECK(t.negated() == Tile({1, -3, 5}));
    CHECK(t.abs() == Tile({1, 3, 5}));
}

TEST_CASE("multiset intersection") {
    Tile a({1, -1, -1});
    CHECK(Tile::intersection_size(a.negated(), a) == 2);
    Tile b({1, 1, 1});
    CHECK(Tile::intersection_size(b.negated(), b) == 0);
    CHECK(Tile::intersection_size(b.negated(), Tile({-1, -1, -1})) == 3);
}

TEST_CASE("pot deduplicates and orders tiles canonically") {
    Pot p = make_pot({{-1, 3, -5}, {1, 1, 1}, {-2, 4, 5}, {1, 1, 1}, {2, 2, 2}, {-1, -4, -4},
                      {-2, -3, -3}});
    CHECK(p.size() == 6);
    // monochromatic, then bichromatic, then trichromatic; abs-lex inside
    CHECK(p.tile(0) == Tile({1, 1, 1}));
    CHECK(p.tile(1) == Tile({2, 2, 2}));
    CHECK(p.tile(2) == Tile({-1, -4, -4}));
    CHECK(p.tile(3) == Tile({-2, -3, -3}));
    CHECK(p.tile(4) == Tile({-1, 3, -5}));
    CHECK(p.tile(5) == Tile({-2, 4, 5}));
    CHECK(p.colors() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(p.contains(Tile({3, -1, -5})));
    CHECK_FALSE(p.contains(Tile({1, 2, 3})));
}

TEST_CASE("absolute pot projects and deduplicates") {
    CHECK(absolute_pot(make_pot({{-1, 3, -5}})) == make_pot({{1, 3, 5}}));

    // four induced tiles collapse to three after projection
    Pot example = make_pot({{1, 2, 2}, {-1, -2, 3}, {1, -2, -3}, {1, -1, -1}});
    Pot projected = absolute_pot(example);
    CHECK(projected == make_pot({{1, 2, 2}, {1, 2, 3}, {1, 1, 1}}));

    Pot abs_p1 = absolute_pot(pot_p1());
    CHECK(abs_p1 ==
          make_pot({{1, 1, 1}, {2, 2, 2}, {2, 3, 3}, {1, 4, 4}, {1, 3, 5}, {2, 4, 5}}));
    CHECK(abs_p1.size() == 6);
}

TEST_CASE("structural flags") {
    StructuralFlags f1 = structural_flags(pot_p1());
    CHECK_FALSE(f1.loop_possible);
    CHECK_FALSE(f1.multiedge_possible);
    CHECK(f1.monochromatic_count == 2);
    CHECK(f1.bichromatic_count == 2);

    StructuralFlags f2 = structural_flags(make_pot({{1, -1}}));
    CHECK(f2.loop_possible);

    StructuralFlags f3 = structural_flags(make_pot({{1, 1, 1}, {-1, -1, -1}}));
    CHECK(f3.multiedge_possible);
    CHECK(f3.monochromatic_count == 2);
    CHECK_FALSE(f3.loop_possible);
}

TEST_CASE("canonical pot form identifies isomorphic pots") {
    Pot p = pot_p1();
    // negate one color and shuffle names: still the same class
    Pot q = make_pot({{2, 2, 2}, {1, 1, 1}, {-1, -3, -3}, {-2, -4, -4}, {-2, 3, 5}, {-1, 4, -5}});
    CHECK(canonical_pot(p) == canonical_pot(q));
    CHECK_FALSE(canonical_pot(pot_p1()) == canonical_pot(pot_p2()));
}
