#include <doctest.h>

#include <stdexcept>

#include <set>

#include "potlab/extremal.hpp"
#include "potlab/pot_iso.hpp"
#include "potlab/realize.hpp"

using namespace potlab;

TEST_CASE("class partitions with four colors are the star quadruples") {
    std::vector<ClassPartition> parts = enumerate_class_partitions(4);
    REQUIRE(parts.size() == 1);  // unique up to the cube's symmetry
    for (const ColorClass& c : parts[0].classes) {
        CHECK(c.kind == ColorClass::Kind::Star);
        CHECK(c.edge_ids.size() == 3);
    }
    CHECK(count_raw_class_partitions(4) == 2);  // the two bipartition sides
}

TEST_CASE("five-color partitions have the two expected size profiles") {
    std::vector<ClassPartition> parts = enumerate_class_partitions(5);
    CHECK(!parts.empty());
    for (const ClassPartition& p : parts) {
        std::multiset<size_t> sizes;
        for (const ColorClass& c : p.classes) sizes.insert(c.edge_ids.size());
        bool a = sizes == std::multiset<size_t>{3, 3, 3, 2, 1};
        bool b = sizes == std::multiset<size_t>{3, 3, 2, 2, 2};
        CHECK((a || b));
        CHECK(p.star3_count() >= 2);
    }
}

TEST_CASE("no legal partition uses fewer than four colors") {
    CHECK(enumerate_class_partitions(3).empty());
    CHECK(enumerate_class_partitions(2).empty());
    CHECK(enumerate_class_partitions(1).empty());
    CHECK_THROWS_AS(enumerate_class_partitions(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_class_partitions(13), std::invalid_argument);
}

TEST_CASE("classifying witness color classes on the cube") {
    auto witness = realize(cube(), pot_p1());
    REQUIRE(witness.has_value());
    auto shapes = classify_color_classes(witness->coloring);
    REQUIRE(shapes.has_value());
    int stars3 = 0, matchings = 0;
    std::vector<int> centers;
    for (const ColorClass& c : *shapes) {
        if (c.kind == ColorClass::Kind::Star && c.edge_ids.size() == 3) {
            ++stars3;
            centers.push_back(c.center);
        }
        if (c.kind == ColorClass::Kind::AntipodalMatching) ++matchings;
    }
    CHECK(stars3 == 2);
    CHECK(matchings == 1);
    // the first pot's two full stars sit at antipodal vertices
    REQUIRE(centers.size() == 2);
    CHECK((centers[0] ^ centers[1]) == 7);

    // an all-one coloring of the cube has a single 12-edge class: illegal shape
    Multigraph q = cube();
    EdgeColoring mono(q, std::vector<uint8_t>(12, 0), std::vector<int>(12, 1));
    CHECK_FALSE(classify_color_classes(mono).has_value());
}

TEST_CASE("the four-color census has no scenario-3 survivor") {
    CensusReport report = census_cube(4);
    CHECK(report.candidates > 0);
    CHECK(report.survivors == 0);
    for (const CensusCandidate& cand : report.candidate_list) {
        CHECK_FALSE(cand.scenario3);
        REQUIRE(cand.counterexample.has_value());
        CHECK(cand.counterexample->order() <= 8);
    }
}

TEST_CASE("the five-color census finds exactly the two biminimal classes") {
    CensusReport report = census_cube(5);
    CHECK(report.survivors > 0);
    REQUIRE(report.biminimal_classes.size() == 2);
    std::set<Pot> got, expected;
    for (const Pot& p : report.biminimal_classes) got.insert(canonical_pot(p));
    expected.insert(canonical_pot(pot_p1()));
    expected.insert(canonical_pot(pot_p2()));
    CHECK(got == expected);
    REQUIRE(!report.survivor_pot_sizes.empty());
    CHECK(report.survivor_pot_sizes.front() == 6);

    // census answers are deterministic under parallelism
    CensusReport threaded = census_cube(5, 2);
    CHECK(threaded.survivors == report.survivors);
    REQUIRE(threaded.biminimal_classes.size() == 2);
    for (size_t i = 0; i < 2; ++i)
        CHECK(threaded.biminimal_classes[i] == report.biminimal_classes[i]);
}

TEST_CASE("census survivors are closed under the symmetry transforms") {
    CensusReport report = census_cube(5);
    std::set<Pot> survivor_classes;
    const CensusCandidate* survivor = nullptr;
    for (const CensusCandidate& cand : report.candidate_list)
        if (cand.scenario3) {
            survivor_classes.insert(canonical_pot(cand.pot));
            if (!survivor) survivor = &cand;
        }
    REQUIRE(survivor != nullptr);

    auto autos = automorphism_group(cube());
    uint64_t state = 4242;
    auto mix = [&]() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        return z ^ (z >> 27);
    };
    const EdgeColoring& lam = survivor->coloring;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> gmap = {1, 2, 3, 4, 5};
        for (int k = 4; k > 0; --k)
            std::swap(gmap[static_cast<size_t>(k)], gmap[static_cast<size_t>(mix() % (k + 1))]);
        std::vector<uint8_t> flips(12, 0);
        for (int color = 1; color <= 5; ++color)
            if (mix() & 1)
                for (int e : lam.color_class(color)) flips[static_cast<size_t>(e)] = 1;
        const auto& rho = autos[mix() % autos.size()];
        EdgeColoring moved = retarget_realization(lam, gmap, flips, rho);
        CHECK(survivor_classes.count(canonical_pot(moved.induced_pot())) == 1);
    }
}

TEST_CASE("lower-bound certificates") {
    LowerBoundCertificates cert = verify_lower_bounds();
    CHECK(cert.four_color_survivors == 0);
    CHECK(cert.three_or_fewer_impossible);
    CHECK(cert.five_color_min_pot_size == 6);
    CHECK(cert.five_color_survivors > 0);
    CHECK(cert.star_count_bound_holds);
}

TEST_CASE("scenario minima for small graphs") {
    SUBCASE("an oriented cycle needs one tile and one color") {
        ExtremalStats stats = minimal_pot_stats(cycle(4), 1, 2, 2);
        REQUIRE(stats.min_tiles.has_value());
        CHECK(*stats.min_tiles == 1);
        REQUIRE(stats.min_colors.has_value());
        CHECK(*stats.min_colors == 1);
        REQUIRE(stats.tile_witness.has_value());
        CHECK(*stats.tile_witness == make_pot({{1, -1}}));
    }

    SUBCASE("cube scenario 1") {
        ExtremalStats stats = minimal_pot_stats(cube(), 1, 2, 3);
        CHECK(stats.min_tiles == 2);
        CHECK(stats.min_colors == 1);
    }

    SUBCASE("cube scenario 3 goes through the census") {
        ExtremalStats stats = minimal_pot_stats(cube(), 3, 6, 5);
        CHECK(stats.min_tiles == 6);
        CHECK(stats.min_colors == 5);
        REQUIRE(stats.tile_witness.has_value());
        CHECK(stats.tile_witness->size() == 6);
        CHECK(stats.tile_witness->color_count() == 5);
    }

    SUBCASE("oversized bounds are refused with an estimate") {
        CHECK_THROWS_WITH_AS(minimal_pot_stats(cube(), 2, 8, 8),
                             doctest::Contains("candidate pots"), std::invalid_argument);
    }
}
