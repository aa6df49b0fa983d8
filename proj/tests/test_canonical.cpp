#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <unordered_map>

#include "potlab/canonical.hpp"
#include "potlab/multigraph.hpp"

using namespace potlab;

namespace {

Multigraph moebius8() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
    return Multigraph(8, edges);
}

uint64_t mix(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<int> random_perm(uint64_t& s, int n) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(mix(s) % (i + 1))]);
    return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under random relabelings") {
    uint64_t seed = 12345;
    for (const Multigraph& g :
         {cube(), cycle(5), star(3), matching(2), moebius8(),
          Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 3}})}) {
        CanonicalForm base = canonical_form(g);
        for (int i = 0; i < 50; ++i) {
            Multigraph h = g.relabeled(random_perm(seed, g.order()));
            CHECK(canonical_form(h) == base);
        }
    }
}

TEST_CASE("isomorphic vs non-isomorphic decisions") {
    Multigraph q = cube();
    uint64_t seed = 999;
    Multigraph shuffled = q.relabeled(random_perm(seed, 8));
    auto map = are_isomorphic(q, shuffled);
    REQUIRE(map.has_value());
    for (int u = 0; u < 8; ++u)
        for (int v = u; v < 8; ++v)
            CHECK(q.multiplicity(u, v) == shuffled.multiplicity((*map)[u], (*map)[v]));

    CHECK_FALSE(are_isomorphic(q, moebius8()).has_value());

    // two orderings of a digon
    Multigraph d1(2, {{0, 1}, {1, 0}});
    Multigraph d2(2, {{1, 0}, {0, 1}});
    CHECK(are_isomorphic(d1, d2).has_value());
}

TEST_CASE("order limit is enforced") {
    Multigraph big(13, {});
    CHECK_THROWS_AS(canonical_form(big), std::invalid_argument);
    CHECK_THROWS_AS(automorphism_group(big), std::invalid_argument);
}

TEST_CASE("automorphism counts of known graphs") {
    CHECK(automorphism_group(path(2)).size() == 2);    // K2
    CHECK(automorphism_group(cycle(4)).size() == 8);   // dihedral
    CHECK(automorphism_group(cube()).size() == 48);
    auto autos = automorphism_group(star(3));
    CHECK(autos.size() == 6);  // leaves permute
    std::vector<int> id(4);
    std::iota(id.begin(), id.end(), 0);
    CHECK(std::find(autos.begin(), autos.end(), id) != autos.end());
}

TEST_CASE("canonical form distinguishes loop and multiplicity structure") {
    Multigraph loop(1, {{0, 0}});
    Multigraph two_loops(1, {{0, 0}, {0, 0}});
    CHECK_FALSE(canonical_form(loop) == canonical_form(two_loops));

    Multigraph single(2, {{0, 1}});
    Multigraph digon = cycle(2);
    CHECK_FALSE(canonical_form(single) == canonical_form(digon));
}

TEST_CASE("cubic catalog of order 8") {
    std::vector<Multigraph> cat = catalog_cubic8();
    REQUIRE(cat.size() == 5);
    int bipartite_count = 0;
    for (size_t i = 0; i < cat.size(); ++i) {
        CHECK(cat[i].order() == 8);
        CHECK(cat[i].connected());
        for (int v = 0; v < 8; ++v) CHECK(cat[i].degree(v) == 3);
        if (is_bipartite(cat[i])) {
            ++bipartite_count;
            CHECK(are_isomorphic(cat[i], cube()).has_value());
        }
        for (size_t j = i + 1; j < cat.size(); ++j)
            CHECK_FALSE(are_isomorphic(cat[i], cat[j]).has_value());
    }
    CHECK(bipartite_count == 1);
}

TEST_CASE("canonical forms hash consistently") {
    std::unordered_map<CanonicalForm, int> seen;
    for (const Multigraph& g : catalog_cubic8()) seen[canonical_form(g)]++;
    CHECK(seen.size() == 5);
    seen[canonical_form(cube())]++;
    CHECK(seen.size() == 5);  // the cube is already among them
}
