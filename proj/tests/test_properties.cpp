#include <doctest.h>

#include <stdexcept>

#include <map>

#include "potlab/canonical.hpp"
#include "potlab/outputs.hpp"
#include "potlab/pot_iso.hpp"
#include "potlab/realize.hpp"
#include "potlab/spectrum.hpp"
#include "potlab/verification.hpp"

using namespace potlab;

// Randomized suites with a fixed seed; each mirrors a stated invariant of
// the engine. 1000 cases per suite.

namespace {
constexpr int kCases = 1000;
constexpr uint64_t kSeed = 0x5eed5eedULL;
}  // namespace

TEST_CASE("projection of the induced pot commutes with forgetting directions") {
    uint64_t state = kSeed;
    for (int i = 0; i < kCases; ++i) {
        EdgeColoring lam = random_coloring(state, 6, 4, 4);
        Pot directed = lam.induced_pot();
        Pot undirected = underlying_coloring(lam).induced_pot();
        REQUIRE(absolute_pot(directed) == undirected);
        REQUIRE(undirected.size() <= directed.size());
        for (int v = 0; v < lam.graph().order(); ++v)
            REQUIRE(underlying_coloring(lam).induced_tile(v) == lam.induced_tile(v).abs());
    }
}

TEST_CASE("global balance and degree accounting") {
    uint64_t state = kSeed ^ 0xABCDEFULL;
    for (int i = 0; i < kCases; ++i) {
        EdgeColoring lam = random_coloring(state, 6, 4, 4);
        std::map<int, long long> counts;
        long long total_size = 0;
        for (int v = 0; v < lam.graph().order(); ++v) {
            Tile t = lam.induced_tile(v);
            REQUIRE(t.size() == lam.graph().degree(v));
            total_size += t.size();
            for (int val : t.values()) counts[val]++;
        }
        REQUIRE(total_size == 2LL * lam.graph().edge_count());
        for (const auto& [val, cnt] : counts)
            if (val > 0) REQUIRE(cnt == counts[-val]);
    }
}

TEST_CASE("usage vectors of witnesses satisfy the balance system exactly") {
    uint64_t state = kSeed ^ 0x515151ULL;
    for (int i = 0; i < 300; ++i) {
        EdgeColoring lam = random_coloring(state, 6, 4, 4);
        Pot pot = lam.induced_pot();
        auto witness = realize(lam.graph(), pot);
        REQUIRE(witness.has_value());
        REQUIRE(validate_witness(*witness, pot));
        NetColorMatrix m = build_system(pot);
        for (const auto& row : m.rows) {
            long long dot = 0;
            for (size_t k = 0; k < row.size(); ++k)
                dot += 1LL * row[k] * witness->usage[k];
            REQUIRE(dot == 0);
        }
        // the spectrum's minimum order is a lower bound for any realization
        MinOrderResult mo = min_order(pot, 8);
        REQUIRE(mo.order.has_value());
        REQUIRE(*mo.order <= lam.graph().order());
    }
}

TEST_CASE("pot-isomorphism transport preserves the realized graph and pot class") {
    uint64_t state = kSeed ^ 0x777ULL;
    for (int i = 0; i < kCases; ++i) {
        EdgeColoring lam = random_coloring(state, 6, 4, 4);
        Pot pot = lam.induced_pot();
        auto maps = pot_isomorphisms(pot, pot);
        REQUIRE(!maps.empty());  // identity at least
        const PotIsomorphism& f = maps[i % maps.size()];
        EdgeColoring moved = apply_pot_isomorphism(lam, f);
        REQUIRE(moved.graph() == lam.graph());
        REQUIRE(moved.induced_pot() == f.apply(pot));
        REQUIRE(!pot_isomorphisms(moved.induced_pot(), pot).empty());
    }
}

TEST_CASE("self-realization round trip") {
    uint64_t state = kSeed ^ 0xF00DULL;
    for (int i = 0; i < kCases; ++i) {
        EdgeColoring lam = random_coloring(state, 6, 4, 4);
        auto witness = realize(lam.graph(), lam.induced_pot());
        REQUIRE(witness.has_value());
        REQUIRE(validate_witness(*witness, lam.induced_pot()));
    }
}

TEST_CASE("canonical forms are stable across the catalog under random relabeling") {
    uint64_t state = kSeed ^ 0xCA7ULL;
    std::vector<Multigraph> graphs = catalog_cubic8();
    graphs.push_back(cube());
    graphs.push_back(cycle(6));
    graphs.push_back(star(4));
    int trials = 0;
    while (trials < 1000) {
        for (const Multigraph& g : graphs) {
            std::vector<int> perm(static_cast<size_t>(g.order()));
            for (size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
            for (size_t k = perm.size(); k > 1; --k) {
                state += 0x9E3779B97F4A7C15ULL;
                uint64_t z = state;
                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
                std::swap(perm[k - 1], perm[(z ^ (z >> 27)) % k]);
            }
            REQUIRE(canonical_form(g.relabeled(perm)) == canonical_form(g));
            ++trials;
        }
    }
}
