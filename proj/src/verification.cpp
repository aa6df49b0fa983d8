#include "potlab/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "potlab/canonical.hpp"
#include "potlab/extremal.hpp"
#include "potlab/io.hpp"
#include "potlab/outputs.hpp"
#include "potlab/pot_iso.hpp"
#include "potlab/realize.hpp"
#include "potlab/spectrum.hpp"

namespace potlab {
namespace {

uint64_t next_rand(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int rand_int(uint64_t& s, int lo, int hi) {
    return lo + static_cast<int>(next_rand(s) % static_cast<uint64_t>(hi - lo + 1));
}

struct Checker {
    VerificationReport report;
    std::optional<std::string> only;
    double budget_scale = 1.0;

    // budget_ms: hard wall-clock limit for the check; 0 means unbudgeted.
    template <typename Fn>
    void run(const std::string& id, const std::string& label, double budget_ms, Fn&& fn) {
        if (only && id.find(*only) == std::string::npos) return;
        CheckResult r;
        r.id = id;
        r.label = label;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(r);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.computed = std::string("exception: ") + ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (budget_ms > 0 && r.ms > budget_ms * budget_scale) {
            r.pass = false;
            r.computed += " [over the " + std::to_string(static_cast<long long>(budget_ms)) +
                          " ms budget]";
        }
        report.total_ms += r.ms;
        if (!r.pass) report.pass = false;
        report.checks.push_back(std::move(r));
    }
};

std::string join_ints(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

bool check_realization(const Multigraph& q, const Pot& pot, CheckResult& r) {
    auto witness = realize(q, pot);
    if (!witness) {
        r.computed = "no witness";
        return false;
    }
    bool ok = validate_witness(*witness, pot);
    ok = ok && witness->induced == pot;
    std::vector<int> expected_usage = {1, 1, 1, 1, 2, 2};
    ok = ok && witness->usage == expected_usage;
    r.computed = "witness usage " + join_ints(witness->usage) +
                 (witness->induced == pot ? ", induced pot equals the pot" : ", induced differs");
    return ok;
}

bool check_spectrum(const Pot& pot, CheckResult& r) {
    MinimalSolutions sol = minimal_solutions(pot, 16);
    MinOrderResult mo = min_order(pot);
    std::vector<int> gen = {1, 1, 1, 1, 2, 2};
    bool ok = sol.generators.size() == 1 && sol.generators[0].counts == gen;
    ok = ok && sol.orders == std::vector<int>{8, 16};
    ok = ok && mo.order.has_value() && *mo.order == 8;
    std::ostringstream oss;
    oss << sol.generators.size() << " generator(s)";
    if (!sol.generators.empty()) oss << " " << join_ints(sol.generators[0].counts);
    oss << ", min order " << (mo.order ? std::to_string(*mo.order) : std::string("none"));
    r.computed = oss.str();
    return ok;
}

bool check_outputs(const Multigraph& q, const Pot& pot, CheckResult& r) {
    std::vector<OutputClass> all = enumerate_outputs(pot, 8);
    std::vector<OutputClass> below = outputs_below(pot, 8);
    std::ostringstream oss;
    oss << all.size() << " class(es) at order <= 8, " << below.size() << " below order 8";
    r.computed = oss.str();
    if (!below.empty() || all.size() != 1) return false;
    if (all[0].order != 8 || !(all[0].form == canonical_form(q))) return false;
    return validate_witness(all[0].witness, pot);
}

// ---- property suites --------------------------------------------------

struct PropertyStats {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
};

}  // namespace

EdgeColoring random_coloring(uint64_t& state, int max_order, int max_extra_edges,
                             int max_colors) {
    int n = rand_int(state, 1, max_order);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rand_int(state, 0, v - 1), v);
    int extras = rand_int(state, 0, max_extra_edges);
    for (int i = 0; i < extras; ++i)
        edges.emplace_back(rand_int(state, 0, n - 1), rand_int(state, 0, n - 1));
    if (edges.empty()) edges.emplace_back(0, 0);  // keep every tile nonempty
    Multigraph g(n, edges);
    int m = g.edge_count();
    std::vector<uint8_t> reversed(static_cast<size_t>(m));
    std::vector<int> colors(static_cast<size_t>(m));
    int c = rand_int(state, 1, max_colors);
    for (int e = 0; e < m; ++e) {
        reversed[static_cast<size_t>(e)] = static_cast<uint8_t>(rand_int(state, 0, 1));
        colors[static_cast<size_t>(e)] = rand_int(state, 1, c);
    }
    return EdgeColoring(std::move(g), std::move(reversed), std::move(colors));
}

VerificationReport verify_all(const VerifyOptions& options) {
    Checker ck;
    ck.only = options.only;
    ck.budget_scale = options.budget_scale > 0 ? options.budget_scale : 1.0;
    const Multigraph q = cube();
    const Pot p1 = pot_p1();
    const Pot p2 = pot_p2();

    // Bundled data files, when a directory is provided.
    if (options.data_dir) {
        const std::string dir = *options.data_dir;
        ck.run("data-cube", "cube.json matches the built-in cube", 1000, [&](CheckResult& r) {
            Multigraph g = multigraph_from_json(parse_file(dir + "/cube.json"));
            r.expected = "8 vertices, 12 edges, equal to Cay[(Z_2)^3 : {100,010,001}]";
            r.pass = (g == q);
            r.computed = r.pass ? "equal" : "differs";
        });
        ck.run("data-p1", "p1.json matches the built-in pot", 1000, [&](CheckResult& r) {
            Pot p = pot_from_json(parse_file(dir + "/p1.json"));
            r.expected = p1.to_string();
            r.computed = p.to_string();
            r.pass = (p == p1);
        });
        ck.run("data-p2", "p2.json matches the built-in pot", 1000, [&](CheckResult& r) {
            Pot p = pot_from_json(parse_file(dir + "/p2.json"));
            r.expected = p2.to_string();
            r.computed = p.to_string();
            r.pass = (p == p2);
        });
    }

    ck.run("c1-realize-p1", "the first pot realizes the cube with its reference tile table", 1000, [&](CheckResult& r) {
               r.expected = "witness with usage (1,1,1,1,2,2), induced pot equal to the pot";
               r.pass = check_realization(q, p1, r);
           });
    ck.run("c1-realize-p2", "the second pot realizes the cube with its reference tile table", 1000, [&](CheckResult& r) {
               r.expected = "witness with usage (1,1,1,1,2,2), induced pot equal to the pot";
               r.pass = check_realization(q, p2, r);
           });

    ck.run("c2-spectrum-p1", "usage system of the first pot", 1000, [&](CheckResult& r) {
        r.expected = "single generator (1,1,1,1,2,2), orders {8,16}, min order 8";
        r.pass = check_spectrum(p1, r);
    });
    ck.run("c2-spectrum-p2", "usage system of the second pot", 1000, [&](CheckResult& r) {
        r.expected = "single generator (1,1,1,1,2,2), orders {8,16}, min order 8";
        r.pass = check_spectrum(p2, r);
    });

    ck.run("c3-outputs-p1", "exhaustive outputs of the first pot up to order 8", 300000, [&](CheckResult& r) {
               r.expected = "exactly the cube at order 8, nothing below";
               r.pass = check_outputs(q, p1, r);
           });
    ck.run("c3-outputs-p2", "exhaustive outputs of the second pot up to order 8", 300000, [&](CheckResult& r) {
               r.expected = "exactly the cube at order 8, nothing below";
               r.pass = check_outputs(q, p2, r);
           });

    ck.run("c4-catalog-cubic8", "connected cubic graphs of order 8", 60000, [&](CheckResult& r) {
        r.expected = "5 pairwise non-isomorphic graphs, exactly 1 bipartite: the cube";
        std::vector<Multigraph> cat = catalog_cubic8();
        bool ok = cat.size() == 5;
        int bip = 0;
        int cube_matches = 0;
        for (size_t i = 0; i < cat.size(); ++i) {
            if (is_bipartite(cat[i])) {
                ++bip;
                if (are_isomorphic(cat[i], q)) ++cube_matches;
            }
            for (size_t j = i + 1; j < cat.size(); ++j)
                if (are_isomorphic(cat[i], cat[j])) ok = false;
        }
        ok = ok && bip == 1 && cube_matches == 1;
        std::ostringstream oss;
        oss << cat.size() << " graphs, " << bip << " bipartite, " << cube_matches
            << " isomorphic to the cube";
        r.computed = oss.str();
        r.pass = ok;
    });

    ck.run("c5-pot-isomorphisms", "pot isomorphism decisions", 1000, [&](CheckResult& r) {
        r.expected = "p1 !~ p2; identity on (p1,p1); color negation still isomorphic";
        bool distinct = pot_isomorphisms(p1, p2).empty();
        auto self = pot_isomorphisms(p1, p1);
        bool has_identity = false;
        for (const PotIsomorphism& f : self) has_identity = has_identity || f.is_identity();
        // negate color 5 everywhere
        std::vector<Tile> tiles;
        for (const Tile& t : p1.tiles()) {
            std::vector<int> vals;
            for (int v : t.values()) vals.push_back(std::abs(v) == 5 ? -v : v);
            tiles.emplace_back(std::move(vals));
        }
        Pot negated(std::move(tiles));
        auto to_negated = pot_isomorphisms(p1, negated);
        bool ok = distinct && has_identity && !to_negated.empty();
        for (const PotIsomorphism& f : to_negated)
            if (!(f.apply(p1) == negated)) ok = false;
        std::ostringstream oss;
        oss << "p1~p2: " << (distinct ? "none" : "found") << ", self maps: " << self.size()
            << ", negated maps: " << to_negated.size();
        r.computed = oss.str();
        r.pass = ok;
    });

    // The censuses back three criteria; compute them lazily, once.
    std::optional<CensusReport> census4, census5;
    auto get4 = [&]() -> const CensusReport& {
        if (!census4) census4 = census_cube(4, options.threads);
        return *census4;
    };
    auto get5 = [&]() -> const CensusReport& {
        if (!census5) census5 = census_cube(5, options.threads);
        return *census5;
    };

    ck.run("c6-census-biminimal", "biminimal census of the cube", 1800000, [&](CheckResult& r) {
        r.expected = "exactly 2 pot-isomorphism classes: p1 and p2";
        const CensusReport& rep = get5();
        bool ok = rep.biminimal_classes.size() == 2;
        std::set<Pot> expected = {canonical_pot(p1), canonical_pot(p2)};
        std::set<Pot> got;
        for (const Pot& p : rep.biminimal_classes) got.insert(canonical_pot(p));
        ok = ok && got == expected;
        std::ostringstream oss;
        oss << rep.biminimal_classes.size() << " class(es) from " << rep.candidates
            << " candidates (" << rep.canonical_partitions << " partitions up to symmetry)";
        r.computed = oss.str();
        r.pass = ok;
    });

    ck.run("c7-lower-bounds", "color and tile minima for 3-realizing the cube", 1800000, [&](CheckResult& r) {
               r.expected = "no 4-color survivor; 5-color minimum pot size 6";
               LowerBoundCertificates cert = verify_lower_bounds(get4(), get5());
               bool ok = cert.four_color_survivors == 0 && cert.three_or_fewer_impossible &&
                         cert.five_color_min_pot_size == 6 && cert.five_color_survivors > 0 &&
                         cert.star_count_bound_holds;
               std::ostringstream oss;
               oss << "4-color survivors: " << cert.four_color_survivors
                   << " (of " << cert.four_color_candidates << "), 5-color min pot size: "
                   << cert.five_color_min_pot_size;
               r.computed = oss.str();
               r.pass = ok;
           });

    ck.run("c8-star-structure", "monochromatic tiles vs 3-star classes in survivors", 0, [&](CheckResult& r) {
               r.expected = ">= 2 monochromatic tiles; 3-star count == monochromatic count";
               const CensusReport& rep = get5();
               bool ok = true;
               long long survivors = 0;
               for (const CensusCandidate& cand : rep.candidate_list) {
                   if (!cand.scenario3) continue;
                   ++survivors;
                   StructuralFlags flags = structural_flags(cand.pot);
                   int stars = cand.partition.star3_count();
                   if (flags.monochromatic_count < 2) ok = false;
                   if (flags.monochromatic_count != stars) ok = false;
                   // shape audit of an independently found realization
                   auto witness = realize(q, cand.pot);
                   if (!witness) {
                       ok = false;
                       continue;
                   }
                   auto shapes = classify_color_classes(witness->coloring);
                   if (!shapes) ok = false;
               }
               std::ostringstream oss;
               oss << survivors << " survivor(s) audited";
               r.computed = oss.str();
               r.pass = ok && survivors > 0;
           });

    ck.run("c9-minpot-s1", "scenario-1 minima for the cube", 600000, [&](CheckResult& r) {
        r.expected = "T=2, B=1";
        ExtremalStats stats = minimal_pot_stats(q, 1, 3, 6);
        bool ok = stats.min_tiles && *stats.min_tiles == 2 && stats.min_colors &&
                  *stats.min_colors == 1;
        std::ostringstream oss;
        oss << "T=" << (stats.min_tiles ? std::to_string(*stats.min_tiles) : "-") << ", B="
            << (stats.min_colors ? std::to_string(*stats.min_colors) : "-") << " ("
            << stats.pots_examined << " pots)";
        r.computed = oss.str();
        r.pass = ok;
    });
    ck.run("c9-minpot-s2", "scenario-2 minima for the cube", 600000, [&](CheckResult& r) {
        r.expected = "T=3, B=2";
        ExtremalStats stats = minimal_pot_stats(q, 2, 3, 6);
        bool ok = stats.min_tiles && *stats.min_tiles == 3 && stats.min_colors &&
                  *stats.min_colors == 2;
        std::ostringstream oss;
        oss << "T=" << (stats.min_tiles ? std::to_string(*stats.min_tiles) : "-") << ", B="
            << (stats.min_colors ? std::to_string(*stats.min_colors) : "-") << " ("
            << stats.pots_examined << " pots)";
        r.computed = oss.str();
        r.pass = ok;
    });

    // -- randomized property suites (fixed seed) --

    ck.run("c10-prop-projection", "undirected projection of induced pots", 120000, [&](CheckResult& r) {
        r.expected = "abs(pot) equality and size inequality on every case";
        PropertyStats st;
        uint64_t state = options.seed;
        for (int i = 0; i < options.property_cases; ++i) {
            ++st.cases;
            EdgeColoring lam = random_coloring(state, 6, 4, 4);
            Pot directed = lam.induced_pot();
            Pot undirected = underlying_coloring(lam).induced_pot();
            if (!(absolute_pot(directed) == undirected)) st.fail("projection mismatch");
            if (undirected.size() > directed.size()) st.fail("size inequality violated");
        }
        r.computed = std::to_string(st.failures) + " failure(s) in " +
                     std::to_string(st.cases) + " cases " + st.first_failure;
        r.pass = st.failures == 0;
    });

    ck.run("c10-prop-balance", "global signed-color balance", 120000, [&](CheckResult& r) {
        r.expected = "+j and -j counts agree; tile sizes sum to 2|E|";
        PropertyStats st;
        uint64_t state = options.seed ^ 0xB41A9CEULL;
        for (int i = 0; i < options.property_cases; ++i) {
            ++st.cases;
            EdgeColoring lam = random_coloring(state, 6, 4, 4);
            std::map<int, long long> count;
            long long size_sum = 0;
            for (int v = 0; v < lam.graph().order(); ++v) {
                Tile t = lam.induced_tile(v);
                size_sum += t.size();
                for (int val : t.values()) count[val]++;
            }
            for (const auto& [val, cnt] : count)
                if (val > 0 && cnt != count[-val]) st.fail("signed counts differ");
            if (size_sum != 2LL * lam.graph().edge_count()) st.fail("size sum != 2|E|");
        }
        r.computed = std::to_string(st.failures) + " failure(s) in " +
                     std::to_string(st.cases) + " cases " + st.first_failure;
        r.pass = st.failures == 0;
    });

    ck.run("c10-prop-transforms", "realization-preserving transforms", 120000, [&](CheckResult& r) {
        r.expected = "transported colorings stay realizations of isomorphic pots";
        PropertyStats st;
        uint64_t state = options.seed ^ 0x7A3E5ULL;
        for (int i = 0; i < options.property_cases; ++i) {
            ++st.cases;
            EdgeColoring lam = random_coloring(state, 6, 4, 4);
            Pot pot = lam.induced_pot();
            const auto& colors = pot.colors();
            const int c = static_cast<int>(colors.size());

            // random sign-odd bijection of the pot's colors
            std::vector<int> perm(colors.begin(), colors.end());
            for (int k = c - 1; k > 0; --k)
                std::swap(perm[static_cast<size_t>(k)],
                          perm[static_cast<size_t>(rand_int(state, 0, k))]);
            std::vector<int> image(static_cast<size_t>(c));
            for (int k = 0; k < c; ++k)
                image[static_cast<size_t>(k)] =
                    rand_int(state, 0, 1) ? perm[static_cast<size_t>(k)]
                                          : -perm[static_cast<size_t>(k)];
            Pot target;
            {
                std::vector<Tile> tiles;
                PotIsomorphism tmp(pot, pot, image);  // codomain fixed below
                for (const Tile& t : pot.tiles()) tiles.push_back(tmp.apply(t));
                target = Pot(std::move(tiles));
            }
            PotIsomorphism f(pot, target, image);
            EdgeColoring moved = apply_pot_isomorphism(lam, f);
            if (!(moved.induced_pot() == target)) st.fail("pot isomorphism transport failed");
            if (!(moved.graph() == lam.graph())) st.fail("transport changed the graph");
            if (pot_isomorphisms(moved.induced_pot(), pot).empty())
                st.fail("no isomorphism back to the source pot");

            // random retarget: color permutation, class flips, automorphism
            const auto& distinct = lam.distinct_colors();
            std::vector<int> gmap(distinct.begin(), distinct.end());
            for (int k = static_cast<int>(gmap.size()) - 1; k > 0; --k)
                std::swap(gmap[static_cast<size_t>(k)],
                          gmap[static_cast<size_t>(rand_int(state, 0, k))]);
            std::vector<uint8_t> flips(static_cast<size_t>(lam.graph().edge_count()), 0);
            for (int color : distinct)
                if (rand_int(state, 0, 1))
                    for (int e : lam.color_class(color)) flips[static_cast<size_t>(e)] = 1;
            auto autos = automorphism_group(lam.graph());
            const auto& rho = autos[static_cast<size_t>(
                rand_int(state, 0, static_cast<int>(autos.size()) - 1))];
            EdgeColoring moved2 = retarget_realization(lam, gmap, flips, rho);
            if (!(moved2.graph() == lam.graph())) st.fail("retarget changed the graph");
            if (pot_isomorphisms(moved2.induced_pot(), pot).empty())
                st.fail("retargeted pot not isomorphic");
        }
        r.computed = std::to_string(st.failures) + " failure(s) in " +
                     std::to_string(st.cases) + " cases " + st.first_failure;
        r.pass = st.failures == 0;
    });

    ck.run("c10-prop-roundtrip", "self-realization round trip", 120000, [&](CheckResult& r) {
        r.expected = "realize(g, induced pot) succeeds and validates";
        PropertyStats st;
        uint64_t state = options.seed ^ 0xF00DULL;
        for (int i = 0; i < options.property_cases; ++i) {
            ++st.cases;
            EdgeColoring lam = random_coloring(state, 6, 4, 4);
            Pot pot = lam.induced_pot();
            auto witness = realize(lam.graph(), pot);
            if (!witness) {
                st.fail("self-realization failed");
                continue;
            }
            if (!validate_witness(*witness, pot)) st.fail("witness failed validation");
        }
        r.computed = std::to_string(st.failures) + " failure(s) in " +
                     std::to_string(st.cases) + " cases " + st.first_failure;
        r.pass = st.failures == 0;
    });

    ck.run("c11-oracle-outputs", "closed family for the single self-matching tile", 300000, [&](CheckResult& r) {
               r.expected = "outputs of {{1,-1}} to order 6 are the cycles of length 1..6";
               Pot loop_pot = make_pot({{1, -1}});
               std::vector<OutputClass> got = enumerate_outputs(loop_pot, 6);
               std::set<CanonicalForm> expected;
               for (int k = 1; k <= 6; ++k) expected.insert(canonical_form(cycle(k)));
               std::set<CanonicalForm> got_forms;
               for (const OutputClass& oc : got) got_forms.insert(oc.form);
               r.computed = std::to_string(got.size()) + " classes";
               r.pass = got.size() == 6 && got_forms == expected;
           });

    ck.run("c11-oracle-isomorphism", "canonical isomorphism vs exhaustive permutations", 300000, [&](CheckResult& r) {
               r.expected = "zero discrepancies on the order <= 5 multigraph suite";
               long long graphs = 0, reps = 0, perm_checks = 0, pair_checks = 0, failures = 0;

               std::map<CanonicalForm, Multigraph> rep_of;
               for (int n = 1; n <= 5; ++n) {
                   std::vector<std::pair<int, int>> slots;
                   for (int i = 0; i < n; ++i)
                       for (int j = i; j < n; ++j) slots.emplace_back(i, j);
                   std::vector<int> mult(slots.size(), 0);
                   auto rec = [&](auto&& self, size_t idx, int total) -> void {
                       if (idx == slots.size()) {
                           if (total == 0) return;
                           std::vector<std::pair<int, int>> edges;
                           for (size_t k = 0; k < slots.size(); ++k)
                               for (int t = 0; t < mult[k]; ++t) edges.push_back(slots[k]);
                           Multigraph g(n, edges);
                           ++graphs;
                           rep_of.emplace(canonical_form(g), std::move(g));
                           return;
                       }
                       for (int m = 0; m <= 3 && total + m <= 7; ++m) {
                           mult[idx] = m;
                           self(self, idx + 1, total + m);
                       }
                       mult[idx] = 0;
                   };
                   rec(rec, 0, 0);
               }
               reps = static_cast<long long>(rep_of.size());

               // (a) the certificate is constant on every relabeling orbit,
               // exhaustively over S_n, and the returned bijections verify
               for (const auto& [form, g] : rep_of) {
                   std::vector<int> perm(static_cast<size_t>(g.order()));
                   std::iota(perm.begin(), perm.end(), 0);
                   do {
                       Multigraph h = g.relabeled(perm);
                       ++perm_checks;
                       if (!(canonical_form(h) == form)) ++failures;
                   } while (std::next_permutation(perm.begin(), perm.end()));
                   Multigraph shuffled = canonical_copy(g);
                   if (!are_isomorphic(g, shuffled)) ++failures;
               }

               // (b) distinct certificates within an invariant bucket really are
               // non-isomorphic: exhaustive permutation search finds no bijection
               std::map<std::vector<int>, std::vector<const Multigraph*>> buckets;
               for (const auto& [form, g] : rep_of) {
                   std::vector<int> key;
                   key.push_back(g.order());
                   key.push_back(g.edge_count());
                   auto deg = g.degree_sequence();
                   key.insert(key.end(), deg.begin(), deg.end());
                   std::vector<int> loops;
                   for (int v = 0; v < g.order(); ++v) loops.push_back(g.loops_at(v));
                   std::sort(loops.begin(), loops.end());
                   key.insert(key.end(), loops.begin(), loops.end());
                   buckets[key].push_back(&g);
               }
               auto mult_matrix = [](const Multigraph& g) {
                   std::vector<std::vector<int>> m(
                       static_cast<size_t>(g.order()),
                       std::vector<int>(static_cast<size_t>(g.order()), 0));
                   for (const Edge& e : g.edges()) {
                       if (e.loop()) {
                           m[static_cast<size_t>(e.u)][static_cast<size_t>(e.u)]++;
                       } else {
                           m[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)]++;
                           m[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)]++;
                       }
                   }
                   return m;
               };
               for (const auto& [key, members] : buckets) {
                   std::vector<std::vector<std::vector<int>>> mats;
                   mats.reserve(members.size());
                   for (const Multigraph* g : members) mats.push_back(mult_matrix(*g));
                   for (size_t i = 0; i < members.size(); ++i) {
                       const int n = members[i]->order();
                       for (size_t j = i + 1; j < members.size(); ++j) {
                           ++pair_checks;
                           bool brute = false;
                           std::vector<int> perm(static_cast<size_t>(n));
                           std::iota(perm.begin(), perm.end(), 0);
                           do {  // does perm map members[i] onto members[j]?
                               bool match = true;
                               for (int u = 0; u < n && match; ++u)
                                   for (int v = u; v < n && match; ++v)
                                       if (mats[i][static_cast<size_t>(u)][static_cast<size_t>(v)] !=
                                           mats[j][static_cast<size_t>(perm[static_cast<size_t>(u)])]
                                               [static_cast<size_t>(perm[static_cast<size_t>(v)])])
                                           match = false;
                               if (match) {
                                   brute = true;
                                   break;
                               }
                           } while (std::next_permutation(perm.begin(), perm.end()));
                           if (brute != are_isomorphic(*members[i], *members[j]).has_value())
                               ++failures;
                       }
                   }
               }

               std::ostringstream oss;
               oss << graphs << " graphs, " << reps << " classes, " << perm_checks
                   << " permutation checks, " << pair_checks << " pair checks, " << failures
                   << " discrepancies";
               r.computed = oss.str();
               r.pass = failures == 0;
           });

    return ck.report;
}

}  // namespace potlab
