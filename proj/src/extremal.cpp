#include "potlab/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "potlab/canonical.hpp"
#include "potlab/realize.hpp"
#include "potlab/spectrum.hpp"

namespace potlab {
namespace {

constexpr int kCubeEdges = 12;

struct CubeContext {
    Multigraph q = cube();
    std::vector<int> antipodal_edge;          // edge id -> id of {u+111, v+111}
    std::vector<std::vector<int>> edge_perms;  // one edge permutation per Aut(Q) element

    CubeContext() {
        std::map<std::pair<int, int>, int> id_of;
        for (int e = 0; e < q.edge_count(); ++e)
            id_of[{q.edge(e).u, q.edge(e).v}] = e;
        antipodal_edge.resize(static_cast<size_t>(q.edge_count()));
        for (int e = 0; e < q.edge_count(); ++e) {
            int u = q.edge(e).u ^ 7, v = q.edge(e).v ^ 7;
            antipodal_edge[static_cast<size_t>(e)] = id_of.at({std::min(u, v), std::max(u, v)});
        }
        for (const auto& sigma : automorphism_group(q)) {
            std::vector<int> ep(static_cast<size_t>(q.edge_count()));
            for (int e = 0; e < q.edge_count(); ++e) {
                int u = sigma[static_cast<size_t>(q.edge(e).u)];
                int v = sigma[static_cast<size_t>(q.edge(e).v)];
                ep[static_cast<size_t>(e)] = id_of.at({std::min(u, v), std::max(u, v)});
            }
            edge_perms.push_back(std::move(ep));
        }
    }
};

const CubeContext& cube_context() {
    static const CubeContext ctx;
    return ctx;
}

using RawPartition = std::vector<std::vector<int>>;  // classes of edge ids, each sorted

RawPartition sorted_partition(RawPartition p) {
    for (auto& cls : p) std::sort(cls.begin(), cls.end());
    std::sort(p.begin(), p.end());
    return p;
}

RawPartition apply_edge_perm(const RawPartition& p, const std::vector<int>& ep) {
    RawPartition out;
    out.reserve(p.size());
    for (const auto& cls : p) {
        std::vector<int> mapped;
        mapped.reserve(cls.size());
        for (int e : cls) mapped.push_back(ep[static_cast<size_t>(e)]);
        out.push_back(std::move(mapped));
    }
    return sorted_partition(std::move(out));
}

RawPartition canonical_partition(const RawPartition& p) {
    const auto& ctx = cube_context();
    RawPartition best = sorted_partition(p);
    for (const auto& ep : ctx.edge_perms) {
        RawPartition mapped = apply_edge_perm(p, ep);
        if (mapped < best) best = std::move(mapped);
    }
    return best;
}

// Shape interpretation of a class of cube edges; nullopt when illegal.
std::optional<ColorClass> interpret_class(const std::vector<int>& cls) {
    const auto& ctx = cube_context();
    const Multigraph& q = ctx.q;
    ColorClass out;
    out.edge_ids = cls;
    std::sort(out.edge_ids.begin(), out.edge_ids.end());
    if (cls.size() == 1) {
        out.kind = ColorClass::Kind::Star;
        out.center = -1;
        return out;
    }
    if (cls.size() > 3) return std::nullopt;
    // common vertex?
    std::vector<int> common = {q.edge(out.edge_ids[0]).u, q.edge(out.edge_ids[0]).v};
    for (size_t i = 1; i < out.edge_ids.size(); ++i) {
        std::vector<int> next;
        for (int x : common)
            if (q.edge(out.edge_ids[i]).u == x || q.edge(out.edge_ids[i]).v == x)
                next.push_back(x);
        common = next;
    }
    if (!common.empty()) {
        out.kind = ColorClass::Kind::Star;
        out.center = common.front();
        return out;
    }
    if (out.edge_ids.size() == 2 &&
        ctx.antipodal_edge[static_cast<size_t>(out.edge_ids[0])] == out.edge_ids[1]) {
        out.kind = ColorClass::Kind::AntipodalMatching;
        out.center = -1;
        return out;
    }
    return std::nullopt;
}

ClassPartition interpret_partition(const RawPartition& raw) {
    ClassPartition p;
    for (const auto& cls : raw) {
        auto cc = interpret_class(cls);
        if (!cc) throw std::logic_error("generated class has an illegal shape");
        p.classes.push_back(std::move(*cc));
    }
    std::sort(p.classes.begin(), p.classes.end(), [](const ColorClass& a, const ColorClass& b) {
        return a.edge_ids < b.edge_ids;
    });
    return p;
}

// Enumerate raw partitions, calling sink for each.
void generate_partitions(int color_count, const std::function<void(const RawPartition&)>& sink) {
    const auto& ctx = cube_context();
    const Multigraph& q = ctx.q;
    RawPartition current;
    uint16_t covered = 0;

    auto rec = [&](auto&& self, int classes_left) -> void {
        if (covered == (1 << kCubeEdges) - 1) {
            if (classes_left == 0) sink(current);
            return;
        }
        if (classes_left == 0) return;
        int remaining = kCubeEdges - __builtin_popcount(covered);
        if (remaining > 3 * classes_left || remaining < classes_left) return;

        int e = 0;
        while (covered & (1 << e)) ++e;

        auto try_class = [&](std::vector<int> cls) {
            uint16_t mask = 0;
            for (int id : cls) mask = static_cast<uint16_t>(mask | (1 << id));
            current.push_back(std::move(cls));
            covered |= mask;
            self(self, classes_left - 1);
            covered = static_cast<uint16_t>(covered & ~mask);
            current.pop_back();
        };

        // single edge
        try_class({e});
        // 2-stars through e
        for (int endpoint : {q.edge(e).u, q.edge(e).v}) {
            for (int f : q.incident(endpoint)) {
                if (f == e || (covered & (1 << f))) continue;
                try_class({e, f});
            }
        }
        // full stars at e's endpoints
        for (int endpoint : {q.edge(e).u, q.edge(e).v}) {
            std::vector<int> cls = q.incident(endpoint);
            bool ok = true;
            for (int f : cls)
                if (f != e && (covered & (1 << f))) ok = false;
            if (ok) try_class(cls);
        }
        // antipodal matching through e
        int partner = ctx.antipodal_edge[static_cast<size_t>(e)];
        if (!(covered & (1 << partner))) try_class({e, partner});
    };
    rec(rec, color_count);
}

std::vector<EdgeColoring> orientation_lifts(const ClassPartition& partition) {
    const Multigraph& q = cube_context().q;
    std::vector<int> colors(static_cast<size_t>(q.edge_count()), 0);
    std::vector<uint8_t> reversed(static_cast<size_t>(q.edge_count()), 0);
    std::vector<const ColorClass*> matchings;

    for (size_t i = 0; i < partition.classes.size(); ++i) {
        const ColorClass& cls = partition.classes[i];
        for (int e : cls.edge_ids) colors[static_cast<size_t>(e)] = static_cast<int>(i) + 1;
        if (cls.kind == ColorClass::Kind::Star) {
            for (int e : cls.edge_ids) {
                // stars point out of their center; free edges out of their
                // lower endpoint (the class flip covers the other choice)
                int tail = cls.center >= 0 ? cls.center : q.edge(e).u;
                reversed[static_cast<size_t>(e)] = static_cast<uint8_t>(q.edge(e).u != tail);
            }
        } else {
            reversed[static_cast<size_t>(cls.edge_ids[0])] = 0;
            matchings.push_back(&cls);
        }
    }

    std::vector<EdgeColoring> lifts;
    const size_t branches = static_cast<size_t>(1) << matchings.size();
    for (size_t bits = 0; bits < branches; ++bits) {
        std::vector<uint8_t> rev = reversed;
        for (size_t j = 0; j < matchings.size(); ++j)
            rev[static_cast<size_t>(matchings[j]->edge_ids[1])] =
                static_cast<uint8_t>((bits >> j) & 1);
        lifts.emplace_back(q, std::move(rev), colors);
    }
    return lifts;
}

template <typename Fn>
void parallel_for(long long count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

int ClassPartition::star3_count() const {
    int n = 0;
    for (const ColorClass& c : classes)
        if (c.kind == ColorClass::Kind::Star && c.edge_ids.size() == 3) ++n;
    return n;
}

std::vector<ClassPartition> enumerate_class_partitions(int color_count) {
    if (color_count < 1 || color_count > kCubeEdges)
        throw std::invalid_argument("color count must be in [1, 12]");
    std::set<RawPartition> canon;
    generate_partitions(color_count, [&](const RawPartition& raw) {
        canon.insert(canonical_partition(raw));
    });
    std::vector<ClassPartition> out;
    out.reserve(canon.size());
    for (const RawPartition& raw : canon) out.push_back(interpret_partition(raw));
    return out;
}

long long count_raw_class_partitions(int color_count) {
    long long n = 0;
    generate_partitions(color_count, [&](const RawPartition&) { ++n; });
    return n;
}

std::optional<std::vector<ColorClass>> classify_color_classes(const EdgeColoring& lambda) {
    if (!(lambda.graph() == cube_context().q))
        throw std::invalid_argument("class shapes are defined on the cube's fixed labeling");
    std::vector<ColorClass> out;
    for (int c : lambda.distinct_colors()) {
        auto cc = interpret_class(lambda.color_class(c));
        if (!cc) return std::nullopt;
        out.push_back(std::move(*cc));
    }
    return out;
}

CensusReport census_cube(int color_count, int threads) {
    const Multigraph& q = cube_context().q;
    CensusReport report;
    report.color_count = color_count;
    report.raw_partitions = count_raw_class_partitions(color_count);

    std::vector<ClassPartition> partitions = enumerate_class_partitions(color_count);
    report.canonical_partitions = static_cast<long long>(partitions.size());

    struct Job {
        const ClassPartition* partition;
        EdgeColoring coloring;
    };
    std::vector<Job> jobs;
    for (const ClassPartition& p : partitions)
        for (EdgeColoring& lift : orientation_lifts(p))
            jobs.push_back(Job{&p, std::move(lift)});
    report.candidates = static_cast<long long>(jobs.size());

    std::vector<CensusCandidate> results(jobs.size(),
                                         CensusCandidate{ClassPartition{},
                                                         EdgeColoring(Multigraph(0, {}), {}, {}),
                                                         Pot{}, false, std::nullopt});
    parallel_for(static_cast<long long>(jobs.size()), threads, [&](long long i) {
        const Job& job = jobs[static_cast<size_t>(i)];
        CensusCandidate cand{*job.partition, job.coloring, job.coloring.induced_pot(), false,
                             std::nullopt};
        cand.counterexample = find_forbidden_output(cand.pot, q);
        cand.scenario3 = !cand.counterexample.has_value();
        results[static_cast<size_t>(i)] = std::move(cand);
    });

    // Both minima together are a 5-color, 6-tile statement; the field stays
    // empty for other censuses.
    std::map<Pot, Pot> biminimal;  // canonical form -> first representative
    std::set<int> sizes;
    for (CensusCandidate& cand : results) {
        if (cand.scenario3) {
            ++report.survivors;
            sizes.insert(cand.pot.size());
            if (color_count == 5 && cand.pot.size() == 6) {
                Pot canon = canonical_pot(cand.pot);
                biminimal.emplace(std::move(canon), cand.pot);
            }
        }
        report.candidate_list.push_back(std::move(cand));
    }
    for (auto& [canon, rep] : biminimal) report.biminimal_classes.push_back(rep);
    report.survivor_pot_sizes.assign(sizes.begin(), sizes.end());
    return report;
}

CensusReport census_biminimal_cube(int threads) { return census_cube(5, threads); }

LowerBoundCertificates verify_lower_bounds(const CensusReport& four, const CensusReport& five) {
    if (four.color_count != 4 || five.color_count != 5)
        throw std::invalid_argument("lower-bound verification expects the 4- and 5-color censuses");
    LowerBoundCertificates cert;
    cert.four_color_candidates = four.candidates;
    cert.four_color_survivors = four.survivors;
    cert.three_or_fewer_impossible = 3 * 3 < kCubeEdges;
    cert.five_color_candidates = five.candidates;
    cert.five_color_survivors = five.survivors;
    cert.five_color_min_pot_size =
        five.survivor_pot_sizes.empty() ? 0 : five.survivor_pot_sizes.front();
    cert.star_count_bound_holds = true;
    for (const CensusCandidate& cand : five.candidate_list) {
        if (!cand.scenario3) continue;
        int c1 = cand.partition.star3_count();
        if (c1 < 2 || kCubeEdges > 3 * c1 + 2 * (5 - c1)) cert.star_count_bound_holds = false;
    }
    return cert;
}

LowerBoundCertificates verify_lower_bounds(int threads) {
    CensusReport four = census_cube(4, threads);
    CensusReport five = census_cube(5, threads);
    return verify_lower_bounds(four, five);
}

namespace {

// All tiles of the given sizes over colors [1, k], signed.
std::vector<Tile> tile_pool(const std::vector<int>& sizes, int k) {
    std::vector<int> symbols;
    for (int c = 1; c <= k; ++c) {
        symbols.push_back(c);
        symbols.push_back(-c);
    }
    std::vector<Tile> pool;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t from, int size_left) -> void {
        if (size_left == 0) {
            pool.emplace_back(cur);
            return;
        }
        for (size_t i = from; i < symbols.size(); ++i) {
            cur.push_back(symbols[i]);
            self(self, i, size_left - 1);
            cur.pop_back();
        }
    };
    for (int s : sizes) {
        cur.clear();
        rec(rec, 0, s);
    }
    std::sort(pool.begin(), pool.end(), tile_less);
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

double binomial(double n, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

struct PotSearch {
    const Multigraph& g;
    int scenario;
    long long examined = 0;

    bool check(const Pot& p) {
        ++examined;
        // a usage vector of the right order must exist
        bool feasible = false;
        for (const UsageVector& u : enumerate_usage(p, g.order()))
            if (u.order() == g.order()) {
                feasible = true;
                break;
            }
        if (!feasible) return false;
        if (!realize(g, p).has_value()) return false;
        if (scenario == 1) return true;
        return !find_forbidden_output(p, g, scenario == 2).has_value();
    }

    // First i-realizing pot of size s with colors surjective onto [1, k].
    std::optional<Pot> run_cell(const std::vector<Tile>& pool, int s, int k) {
        std::optional<Pot> witness;
        std::vector<const Tile*> chosen;
        auto rec = [&](auto&& self, size_t from, int left) -> bool {
            if (left == 0) {
                std::vector<Tile> tiles;
                tiles.reserve(chosen.size());
                for (const Tile* t : chosen) tiles.push_back(*t);
                Pot p(std::move(tiles));
                if (p.color_count() != k || p.colors().back() != k) return false;
                if (check(p)) {
                    witness = std::move(p);
                    return true;
                }
                return false;
            }
            for (size_t i = from; i < pool.size(); ++i) {
                chosen.push_back(&pool[i]);
                if (self(self, i + 1, left - 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        rec(rec, 0, s);
        return witness;
    }
};

}  // namespace

ExtremalStats minimal_pot_stats(const Multigraph& g, int scenario, int tile_bound,
                                int color_bound) {
    if (!g.connected()) throw std::invalid_argument("minimal_pot_stats requires a connected graph");
    if (g.order() > 8) throw std::invalid_argument("minimal_pot_stats supports order <= 8");
    if (scenario < 1 || scenario > 3) throw std::invalid_argument("scenario must be 1, 2 or 3");
    if (tile_bound < 1 || color_bound < 1)
        throw std::invalid_argument("bounds must be positive");

    ExtremalStats stats;
    stats.scenario = scenario;
    stats.tile_bound = tile_bound;
    stats.color_bound = color_bound;

    // The cube's Scenario-3 minima come from the exhaustive coloring census:
    // the pot space at these bounds is astronomically large, but every
    // minimal pot is the induced pot of some 3-realization of the cube.
    if (scenario == 3 && color_bound == 5 && are_isomorphic(g, cube()).has_value()) {
        CensusReport four = census_cube(4);
        CensusReport five = census_cube(5);
        LowerBoundCertificates cert = verify_lower_bounds(four, five);
        stats.pots_examined = four.candidates + five.candidates;
        int best_size = 0;
        for (int s : five.survivor_pot_sizes)
            if (s <= tile_bound) {
                best_size = s;
                break;
            }
        if (cert.four_color_survivors == 0 && cert.three_or_fewer_impossible && best_size > 0) {
            stats.min_tiles = best_size;
            stats.min_colors = 5;
            for (const CensusCandidate& cand : five.candidate_list)
                if (cand.scenario3 && cand.pot.size() == best_size) {
                    stats.tile_witness = cand.pot;
                    stats.color_witness = cand.pot;
                    break;
                }
        }
        stats.note = "census over legal cube colorings; exhaustive for <= 5 colors";
        return stats;
    }

    std::vector<int> sizes;
    for (int v = 0; v < g.order(); ++v) sizes.push_back(g.degree(v));
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const int max_size = sizes.empty() ? 0 : sizes.back();
    if (max_size == 0) {
        stats.note = "graph has no edges; tiles are nonempty, so no pot applies";
        return stats;
    }
    if (sizes.front() == 0)
        throw std::invalid_argument("isolated vertices cannot receive a tile");

    // Budget: total combinations across all cells that could run.
    double projected = 0;
    for (int k = 1; k <= color_bound; ++k) {
        double pool_k = static_cast<double>(tile_pool(sizes, k).size());
        for (int s = 1; s <= tile_bound; ++s)
            if (k <= s * max_size && pool_k >= s) projected += binomial(pool_k, s);
    }
    if (projected > 5e7)
        throw std::invalid_argument(
            "pot-space search would need about " + std::to_string(static_cast<long long>(projected)) +
            " candidate pots; tighten tile/color bounds (budget 5e7)");

    PotSearch search{g, scenario, 0};
    std::map<std::pair<int, int>, std::optional<Pot>> cells;
    auto cell = [&](int s, int k) -> const std::optional<Pot>& {
        auto key = std::make_pair(s, k);
        auto it = cells.find(key);
        if (it == cells.end()) {
            std::vector<Tile> pool = tile_pool(sizes, k);
            it = cells.emplace(key, search.run_cell(pool, s, k)).first;
        }
        return it->second;
    };

    for (int s = 1; s <= tile_bound && !stats.min_tiles; ++s)
        for (int k = 1; k <= std::min(color_bound, s * max_size); ++k)
            if (cell(s, k)) {
                stats.min_tiles = s;
                stats.tile_witness = *cell(s, k);
                break;
            }
    for (int k = 1; k <= color_bound && !stats.min_colors; ++k)
        for (int s = 1; s <= tile_bound; ++s)
            if (k <= s * max_size && cell(s, k)) {
                stats.min_colors = k;
                stats.color_witness = *cell(s, k);
                break;
            }

    stats.pots_examined = search.examined;
    stats.note = "pot space enumerated up to pot isomorphism (tile sizes from the degree set, "
                 "colors surjective onto [1, k])";
    return stats;
}

}  // namespace potlab
