#include "potlab/realize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "potlab/canonical.hpp"

namespace potlab {
namespace {

struct Searcher {
    const Multigraph& g;
    const Pot& pot;
    RealizeOptions options;

    int n;
    std::vector<int> order;                     // processing order, by descending degree
    std::vector<std::vector<int>> candidates;   // tile indices per vertex
    std::vector<int> assigned;                  // tile index per vertex, -1 if none
    std::vector<int> colors;                    // Sigma(P)
    std::vector<std::vector<int>> tile_net;     // per tile, per color: +count - -count
    std::vector<std::vector<int>> suffix_min;   // per position, per color
    std::vector<std::vector<int>> suffix_max;
    std::vector<int> net;                       // running net per color
    std::vector<std::vector<int>> autos;        // position-level images for lex pruning
    std::optional<RealizationWitness> found;

    Searcher(const Multigraph& graph, const Pot& p, RealizeOptions opts)
        : g(graph), pot(p), options(opts), n(graph.order()) {}

    bool prepare() {
        candidates.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < pot.size(); ++i)
                if (pot.tile(i).size() == g.degree(v))
                    candidates[static_cast<size_t>(v)].push_back(i);
            if (candidates[static_cast<size_t>(v)].empty()) return false;
        }
        order.resize(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });

        colors = pot.colors();
        const int nc = static_cast<int>(colors.size());
        tile_net.assign(static_cast<size_t>(pot.size()), std::vector<int>(static_cast<size_t>(nc), 0));
        for (int i = 0; i < pot.size(); ++i)
            for (int c = 0; c < nc; ++c)
                tile_net[static_cast<size_t>(i)][static_cast<size_t>(c)] =
                    pot.tile(i).count(colors[static_cast<size_t>(c)]) -
                    pot.tile(i).count(-colors[static_cast<size_t>(c)]);

        // Per-position net bounds for pruning: what the not-yet-assigned
        // suffix can still contribute per color.
        suffix_min.assign(static_cast<size_t>(n + 1), std::vector<int>(static_cast<size_t>(nc), 0));
        suffix_max.assign(static_cast<size_t>(n + 1), std::vector<int>(static_cast<size_t>(nc), 0));
        for (int k = n - 1; k >= 0; --k) {
            int v = order[static_cast<size_t>(k)];
            for (int c = 0; c < nc; ++c) {
                int mn = INT32_MAX, mx = INT32_MIN;
                for (int t : candidates[static_cast<size_t>(v)]) {
                    mn = std::min(mn, tile_net[static_cast<size_t>(t)][static_cast<size_t>(c)]);
                    mx = std::max(mx, tile_net[static_cast<size_t>(t)][static_cast<size_t>(c)]);
                }
                suffix_min[static_cast<size_t>(k)][static_cast<size_t>(c)] =
                    suffix_min[static_cast<size_t>(k + 1)][static_cast<size_t>(c)] + mn;
                suffix_max[static_cast<size_t>(k)][static_cast<size_t>(c)] =
                    suffix_max[static_cast<size_t>(k + 1)][static_cast<size_t>(c)] + mx;
            }
        }
        net.assign(static_cast<size_t>(nc), 0);
        assigned.assign(static_cast<size_t>(n), -1);

        // Position-level automorphism images for lex-leader pruning. Witness
        // assignments come in Aut(g) orbits, so only orbit-minimal tile
        // sequences need to be explored.
        if (n <= 9) {
            std::vector<int> pos_of(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k) pos_of[static_cast<size_t>(order[static_cast<size_t>(k)])] = k;
            for (const auto& sigma : automorphism_group(g)) {
                std::vector<int> pos_map(static_cast<size_t>(n));
                bool identity = true;
                for (int k = 0; k < n; ++k) {
                    int v = order[static_cast<size_t>(k)];
                    pos_map[static_cast<size_t>(k)] =
                        pos_of[static_cast<size_t>(sigma[static_cast<size_t>(v)])];
                    if (pos_map[static_cast<size_t>(k)] != k) identity = false;
                }
                if (!identity) autos.push_back(std::move(pos_map));
            }
        }
        return true;
    }

    // Tile-index sequence in processing order must be lexicographically
    // minimal across the stored automorphism images, as far as decided.
    bool lex_ok(int upto) const {
        for (const auto& pos_map : autos) {
            for (int i = 0; i <= upto; ++i) {
                int a = assigned[static_cast<size_t>(order[static_cast<size_t>(i)])];
                int j = pos_map[static_cast<size_t>(i)];
                if (j > upto) break;  // image undetermined from here on
                int b = assigned[static_cast<size_t>(order[static_cast<size_t>(j)])];
                if (a < b) break;
                if (a > b) return false;
            }
        }
        return true;
    }

    bool assign(int k) {
        if (k == n) return pair_edges();
        int v = order[static_cast<size_t>(k)];
        const int nc = static_cast<int>(colors.size());
        for (int t : candidates[static_cast<size_t>(v)]) {
            assigned[static_cast<size_t>(v)] = t;
            bool feasible = true;
            for (int c = 0; c < nc && feasible; ++c) {
                int x = net[static_cast<size_t>(c)] + tile_net[static_cast<size_t>(t)][static_cast<size_t>(c)];
                if (x + suffix_min[static_cast<size_t>(k + 1)][static_cast<size_t>(c)] > 0 ||
                    x + suffix_max[static_cast<size_t>(k + 1)][static_cast<size_t>(c)] < 0)
                    feasible = false;
            }
            if (feasible && lex_ok(k)) {
                for (int c = 0; c < nc; ++c)
                    net[static_cast<size_t>(c)] +=
                        tile_net[static_cast<size_t>(t)][static_cast<size_t>(c)];
                if (assign(k + 1)) return true;
                for (int c = 0; c < nc; ++c)
                    net[static_cast<size_t>(c)] -=
                        tile_net[static_cast<size_t>(t)][static_cast<size_t>(c)];
            }
            assigned[static_cast<size_t>(v)] = -1;
        }
        return false;
    }

    // Phase 2: orient and color edges so that each vertex consumes exactly
    // its assigned tile. rem[v] holds outstanding signed colors as
    // (pos count, neg count) per color index.
    struct Rem {
        std::vector<int> pos, neg;
    };

    bool pair_edges() {
        const int nc = static_cast<int>(colors.size());
        std::vector<Rem> rem(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            rem[static_cast<size_t>(v)].pos.assign(static_cast<size_t>(nc), 0);
            rem[static_cast<size_t>(v)].neg.assign(static_cast<size_t>(nc), 0);
            const Tile& t = pot.tile(assigned[static_cast<size_t>(v)]);
            for (int c = 0; c < nc; ++c) {
                rem[static_cast<size_t>(v)].pos[static_cast<size_t>(c)] =
                    t.count(colors[static_cast<size_t>(c)]);
                rem[static_cast<size_t>(v)].neg[static_cast<size_t>(c)] =
                    t.count(-colors[static_cast<size_t>(c)]);
            }
        }
        std::vector<int> edge_order(static_cast<size_t>(g.edge_count()));
        std::iota(edge_order.begin(), edge_order.end(), 0);
        std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            if (ea.u != eb.u) return ea.u < eb.u;
            if (ea.v != eb.v) return ea.v < eb.v;
            return a < b;
        });
        std::vector<int> edge_color(static_cast<size_t>(g.edge_count()), 0);
        std::vector<uint8_t> edge_rev(static_cast<size_t>(g.edge_count()), 0);
        return pair_edge(0, edge_order, rem, edge_color, edge_rev);
    }

    bool pair_edge(size_t idx, const std::vector<int>& edge_order, std::vector<Rem>& rem,
                   std::vector<int>& edge_color, std::vector<uint8_t>& edge_rev) {
        if (idx == edge_order.size()) return emit(edge_color, edge_rev);
        int id = edge_order[idx];
        const Edge& e = g.edge(id);
        const int nc = static_cast<int>(colors.size());
        if (e.loop()) {
            Rem& r = rem[static_cast<size_t>(e.u)];
            for (int c = 0; c < nc; ++c) {
                if (r.pos[static_cast<size_t>(c)] > 0 && r.neg[static_cast<size_t>(c)] > 0) {
                    r.pos[static_cast<size_t>(c)]--;
                    r.neg[static_cast<size_t>(c)]--;
                    edge_color[static_cast<size_t>(id)] = colors[static_cast<size_t>(c)];
                    edge_rev[static_cast<size_t>(id)] = 0;
                    if (pair_edge(idx + 1, edge_order, rem, edge_color, edge_rev)) return true;
                    r.pos[static_cast<size_t>(c)]++;
                    r.neg[static_cast<size_t>(c)]++;
                }
            }
            return false;
        }
        Rem& ru = rem[static_cast<size_t>(e.u)];
        Rem& rv = rem[static_cast<size_t>(e.v)];
        for (int c = 0; c < nc; ++c) {
            // u -> v
            if (ru.pos[static_cast<size_t>(c)] > 0 && rv.neg[static_cast<size_t>(c)] > 0) {
                ru.pos[static_cast<size_t>(c)]--;
                rv.neg[static_cast<size_t>(c)]--;
                edge_color[static_cast<size_t>(id)] = colors[static_cast<size_t>(c)];
                edge_rev[static_cast<size_t>(id)] = 0;
                if (pair_edge(idx + 1, edge_order, rem, edge_color, edge_rev)) return true;
                ru.pos[static_cast<size_t>(c)]++;
                rv.neg[static_cast<size_t>(c)]++;
            }
            // v -> u
            if (rv.pos[static_cast<size_t>(c)] > 0 && ru.neg[static_cast<size_t>(c)] > 0) {
                rv.pos[static_cast<size_t>(c)]--;
                ru.neg[static_cast<size_t>(c)]--;
                edge_color[static_cast<size_t>(id)] = colors[static_cast<size_t>(c)];
                edge_rev[static_cast<size_t>(id)] = 1;
                if (pair_edge(idx + 1, edge_order, rem, edge_color, edge_rev)) return true;
                rv.pos[static_cast<size_t>(c)]++;
                ru.neg[static_cast<size_t>(c)]++;
            }
        }
        return false;
    }

    bool emit(const std::vector<int>& edge_color, const std::vector<uint8_t>& edge_rev) {
        if (options.require_all_colors) {
            std::vector<int> used = edge_color;
            std::sort(used.begin(), used.end());
            used.erase(std::unique(used.begin(), used.end()), used.end());
            if (used != colors) return false;  // keep searching
        }
        EdgeColoring coloring(g, edge_rev, edge_color);
        Pot induced = coloring.induced_pot();
        std::vector<int> usage(static_cast<size_t>(pot.size()), 0);
        for (int v = 0; v < n; ++v) usage[static_cast<size_t>(assigned[static_cast<size_t>(v)])]++;
        found = RealizationWitness{std::move(coloring), std::move(induced), std::move(usage)};
        return true;
    }
};

}  // namespace

std::optional<RealizationWitness> realize(const Multigraph& g, const Pot& p,
                                          const RealizeOptions& options) {
    if (!g.connected()) throw std::invalid_argument("realize requires a connected graph");
    if (g.order() == 0) return std::nullopt;
    if (p.empty()) return std::nullopt;
    Searcher s(g, p, options);
    if (!s.prepare()) return std::nullopt;
    s.assign(0);
    return std::move(s.found);
}

bool validate_witness(const RealizationWitness& w, const Pot& p) {
    const Multigraph& g = w.coloring.graph();
    // every induced tile is in the pot and sized by the vertex degree
    for (int v = 0; v < g.order(); ++v) {
        Tile t = w.coloring.induced_tile(v);
        if (t.size() != g.degree(v)) return false;
        if (!p.contains(t)) return false;
    }
    if (w.coloring.induced_pot() != w.induced) return false;
    // usage tallies the vertices per pot tile and balances every color
    if (static_cast<int>(w.usage.size()) != p.size()) return false;
    int total = 0;
    for (int u : w.usage) total += u;
    if (total != g.order()) return false;
    std::vector<int> tally(static_cast<size_t>(p.size()), 0);
    for (int v = 0; v < g.order(); ++v) {
        auto idx = p.index_of(w.coloring.induced_tile(v));
        if (!idx) return false;
        tally[static_cast<size_t>(*idx)]++;
    }
    if (tally != w.usage) return false;
    for (int color : p.colors()) {
        long long net = 0;
        for (int i = 0; i < p.size(); ++i)
            net += static_cast<long long>(w.usage[static_cast<size_t>(i)]) *
                   (p.tile(i).count(color) - p.tile(i).count(-color));
        if (net != 0) return false;
    }
    return true;
}

}  // namespace potlab
