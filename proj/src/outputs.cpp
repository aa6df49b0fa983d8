#include "potlab/outputs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "potlab/spectrum.hpp"

namespace potlab {
namespace {

struct DirectedEdge {
    int tail, head, color;
};

// Expands one usage vector into every half-edge pairing. Pairings are
// represented color by color as contingency matrices between +c counts and
// -c counts per vertex, which collapses permutations of identical slots.
struct PairingEnum {
    const Pot& pot;
    const OutputOptions& options;
    std::vector<int> vertex_tile;  // tile index per vertex
    int n = 0;
    std::vector<int> colors;
    std::vector<std::vector<int>> pos_rem;  // [color][vertex]
    std::vector<std::vector<int>> neg_rem;
    std::vector<std::vector<int>> adj;  // undirected multiplicities so far
    std::vector<DirectedEdge> edges;
    long long nodes = 0;
    long long budget;
    // visit(edges, vertex_tile) -> bool keep_going
    std::function<bool(const std::vector<DirectedEdge>&, const std::vector<int>&)> visit;
    bool stopped = false;

    PairingEnum(const Pot& p, const OutputOptions& opts, long long node_budget)
        : pot(p), options(opts), budget(node_budget) {}

    void run(const UsageVector& usage) {
        vertex_tile.clear();
        for (int i = 0; i < pot.size(); ++i)
            for (int k = 0; k < usage.counts[static_cast<size_t>(i)]; ++k)
                vertex_tile.push_back(i);
        n = static_cast<int>(vertex_tile.size());
        colors = pot.colors();
        const int nc = static_cast<int>(colors.size());
        pos_rem.assign(static_cast<size_t>(nc), std::vector<int>(static_cast<size_t>(n), 0));
        neg_rem.assign(static_cast<size_t>(nc), std::vector<int>(static_cast<size_t>(n), 0));
        for (int v = 0; v < n; ++v) {
            const Tile& t = pot.tile(vertex_tile[static_cast<size_t>(v)]);
            for (int c = 0; c < nc; ++c) {
                pos_rem[static_cast<size_t>(c)][static_cast<size_t>(v)] =
                    t.count(colors[static_cast<size_t>(c)]);
                neg_rem[static_cast<size_t>(c)][static_cast<size_t>(v)] =
                    t.count(-colors[static_cast<size_t>(c)]);
            }
        }
        adj.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        edges.clear();
        color_level(0);
    }

    void color_level(int c) {
        if (stopped) return;
        if (c == static_cast<int>(colors.size())) {
            if (!visit(edges, vertex_tile)) stopped = true;
            return;
        }
        distribute(c, 0, 0);
    }

    // Assign the +c units of vertex u to target vertices v in order.
    void distribute(int c, int u, int v) {
        if (stopped) return;
        if (++nodes > budget)
            throw std::runtime_error(
                "output enumeration budget exceeded; reduce max order or pot size");
        auto& pos = pos_rem[static_cast<size_t>(c)];
        auto& neg = neg_rem[static_cast<size_t>(c)];
        while (u < n && pos[static_cast<size_t>(u)] == 0) {
            ++u;
            v = 0;
        }
        if (u == n) {
            color_level(c + 1);
            return;
        }
        if (v == n) return;  // +c units of u could not be placed
        int avail = neg[static_cast<size_t>(v)];
        if (u == v && !options.allow_loops) avail = 0;
        int cap = avail;
        if (!options.allow_multiedges)
            cap = std::min(cap, std::max(0, 1 - adj[static_cast<size_t>(u)][static_cast<size_t>(v)]));
        cap = std::min(cap, pos[static_cast<size_t>(u)]);
        for (int k = 0; k <= cap; ++k) {
            if (k > 0) {
                pos[static_cast<size_t>(u)] -= k;
                neg[static_cast<size_t>(v)] -= k;
                adj[static_cast<size_t>(u)][static_cast<size_t>(v)] += k;
                if (u != v) adj[static_cast<size_t>(v)][static_cast<size_t>(u)] += k;
                for (int i = 0; i < k; ++i)
                    edges.push_back({u, v, colors[static_cast<size_t>(c)]});
            }
            distribute(c, u, v + 1);
            if (k > 0) {
                pos[static_cast<size_t>(u)] += k;
                neg[static_cast<size_t>(v)] += k;
                adj[static_cast<size_t>(u)][static_cast<size_t>(v)] -= k;
                if (u != v) adj[static_cast<size_t>(v)][static_cast<size_t>(u)] -= k;
                for (int i = 0; i < k; ++i) edges.pop_back();
            }
            if (stopped) return;
        }
    }
};

// visit(graph, edges, vertex_tile, usage) over every connected filtered
// output, orders ascending; return false from visit to stop.
void for_each_output(
    const Pot& p, int max_order, const OutputOptions& options,
    const std::function<bool(Multigraph&&, const std::vector<DirectedEdge>&,
                             const std::vector<int>&, const UsageVector&)>& visit) {
    if (max_order < 1 || max_order > kOutputOrderLimit)
        throw std::invalid_argument("output enumeration order must be in [1, 12]");
    if (p.empty()) return;

    std::vector<std::vector<UsageVector>> by_order(static_cast<size_t>(max_order) + 1);
    for (UsageVector& u : enumerate_usage(p, max_order))
        by_order[static_cast<size_t>(u.order())].push_back(std::move(u));

    PairingEnum en(p, options, 500'000'000LL);
    for (int order = 1; order <= max_order; ++order) {
        for (const UsageVector& usage : by_order[static_cast<size_t>(order)]) {
            bool keep_going = true;
            en.visit = [&](const std::vector<DirectedEdge>& edges,
                           const std::vector<int>&) -> bool {
                std::vector<std::pair<int, int>> pairs;
                pairs.reserve(edges.size());
                for (const DirectedEdge& e : edges) pairs.emplace_back(e.tail, e.head);
                Multigraph g(order, pairs);
                if (!g.connected()) return true;
                keep_going = visit(std::move(g), edges, en.vertex_tile, usage);
                return keep_going;
            };
            en.stopped = false;
            en.run(usage);
            if (!keep_going) return;
        }
    }
}

RealizationWitness witness_from(const Multigraph& g, const std::vector<DirectedEdge>& edges,
                                const std::vector<int>& vertex_tile, const Pot& p) {
    std::vector<uint8_t> reversed(edges.size());
    std::vector<int> colors(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        reversed[i] = static_cast<uint8_t>(edges[i].tail > edges[i].head);
        colors[i] = edges[i].color;
    }
    EdgeColoring coloring(g, std::move(reversed), std::move(colors));
    Pot induced = coloring.induced_pot();
    std::vector<int> usage(static_cast<size_t>(p.size()), 0);
    for (int t : vertex_tile) usage[static_cast<size_t>(t)]++;
    return RealizationWitness{std::move(coloring), std::move(induced), std::move(usage)};
}

}  // namespace

std::vector<OutputClass> enumerate_outputs(const Pot& p, int max_order,
                                           const OutputOptions& options) {
    std::map<CanonicalForm, OutputClass> classes;
    for_each_output(p, max_order, options,
                    [&](Multigraph&& g, const std::vector<DirectedEdge>& edges,
                        const std::vector<int>& vertex_tile, const UsageVector&) {
                        CanonicalForm form = canonical_form(g);
                        if (classes.find(form) == classes.end()) {
                            OutputClass oc{form, g, witness_from(g, edges, vertex_tile, p),
                                           g.order()};
                            classes.emplace(std::move(form), std::move(oc));
                        }
                        return true;
                    });
    std::vector<OutputClass> out;
    out.reserve(classes.size());
    for (auto& [form, oc] : classes) out.push_back(std::move(oc));
    std::sort(out.begin(), out.end(), [](const OutputClass& a, const OutputClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.form < b.form;
    });
    return out;
}

std::vector<OutputClass> outputs_below(const Pot& p, int order, const OutputOptions& options) {
    if (order <= 1) return {};
    return enumerate_outputs(p, order - 1, options);
}

std::optional<Multigraph> find_forbidden_output(const Pot& p, const Multigraph& target,
                                                bool scenario2_only) {
    const int n = target.order();
    const int max_order = scenario2_only ? n - 1 : n;
    if (max_order < 1) return std::nullopt;
    CanonicalForm target_form = canonical_form(target);
    std::optional<Multigraph> bad;
    for_each_output(p, max_order, OutputOptions{},
                    [&](Multigraph&& g, const std::vector<DirectedEdge>&,
                        const std::vector<int>&, const UsageVector&) {
                        if (g.order() < n) {
                            bad = std::move(g);
                            return false;
                        }
                        if (!scenario2_only && !(canonical_form(g) == target_form)) {
                            bad = std::move(g);
                            return false;
                        }
                        return true;
                    });
    return bad;
}

ScenarioFlags classify_scenarios(const Multigraph& g, const Pot& p) {
    if (!g.connected())
        throw std::invalid_argument("scenario classification requires a connected graph");
    ScenarioFlags flags;
    auto witness = realize(g, p);
    flags.realized = witness.has_value();
    flags.witness = std::move(witness);
    if (!flags.realized) return flags;

    std::vector<OutputClass> below = outputs_below(p, g.order());
    flags.scenario2 = below.empty();
    for (OutputClass& oc : below) flags.smaller_counterexamples.push_back(std::move(oc.representative));

    CanonicalForm form = canonical_form(g);
    std::vector<OutputClass> level = enumerate_outputs(p, g.order());
    for (OutputClass& oc : level) {
        if (oc.order == g.order() && !(oc.form == form))
            flags.equal_order_counterexamples.push_back(std::move(oc.representative));
    }
    flags.scenario3 = flags.scenario2 && flags.equal_order_counterexamples.empty();
    return flags;
}

}  // namespace potlab
