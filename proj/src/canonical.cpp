#include "potlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace potlab {
namespace {

void check_order(const Multigraph& g) {
    if (g.order() > kCanonicalOrderLimit)
        throw std::invalid_argument("graph order exceeds the supported isomorphism-search limit (12)");
}

std::vector<std::vector<int>> multiplicity_matrix(const Multigraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        if (e.loop()) {
            m[static_cast<size_t>(e.u)][static_cast<size_t>(e.u)] += 1;
        } else {
            m[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] += 1;
            m[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] += 1;
        }
    }
    return m;
}

// Iterated signature refinement. The returned color ids are ranks of
// sorted signatures, so they are invariant under relabeling.
std::vector<int> refined_colors(const Multigraph& g, const std::vector<std::vector<int>>& mult) {
    const int n = g.order();
    std::vector<int> color(static_cast<size_t>(n), 0);
    {
        std::vector<std::pair<int, int>> init(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) init[static_cast<size_t>(v)] = {g.degree(v), g.loops_at(v)};
        std::vector<std::pair<int, int>> uniq = init;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), init[static_cast<size_t>(v)]) - uniq.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<size_t>(v)];
            s.push_back(color[static_cast<size_t>(v)]);
            s.push_back(g.loops_at(v));
            std::vector<std::pair<int, int>> nb;
            for (int w = 0; w < n; ++w) {
                if (w == v) continue;
                int m = mult[static_cast<size_t>(v)][static_cast<size_t>(w)];
                if (m > 0) nb.emplace_back(color[static_cast<size_t>(w)], m);
            }
            std::sort(nb.begin(), nb.end());
            for (auto& [c, m] : nb) {
                s.push_back(c);
                s.push_back(m);
            }
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<size_t>(v)]) - uniq.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct CanonicalSearch {
    int n;
    const std::vector<std::vector<int>>& mult;
    const Multigraph& g;
    std::vector<std::vector<int>> cells;  // vertex ids grouped by refined color rank
    std::vector<int> cell_of_position;    // which cell fills position k
    std::vector<int> placed;              // vertex at each position
    std::vector<char> used;
    std::vector<int> cur;  // code built so far (column scan)
    std::vector<int> best;
    std::vector<int> best_perm;  // position_of[v]
    bool have_best = false;

    CanonicalSearch(const Multigraph& graph, const std::vector<std::vector<int>>& m,
                    const std::vector<int>& color)
        : n(graph.order()), mult(m), g(graph) {
        int ncells = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        cells.resize(static_cast<size_t>(ncells));
        for (int v = 0; v < n; ++v) cells[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
        for (int c = 0; c < ncells; ++c)
            for (size_t i = 0; i < cells[static_cast<size_t>(c)].size(); ++i)
                cell_of_position.push_back(c);
        used.assign(static_cast<size_t>(n), 0);
        cur.reserve(static_cast<size_t>(n * (n + 1) / 2));
    }

    std::vector<int> segment(int k, int w) const {
        std::vector<int> seg;
        seg.reserve(static_cast<size_t>(k + 1));
        for (int i = 0; i < k; ++i)
            seg.push_back(mult[static_cast<size_t>(placed[static_cast<size_t>(i)])][static_cast<size_t>(w)]);
        seg.push_back(g.loops_at(w));
        return seg;
    }

    // -1/0/+1 of cur against the same-length prefix of best. Compared fresh
    // at every node because best may have been replaced deeper in the tree.
    int prefix_cmp() const {
        for (size_t i = 0; i < cur.size(); ++i)
            if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
        return 0;
    }

    void dfs(int k) {
        int cmp = -1;
        if (have_best) {
            cmp = prefix_cmp();
            if (cmp > 0) return;
        }
        if (k == n) {
            if (!have_best || cmp < 0) {
                best = cur;
                best_perm.assign(static_cast<size_t>(n), -1);
                for (int i = 0; i < n; ++i)
                    best_perm[static_cast<size_t>(placed[static_cast<size_t>(i)])] = i;
                have_best = true;
            }
            return;
        }
        const auto& cell = cells[static_cast<size_t>(cell_of_position[static_cast<size_t>(k)])];
        std::vector<std::pair<std::vector<int>, int>> options;
        for (int w : cell) {
            if (used[static_cast<size_t>(w)]) continue;
            options.emplace_back(segment(k, w), w);
        }
        std::sort(options.begin(), options.end());
        const size_t off = cur.size();
        for (auto& [seg, w] : options) {
            cur.insert(cur.end(), seg.begin(), seg.end());
            placed.push_back(w);
            used[static_cast<size_t>(w)] = 1;
            dfs(k + 1);
            used[static_cast<size_t>(w)] = 0;
            placed.pop_back();
            cur.resize(off);
        }
    }
};

}  // namespace

std::string CanonicalForm::to_string() const {
    std::string s = std::to_string(order_) + ":";
    for (size_t i = 0; i < code_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(code_[i]);
    }
    return s;
}

CanonicalLabeling canonical_labeling(const Multigraph& g) {
    check_order(g);
    const auto mult = multiplicity_matrix(g);
    const auto color = refined_colors(g, mult);
    CanonicalSearch search(g, mult, color);
    search.dfs(0);
    return CanonicalLabeling{CanonicalForm(g.order(), std::move(search.best)),
                             std::move(search.best_perm)};
}

CanonicalForm canonical_form(const Multigraph& g) { return canonical_labeling(g).form; }

Multigraph canonical_copy(const Multigraph& g) {
    auto lab = canonical_labeling(g);
    Multigraph c = g.relabeled(lab.position_of);
    // Normalize the edge order as well so equal forms give equal values.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(c.edges().size());
    for (const Edge& e : c.edges()) pairs.emplace_back(e.u, e.v);
    std::sort(pairs.begin(), pairs.end());
    return Multigraph(c.order(), pairs);
}

std::optional<std::vector<int>> are_isomorphic(const Multigraph& g, const Multigraph& h) {
    check_order(g);
    check_order(h);
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    auto lg = canonical_labeling(g);
    auto lh = canonical_labeling(h);
    if (!(lg.form == lh.form)) return std::nullopt;
    std::vector<int> slot_to_h(static_cast<size_t>(h.order()));
    for (int v = 0; v < h.order(); ++v)
        slot_to_h[static_cast<size_t>(lh.position_of[static_cast<size_t>(v)])] = v;
    std::vector<int> map(static_cast<size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        map[static_cast<size_t>(v)] =
            slot_to_h[static_cast<size_t>(lg.position_of[static_cast<size_t>(v)])];
    // Sanity: the composed map must preserve multiplicities.
    for (int u = 0; u < g.order(); ++u)
        for (int v = u; v < g.order(); ++v)
            if (g.multiplicity(u, v) !=
                h.multiplicity(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
                throw std::logic_error("canonical labeling produced an invalid bijection");
    return map;
}

std::vector<std::vector<int>> automorphism_group(const Multigraph& g) {
    check_order(g);
    const int n = g.order();
    const auto mult = multiplicity_matrix(g);
    const auto color = refined_colors(g, mult);
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[static_cast<size_t>(a)] != color[static_cast<size_t>(b)])
            return color[static_cast<size_t>(a)] < color[static_cast<size_t>(b)];
        return a < b;
    });

    std::vector<std::vector<int>> result;
    std::vector<int> image(static_cast<size_t>(n), -1);
    std::vector<char> taken(static_cast<size_t>(n), 0);

    auto consistent = [&](int k, int w) {
        int v = order[static_cast<size_t>(k)];
        if (color[static_cast<size_t>(w)] != color[static_cast<size_t>(v)]) return false;
        if (g.loops_at(w) != g.loops_at(v)) return false;
        for (int i = 0; i < k; ++i) {
            int a = order[static_cast<size_t>(i)];
            if (mult[static_cast<size_t>(v)][static_cast<size_t>(a)] !=
                mult[static_cast<size_t>(w)][static_cast<size_t>(image[static_cast<size_t>(a)])])
                return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            result.push_back(image);
            return;
        }
        int v = order[static_cast<size_t>(k)];
        for (int w = 0; w < n; ++w) {
            if (taken[static_cast<size_t>(w)] || !consistent(k, w)) continue;
            taken[static_cast<size_t>(w)] = 1;
            image[static_cast<size_t>(v)] = w;
            self(self, k + 1);
            image[static_cast<size_t>(v)] = -1;
            taken[static_cast<size_t>(w)] = 0;
        }
    };
    dfs(dfs, 0);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Multigraph> catalog_cubic8() {
    const int n = 8;
    std::vector<std::vector<char>> adj(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::map<CanonicalForm, Multigraph> found;

    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == n - 1) {
            bool ok = true;
            for (int v = 0; v < n; ++v)
                if (deg[static_cast<size_t>(v)] != 3) ok = false;
            if (!ok) return;
            std::vector<std::pair<int, int>> edges;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (adj[static_cast<size_t>(a)][static_cast<size_t>(b)]) edges.emplace_back(a, b);
            Multigraph g(n, edges);
            if (!g.connected()) return;
            CanonicalForm f = canonical_form(g);
            found.emplace(std::move(f), canonical_copy(g));
            return;
        }
        if (j == n) {
            if (deg[static_cast<size_t>(i)] != 3) return;
            self(self, i + 1, i + 2);
            return;
        }
        // Remaining slots in row i must be able to complete the degree.
        if (deg[static_cast<size_t>(i)] + (n - j) < 3) return;
        if (deg[static_cast<size_t>(i)] < 3 && deg[static_cast<size_t>(j)] < 3) {
            adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
            ++deg[static_cast<size_t>(i)];
            ++deg[static_cast<size_t>(j)];
            self(self, i, j + 1);
            --deg[static_cast<size_t>(i)];
            --deg[static_cast<size_t>(j)];
            adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        }
        self(self, i, j + 1);
    };
    rec(rec, 0, 1);

    std::vector<Multigraph> out;
    out.reserve(found.size());
    for (auto& [form, g] : found) out.push_back(std::move(g));
    return out;
}

}  // namespace potlab
