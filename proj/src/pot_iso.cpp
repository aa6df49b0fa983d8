#include "potlab/pot_iso.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace potlab {

PotIsomorphism::PotIsomorphism(Pot from, Pot to, std::vector<int> image)
    : from_(std::move(from)), to_(std::move(to)), image_(std::move(image)) {
    if (image_.size() != from_.colors().size())
        throw std::invalid_argument("color image size mismatch");
}

int PotIsomorphism::apply(int signed_color) const {
    int a = std::abs(signed_color);
    const auto& cols = from_.colors();
    auto it = std::lower_bound(cols.begin(), cols.end(), a);
    if (it == cols.end() || *it != a)
        throw std::invalid_argument("color not in the domain pot");
    int img = image_[static_cast<size_t>(it - cols.begin())];
    return signed_color > 0 ? img : -img;
}

Tile PotIsomorphism::apply(const Tile& t) const {
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(t.size()));
    for (int v : t.values()) vals.push_back(apply(v));
    return Tile(std::move(vals));
}

Pot PotIsomorphism::apply(const Pot& p) const {
    std::vector<Tile> tiles;
    tiles.reserve(static_cast<size_t>(p.size()));
    for (const Tile& t : p.tiles()) tiles.push_back(apply(t));
    return Pot(std::move(tiles));
}

bool PotIsomorphism::is_identity() const {
    const auto& cols = from_.colors();
    for (size_t i = 0; i < cols.size(); ++i)
        if (image_[i] != cols[i]) return false;
    return true;
}

namespace {

// Per-color profile: sorted (tile size, +count, -count) across the pot's
// tiles. A sign-odd bijection must map profiles onto each other, with the
// count pair swapped when the image is negative.
std::vector<std::array<int, 3>> color_profile(const Pot& p, int color, bool swapped) {
    std::vector<std::array<int, 3>> prof;
    prof.reserve(static_cast<size_t>(p.size()));
    for (const Tile& t : p.tiles()) {
        int pos = t.count(color), neg = t.count(-color);
        if (swapped) std::swap(pos, neg);
        prof.push_back({t.size(), pos, neg});
    }
    std::sort(prof.begin(), prof.end());
    return prof;
}

}  // namespace

std::vector<PotIsomorphism> pot_isomorphisms(const Pot& p, const Pot& q) {
    std::vector<PotIsomorphism> result;
    if (p.size() != q.size() || p.color_count() != q.color_count()) return result;
    const auto& pc = p.colors();
    const auto& qc = q.colors();
    const int c = static_cast<int>(pc.size());
    if (c == 0) {
        if (p == q) result.emplace_back(p, q, std::vector<int>{});
        return result;
    }

    std::vector<std::vector<std::array<int, 3>>> p_prof, q_prof, q_prof_swapped;
    for (int k = 0; k < c; ++k) {
        p_prof.push_back(color_profile(p, pc[static_cast<size_t>(k)], false));
        q_prof.push_back(color_profile(q, qc[static_cast<size_t>(k)], false));
        q_prof_swapped.push_back(color_profile(q, qc[static_cast<size_t>(k)], true));
    }

    std::vector<int> image(static_cast<size_t>(c), 0);
    std::vector<char> used(static_cast<size_t>(c), 0);
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == c) {
            PotIsomorphism f(p, q, image);
            if (f.apply(p) == q) result.push_back(std::move(f));
            return;
        }
        for (int j = 0; j < c; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            for (int sign = 1; sign >= -1; sign -= 2) {
                const auto& target = sign > 0 ? q_prof[static_cast<size_t>(j)]
                                              : q_prof_swapped[static_cast<size_t>(j)];
                if (p_prof[static_cast<size_t>(k)] != target) continue;
                used[static_cast<size_t>(j)] = 1;
                image[static_cast<size_t>(k)] = sign * qc[static_cast<size_t>(j)];
                self(self, k + 1);
                used[static_cast<size_t>(j)] = 0;
            }
        }
    };
    dfs(dfs, 0);
    return result;
}

EdgeColoring apply_pot_isomorphism(const EdgeColoring& lambda, const PotIsomorphism& f) {
    if (lambda.induced_pot() != f.from())
        throw std::invalid_argument("the coloring's induced pot is not the domain of the isomorphism");
    const Multigraph& g = lambda.graph();
    std::vector<uint8_t> reversed(static_cast<size_t>(g.edge_count()));
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        int img = f.apply(lambda.color(e));
        colors[static_cast<size_t>(e)] = std::abs(img);
        reversed[static_cast<size_t>(e)] =
            static_cast<uint8_t>(lambda.reversed(e) ^ (img < 0 ? 1 : 0));
    }
    return EdgeColoring(g, std::move(reversed), std::move(colors));
}

EdgeColoring retarget_realization(const EdgeColoring& lambda,
                                  const std::vector<int>& color_image,
                                  const std::vector<uint8_t>& flip_edges,
                                  const std::vector<int>& rho) {
    const Multigraph& g = lambda.graph();
    const int m = g.edge_count();
    const auto& distinct = lambda.distinct_colors();
    const int c = lambda.color_count();

    auto color_index = [&](int value) {
        return static_cast<size_t>(std::lower_bound(distinct.begin(), distinct.end(), value) -
                                   distinct.begin());
    };

    // color_image is aligned with distinct_colors(): the i-th used color maps
    // to color_image[i].
    if (static_cast<int>(color_image.size()) != c)
        throw std::invalid_argument("color image must cover every color");
    {
        std::vector<int> sorted = color_image;
        std::sort(sorted.begin(), sorted.end());
        if (!sorted.empty() && sorted.front() < 1)
            throw std::invalid_argument("color image values must be positive");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("color image must be injective");
    }
    if (static_cast<int>(flip_edges.size()) != m)
        throw std::invalid_argument("flip vector must cover every edge");
    {
        // all-or-none per color class
        std::vector<int> seen(static_cast<size_t>(c), -1);
        for (int e = 0; e < m; ++e) {
            size_t cls = color_index(lambda.color(e));
            int f = flip_edges[static_cast<size_t>(e)] ? 1 : 0;
            if (seen[cls] == -1)
                seen[cls] = f;
            else if (seen[cls] != f)
                throw std::invalid_argument("orientation flips must agree within each color class");
        }
    }
    if (g.relabeled(rho) != g)
        throw std::invalid_argument("rho is not an automorphism of the base graph");

    // Transport edges along rho: parallel edges with the same endpoints are
    // matched in id order.
    std::vector<int> edge_image(static_cast<size_t>(m), -1);
    {
        std::map<std::pair<int, int>, std::vector<int>> by_pair;
        for (int e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            by_pair[{ed.u, ed.v}].push_back(e);
        }
        std::map<std::pair<int, int>, int> cursor;
        for (int e = 0; e < m; ++e) {
            const Edge& ed = g.edge(e);
            int a = rho[static_cast<size_t>(ed.u)];
            int b = rho[static_cast<size_t>(ed.v)];
            std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            int idx = cursor[key]++;
            edge_image[static_cast<size_t>(e)] = by_pair.at(key)[static_cast<size_t>(idx)];
        }
    }

    std::vector<uint8_t> reversed(static_cast<size_t>(m));
    std::vector<int> colors(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) {
        int img = edge_image[static_cast<size_t>(e)];
        int old_color = lambda.color(img);
        // tail of the image edge after the class flip, pulled back through rho
        int tail_after = flip_edges[static_cast<size_t>(img)] ? lambda.head(img) : lambda.tail(img);
        const Edge& rec = g.edge(e);
        int new_tail = (rho[static_cast<size_t>(rec.u)] == tail_after) ? rec.u : rec.v;
        reversed[static_cast<size_t>(e)] = static_cast<uint8_t>(new_tail != rec.u);
        colors[static_cast<size_t>(e)] = color_image[color_index(old_color)];
    }
    return EdgeColoring(g, std::move(reversed), std::move(colors));
}

}  // namespace potlab
