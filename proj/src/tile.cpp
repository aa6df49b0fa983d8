#include "potlab/tile.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace potlab {
namespace {

// Positive before negative at equal absolute value.
bool value_key_less(int a, int b) {
    int aa = std::abs(a), ab = std::abs(b);
    if (aa != ab) return aa < ab;
    return (a > 0) && (b < 0);
}

}  // namespace

Tile::Tile(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("tile must be nonempty");
    for (int v : values_)
        if (v == 0) throw std::invalid_argument("tile values must be nonzero");
    std::sort(values_.begin(), values_.end(), value_key_less);
}

int Tile::count(int signed_color) const {
    return static_cast<int>(std::count(values_.begin(), values_.end(), signed_color));
}

int Tile::distinct_abs_count() const {
    std::vector<int> a;
    a.reserve(values_.size());
    for (int v : values_) a.push_back(std::abs(v));
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return static_cast<int>(a.size());
}

Tile Tile::negated() const {
    std::vector<int> out;
    out.reserve(values_.size());
    for (int v : values_) out.push_back(-v);
    return Tile(std::move(out));
}

Tile Tile::abs() const {
    std::vector<int> out;
    out.reserve(values_.size());
    for (int v : values_) out.push_back(std::abs(v));
    return Tile(std::move(out));
}

std::vector<int> Tile::abs_colors() const {
    std::vector<int> a;
    a.reserve(values_.size());
    for (int v : values_) a.push_back(std::abs(v));
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

int Tile::intersection_size(const Tile& a, const Tile& b) {
    int total = 0;
    size_t i = 0, j = 0;
    const auto& x = a.values_;
    const auto& y = b.values_;
    // Both are sorted under the same strict weak order; count equal runs.
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            ++total;
            ++i;
            ++j;
        } else if (value_key_less(x[i], y[j])) {
            ++i;
        } else {
            ++j;
        }
    }
    return total;
}

std::string Tile::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values_[i]);
    }
    return s + "}";
}

bool tile_less(const Tile& a, const Tile& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    int da = a.distinct_abs_count(), db = b.distinct_abs_count();
    if (da != db) return da < db;
    const auto& av = a.values();
    const auto& bv = b.values();
    for (size_t i = 0; i < av.size(); ++i) {
        int aa = std::abs(av[i]), ab = std::abs(bv[i]);
        if (aa != ab) return aa < ab;
    }
    for (size_t i = 0; i < av.size(); ++i)
        if (av[i] != bv[i]) return value_key_less(av[i], bv[i]);
    return false;
}

Pot::Pot(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
    std::sort(tiles_.begin(), tiles_.end(), tile_less);
    tiles_.erase(std::unique(tiles_.begin(), tiles_.end()), tiles_.end());
    for (const Tile& t : tiles_)
        for (int c : t.abs_colors()) colors_.push_back(c);
    std::sort(colors_.begin(), colors_.end());
    colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
}

bool Pot::contains(const Tile& t) const { return index_of(t).has_value(); }

std::optional<int> Pot::index_of(const Tile& t) const {
    auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t, tile_less);
    if (it != tiles_.end() && *it == t) return static_cast<int>(it - tiles_.begin());
    return std::nullopt;
}

std::string Pot::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < tiles_.size(); ++i) {
        if (i) s += ", ";
        s += tiles_[i].to_string();
    }
    return s + "}";
}

bool operator<(const Pot& a, const Pot& b) {
    const size_t n = std::min(a.tiles_.size(), b.tiles_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.tiles_[i] != b.tiles_[i])
            return tile_less(a.tiles_[i], b.tiles_[i]);
    }
    return a.tiles_.size() < b.tiles_.size();
}

Pot absolute_pot(const Pot& p) {
    std::vector<Tile> tiles;
    tiles.reserve(static_cast<size_t>(p.size()));
    for (const Tile& t : p.tiles()) tiles.push_back(t.abs());
    return Pot(std::move(tiles));
}

StructuralFlags structural_flags(const Pot& p) {
    StructuralFlags f;
    for (const Tile& t : p.tiles()) {
        if (Tile::intersection_size(t.negated(), t) >= 2) f.loop_possible = true;
        if (t.monochromatic()) ++f.monochromatic_count;
        if (t.bichromatic()) ++f.bichromatic_count;
    }
    for (const Tile& a : p.tiles())
        for (const Tile& b : p.tiles())
            if (Tile::intersection_size(a.negated(), b) >= 2) f.multiedge_possible = true;
    return f;
}

Pot canonical_pot(const Pot& p) {
    const auto& colors = p.colors();
    const int c = static_cast<int>(colors.size());
    if (c == 0) return p;
    std::vector<int> perm(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) perm[static_cast<size_t>(i)] = i;

    std::optional<Pot> best;
    std::sort(perm.begin(), perm.end());
    do {
        for (int signs = 0; signs < (1 << c); ++signs) {
            // colors[k] maps to +-(perm[k]+1)
            std::vector<Tile> tiles;
            tiles.reserve(static_cast<size_t>(p.size()));
            for (const Tile& t : p.tiles()) {
                std::vector<int> vals;
                vals.reserve(static_cast<size_t>(t.size()));
                for (int v : t.values()) {
                    int a = std::abs(v);
                    int k = static_cast<int>(
                        std::lower_bound(colors.begin(), colors.end(), a) - colors.begin());
                    int img = perm[static_cast<size_t>(k)] + 1;
                    if (signs & (1 << k)) img = -img;
                    vals.push_back(v > 0 ? img : -img);
                }
                tiles.emplace_back(std::move(vals));
            }
            Pot q(std::move(tiles));
            if (!best || q < *best) best = std::move(q);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

Pot make_pot(const std::vector<std::vector<int>>& tiles) {
    std::vector<Tile> ts;
    ts.reserve(tiles.size());
    for (const auto& t : tiles) ts.emplace_back(t);
    return Pot(std::move(ts));
}

Pot pot_p1() {
    return make_pot({{1, 1, 1}, {2, 2, 2}, {-2, -3, -3}, {-1, -4, -4}, {-1, 3, -5}, {-2, 4, 5}});
}

Pot pot_p2() {
    return make_pot({{1, 1, 1}, {2, 2, 2}, {-2, -3, -3}, {-1, -4, -4}, {3, 4, 5}, {-1, -2, -5}});
}

}  // namespace potlab
