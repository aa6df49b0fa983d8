#pragma once

#include <optional>
#include <string>
#include <vector>

namespace potlab {

// Multiset of nonzero signed colors. Stored sorted by (absolute color, sign)
// with positive before negative, so {-1, 3, -5} reads in absolute-color order.
class Tile {
public:
    explicit Tile(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }

    int count(int signed_color) const;
    int distinct_abs_count() const;
    bool monochromatic() const { return distinct_abs_count() == 1; }
    bool bichromatic() const { return distinct_abs_count() == 2; }

    Tile negated() const;
    Tile abs() const;

    // Sorted distinct absolute colors.
    std::vector<int> abs_colors() const;

    // |a \cap b| as multisets of signed values.
    static int intersection_size(const Tile& a, const Tile& b);

    std::string to_string() const;

    friend bool operator==(const Tile& a, const Tile& b) { return a.values_ == b.values_; }
    friend bool operator!=(const Tile& a, const Tile& b) { return !(a == b); }

private:
    std::vector<int> values_;
};

// Canonical ordering used everywhere a pot's tiles are indexed: size, then
// number of distinct absolute colors (monochromatic first), then the absolute
// multiset, then the signed values.
bool tile_less(const Tile& a, const Tile& b);

// Set of distinct tiles, kept sorted in canonical tile order.
class Pot {
public:
    Pot() = default;
    explicit Pot(std::vector<Tile> tiles);

    const std::vector<Tile>& tiles() const { return tiles_; }
    const Tile& tile(int i) const { return tiles_[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(tiles_.size()); }
    bool empty() const { return tiles_.empty(); }

    // Sigma(P): sorted distinct positive colors appearing in any tile.
    const std::vector<int>& colors() const { return colors_; }
    int color_count() const { return static_cast<int>(colors_.size()); }

    bool contains(const Tile& t) const;
    std::optional<int> index_of(const Tile& t) const;

    std::string to_string() const;

    friend bool operator==(const Pot& a, const Pot& b) { return a.tiles_ == b.tiles_; }
    friend bool operator!=(const Pot& a, const Pot& b) { return !(a == b); }
    friend bool operator<(const Pot& a, const Pot& b);

private:
    std::vector<Tile> tiles_;
    std::vector<int> colors_;
};

// Elementwise absolute value, deduplicated.
Pot absolute_pot(const Pot& p);

// Necessary-condition flags for the shapes a realization of this pot can
// contain, plus the mono/bichromatic tile counts.
struct StructuralFlags {
    bool loop_possible = false;
    bool multiedge_possible = false;
    int monochromatic_count = 0;
    int bichromatic_count = 0;
};
StructuralFlags structural_flags(const Pot& p);

// Canonical representative of the pot-isomorphism class: the minimal pot
// encoding over all sign-odd color bijections onto [1, |Sigma|].
Pot canonical_pot(const Pot& p);

// Convenience for literal pots in tests and tools.
Pot make_pot(const std::vector<std::vector<int>>& tiles);

// The two biminimal 5-color pots that 3-realize the cube.
Pot pot_p1();
Pot pot_p2();

}  // namespace potlab
