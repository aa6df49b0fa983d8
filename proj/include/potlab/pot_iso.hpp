#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "potlab/coloring.hpp"
#include "potlab/tile.hpp"

namespace potlab {

// Sign-odd bijection f on signed colors with f(from) == to as sets of tiles.
class PotIsomorphism {
public:
    PotIsomorphism(Pot from, Pot to, std::vector<int> image);

    const Pot& from() const { return from_; }
    const Pot& to() const { return to_; }

    // f(i) for any signed color i with |i| in Sigma(from); f(-i) = -f(i).
    int apply(int signed_color) const;
    // f+(i) = |f(i)| for positive i.
    int apply_abs(int color) const { return std::abs(apply(color)); }

    Tile apply(const Tile& t) const;
    Pot apply(const Pot& p) const;

    bool is_identity() const;

    // Images aligned with from().colors().
    const std::vector<int>& images() const { return image_; }

private:
    Pot from_;
    Pot to_;
    std::vector<int> image_;
};

// All pot isomorphisms from p to q; empty iff the pots are non-isomorphic.
std::vector<PotIsomorphism> pot_isomorphisms(const Pot& p, const Pot& q);

// Transport a coloring along a pot isomorphism whose domain is the induced
// pot: edges whose color maps to a negative value are reversed, every edge is
// recolored by f+. The induced pot of the result is f(induced pot), up to the
// contiguous-color renormalization of EdgeColoring.
EdgeColoring apply_pot_isomorphism(const EdgeColoring& lambda, const PotIsomorphism& f);

// Color bijection + per-class orientation flips + graph automorphism.
// flip_edges must reverse all or none of each color class. The result
// realizes the same graph through a pot isomorphic to the original one.
EdgeColoring retarget_realization(const EdgeColoring& lambda,
                                  const std::vector<int>& color_image,
                                  const std::vector<uint8_t>& flip_edges,
                                  const std::vector<int>& rho);

}  // namespace potlab
