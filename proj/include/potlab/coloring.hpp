#pragma once

#include <cstdint>
#include <vector>

#include "potlab/multigraph.hpp"
#include "potlab/tile.hpp"

namespace potlab {

// Edge-coloring of an orientation of a multigraph. Each edge id carries a
// direction (reversed: tail/head swapped relative to the stored endpoint
// order) and a positive color. Color values are kept verbatim so that
// realization witnesses can use the exact colors of their pot; normalized()
// gives the order-preserving remap onto [1, c].
class EdgeColoring {
public:
    EdgeColoring(Multigraph graph, std::vector<uint8_t> reversed, std::vector<int> colors);

    const Multigraph& graph() const { return graph_; }

    // Distinct colors in use, ascending.
    const std::vector<int>& distinct_colors() const { return distinct_; }
    int color_count() const { return static_cast<int>(distinct_.size()); }

    int tail(int edge_id) const {
        const Edge& e = graph_.edge(edge_id);
        return reversed_[static_cast<size_t>(edge_id)] ? e.v : e.u;
    }
    int head(int edge_id) const {
        const Edge& e = graph_.edge(edge_id);
        return reversed_[static_cast<size_t>(edge_id)] ? e.u : e.v;
    }
    bool reversed(int edge_id) const { return reversed_[static_cast<size_t>(edge_id)] != 0; }
    int color(int edge_id) const { return colors_[static_cast<size_t>(edge_id)]; }
    const std::vector<uint8_t>& reversed_flags() const { return reversed_; }
    const std::vector<int>& colors() const { return colors_; }

    // Edge ids colored c, ascending.
    std::vector<int> color_class(int c) const;

    // Copy with colors remapped order-preservingly onto [1, c].
    EdgeColoring normalized() const;

    // Signed colors contributed at v: +c at the tail, -c at the head of each
    // non-loop edge; a directed loop contributes both +c and -c.
    Tile induced_tile(int v) const;
    Pot induced_pot() const;

private:
    Multigraph graph_;
    std::vector<uint8_t> reversed_;
    std::vector<int> colors_;
    std::vector<int> distinct_;
};

// Edge-coloring of the undirected graph itself (no orientation). A loop
// contributes its color twice to the incident tile.
class UndirectedColoring {
public:
    UndirectedColoring(Multigraph graph, std::vector<int> colors);

    const Multigraph& graph() const { return graph_; }
    const std::vector<int>& distinct_colors() const { return distinct_; }
    int color_count() const { return static_cast<int>(distinct_.size()); }
    int color(int edge_id) const { return colors_[static_cast<size_t>(edge_id)]; }
    const std::vector<int>& colors() const { return colors_; }

    Tile induced_tile(int v) const;
    Pot induced_pot() const;

private:
    Multigraph graph_;
    std::vector<int> colors_;
    std::vector<int> distinct_;
};

// Forgets the orientation. The induced pot of the result equals the
// absolute pot of the directed induced pot.
UndirectedColoring underlying_coloring(const EdgeColoring& lambda);

// True iff at every vertex the incident edges of each color are uniformly
// outgoing or uniformly ingoing. Defined for loopless graphs only.
bool same_color_same_direction(const EdgeColoring& lambda);

}  // namespace potlab
