#include "potlab/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace potlab {
namespace {

std::vector<int> distinct_sorted(const std::vector<int>& colors) {
    for (int c : colors)
        if (c < 1) throw std::invalid_argument("edge colors must be positive");
    std::vector<int> d = colors;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

}  // namespace

EdgeColoring::EdgeColoring(Multigraph graph, std::vector<uint8_t> reversed,
                           std::vector<int> colors)
    : graph_(std::move(graph)), reversed_(std::move(reversed)), colors_(std::move(colors)) {
    const size_t m = static_cast<size_t>(graph_.edge_count());
    if (reversed_.size() != m || colors_.size() != m)
        throw std::invalid_argument("coloring arrays must cover every edge");
    distinct_ = distinct_sorted(colors_);
}

std::vector<int> EdgeColoring::color_class(int c) const {
    std::vector<int> ids;
    for (int e = 0; e < graph_.edge_count(); ++e)
        if (colors_[static_cast<size_t>(e)] == c) ids.push_back(e);
    return ids;
}

EdgeColoring EdgeColoring::normalized() const {
    std::vector<int> remapped(colors_.size());
    for (size_t i = 0; i < colors_.size(); ++i)
        remapped[i] = static_cast<int>(std::lower_bound(distinct_.begin(), distinct_.end(),
                                                        colors_[i]) -
                                       distinct_.begin()) +
                      1;
    return EdgeColoring(graph_, reversed_, std::move(remapped));
}

Tile EdgeColoring::induced_tile(int v) const {
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(graph_.degree(v)));
    for (int id : graph_.incident(v)) {
        const Edge& e = graph_.edge(id);
        int c = colors_[static_cast<size_t>(id)];
        if (e.loop()) {
            vals.push_back(c);
            vals.push_back(-c);
        } else if (tail(id) == v) {
            vals.push_back(c);
        } else {
            vals.push_back(-c);
        }
    }
    return Tile(std::move(vals));
}

Pot EdgeColoring::induced_pot() const {
    std::vector<Tile> tiles;
    tiles.reserve(static_cast<size_t>(graph_.order()));
    for (int v = 0; v < graph_.order(); ++v) tiles.push_back(induced_tile(v));
    return Pot(std::move(tiles));
}

UndirectedColoring::UndirectedColoring(Multigraph graph, std::vector<int> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
    if (colors_.size() != static_cast<size_t>(graph_.edge_count()))
        throw std::invalid_argument("coloring array must cover every edge");
    distinct_ = distinct_sorted(colors_);
}

Tile UndirectedColoring::induced_tile(int v) const {
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(graph_.degree(v)));
    for (int id : graph_.incident(v)) {
        const Edge& e = graph_.edge(id);
        int c = colors_[static_cast<size_t>(id)];
        vals.push_back(c);
        if (e.loop()) vals.push_back(c);
    }
    return Tile(std::move(vals));
}

Pot UndirectedColoring::induced_pot() const {
    std::vector<Tile> tiles;
    tiles.reserve(static_cast<size_t>(graph_.order()));
    for (int v = 0; v < graph_.order(); ++v) tiles.push_back(induced_tile(v));
    return Pot(std::move(tiles));
}

UndirectedColoring underlying_coloring(const EdgeColoring& lambda) {
    return UndirectedColoring(lambda.graph(), lambda.colors());
}

bool same_color_same_direction(const EdgeColoring& lambda) {
    const Multigraph& g = lambda.graph();
    if (g.has_loop())
        throw std::invalid_argument("direction-uniformity check is defined for loopless graphs");
    const auto& distinct = lambda.distinct_colors();
    for (int v = 0; v < g.order(); ++v) {
        // sign per color at v: +1 all tails so far, -1 all heads, 0 unseen
        std::vector<int> sign(distinct.size(), 0);
        for (int id : g.incident(v)) {
            size_t k = static_cast<size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), lambda.color(id)) -
                distinct.begin());
            int s = (lambda.tail(id) == v) ? 1 : -1;
            if (sign[k] == 0)
                sign[k] = s;
            else if (sign[k] != s)
                return false;
        }
    }
    return true;
}

}  // namespace potlab
