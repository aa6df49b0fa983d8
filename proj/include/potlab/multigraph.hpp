#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace potlab {

// Undirected edge with normalized endpoints (u <= v). A loop has u == v.
// Parallel edges are separate records; the edge id is its index in the
// graph's edge list.
struct Edge {
    int u = 0;
    int v = 0;
    bool loop() const { return u == v; }
};

// Small undirected multigraph: loops and parallel edges allowed.
// Immutable after construction.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

    // Loops count twice.
    int degree(int v) const { return degree_[static_cast<size_t>(v)]; }
    int loops_at(int v) const { return loops_[static_cast<size_t>(v)]; }
    int max_degree() const;

    // Number of edges joining u and v (loops when u == v).
    int multiplicity(int u, int v) const;

    // Edge ids incident to v; a loop appears once.
    const std::vector<int>& incident(int v) const { return incident_[static_cast<size_t>(v)]; }

    bool has_loop() const;
    bool has_multiedge() const;
    bool connected() const;

    // Sorted descending.
    std::vector<int> degree_sequence() const;

    // perm[old_id] = new_id; must be a bijection on [0, order).
    // Edge k of the result is the image of edge k (endpoints renormalized).
    Multigraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Multigraph& other) const;

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> degree_;
    std::vector<int> loops_;
};

// Bipartition sides (0/1 per vertex) when the graph has no odd closed walk.
// A loop forces failure. Disconnected graphs are handled component-wise.
std::optional<std::vector<int>> bipartition(const Multigraph& g);
bool is_bipartite(const Multigraph& g);

// --- constructors -----------------------------------------------------------

// Cayley graph of (Z_2)^dims with the given connection set. Elements are
// encoded as integers in [0, 2^dims); bit (dims-1) is the leading coordinate,
// so for dims=3 the triple ijk maps to 4i+2j+k. The connection set must be
// nonempty with every element nonzero; negation closure is automatic in
// exponent-2 groups.
Multigraph build_cayley(int dims, const std::vector<int>& connection_set);

// The 3-cube as Cay[(Z_2)^3 : {100, 010, 001}], vertex ids 000->0 .. 111->7.
Multigraph cube();

// Cycle of length k (k=1 is a loop, k=2 a digon), path on k vertices,
// star with k edges (center vertex 0), matching with k disjoint edges.
// k must be >= 1.
Multigraph cycle(int k);
Multigraph path(int k);
Multigraph star(int k);
Multigraph matching(int k);

}  // namespace potlab
