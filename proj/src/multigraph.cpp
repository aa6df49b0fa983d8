#include "potlab/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace potlab {

Multigraph::Multigraph(int order, const std::vector<std::pair<int, int>>& edges)
    : order_(order) {
    if (order < 0) throw std::invalid_argument("multigraph order must be nonnegative");
    incident_.resize(static_cast<size_t>(order));
    degree_.assign(static_cast<size_t>(order), 0);
    loops_.assign(static_cast<size_t>(order), 0);
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= order || b < 0 || b >= order)
            throw std::invalid_argument("edge endpoint out of range");
        Edge e{std::min(a, b), std::max(a, b)};
        int id = static_cast<int>(edges_.size());
        edges_.push_back(e);
        incident_[static_cast<size_t>(e.u)].push_back(id);
        if (e.loop()) {
            degree_[static_cast<size_t>(e.u)] += 2;
            loops_[static_cast<size_t>(e.u)] += 1;
        } else {
            incident_[static_cast<size_t>(e.v)].push_back(id);
            degree_[static_cast<size_t>(e.u)] += 1;
            degree_[static_cast<size_t>(e.v)] += 1;
        }
    }
}

int Multigraph::max_degree() const {
    int m = 0;
    for (int d : degree_) m = std::max(m, d);
    return m;
}

int Multigraph::multiplicity(int u, int v) const {
    int lo = std::min(u, v), hi = std::max(u, v);
    int count = 0;
    for (int id : incident(lo)) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if (e.u == lo && e.v == hi) ++count;
    }
    return count;
}

bool Multigraph::has_loop() const {
    for (const Edge& e : edges_)
        if (e.loop()) return true;
    return false;
}

bool Multigraph::has_multiedge() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) pairs.emplace_back(e.u, e.v);
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

bool Multigraph::connected() const {
    if (order_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(order_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : incident(v)) {
            const Edge& e = edges_[static_cast<size_t>(id)];
            int w = (e.u == v) ? e.v : e.u;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == order_;
}

std::vector<int> Multigraph::degree_sequence() const {
    std::vector<int> d = degree_;
    std::sort(d.rbegin(), d.rend());
    return d;
}

Multigraph Multigraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != order_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<char> hit(static_cast<size_t>(order_), 0);
    for (int p : perm) {
        if (p < 0 || p >= order_ || hit[static_cast<size_t>(p)])
            throw std::invalid_argument("not a permutation");
        hit[static_cast<size_t>(p)] = 1;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edges_.size());
    for (const Edge& e : edges_)
        mapped.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
    return Multigraph(order_, mapped);
}

bool Multigraph::operator==(const Multigraph& other) const {
    if (order_ != other.order_) return false;
    auto key = [](const Multigraph& g) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(g.edges_.size());
        for (const Edge& e : g.edges_) pairs.emplace_back(e.u, e.v);
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    };
    return key(*this) == key(other);
}

std::optional<std::vector<int>> bipartition(const Multigraph& g) {
    std::vector<int> side(static_cast<size_t>(g.order()), -1);
    for (int start = 0; start < g.order(); ++start) {
        if (side[static_cast<size_t>(start)] != -1) continue;
        side[static_cast<size_t>(start)] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incident(v)) {
                const Edge& e = g.edge(id);
                if (e.loop()) return std::nullopt;
                int w = (e.u == v) ? e.v : e.u;
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                    q.push(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

Multigraph build_cayley(int dims, const std::vector<int>& connection_set) {
    if (dims < 1 || dims > 20) throw std::invalid_argument("group dimension out of range");
    if (connection_set.empty())
        throw std::invalid_argument("connection set must be nonempty");
    const int n = 1 << dims;
    std::vector<char> in_set(static_cast<size_t>(n), 0);
    for (int s : connection_set) {
        if (s <= 0 || s >= n)
            throw std::invalid_argument("connection set element out of range or zero");
        in_set[static_cast<size_t>(s)] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (in_set[static_cast<size_t>(x ^ y)]) edges.emplace_back(x, y);
    return Multigraph(n, edges);
}

Multigraph cube() { return build_cayley(3, {4, 2, 1}); }

Multigraph cycle(int k) {
    if (k < 1) throw std::invalid_argument("cycle length must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Multigraph(k, edges);
}

Multigraph path(int k) {
    if (k < 1) throw std::invalid_argument("path order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Multigraph(k, edges);
}

Multigraph star(int k) {
    if (k < 1) throw std::invalid_argument("star size must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Multigraph(k + 1, edges);
}

Multigraph matching(int k) {
    if (k < 1) throw std::invalid_argument("matching size must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return Multigraph(2 * k, edges);
}

}  // namespace potlab
