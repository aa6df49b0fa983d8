#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "potlab/tile.hpp"

namespace potlab {

// Net-color balance system of a pot: one row per color of Sigma(P) in
// ascending order, one column per tile in canonical order. Entry (j, i) is
// (+j count) - (-j count) of tile i. A usage vector R is valid iff M R = 0.
struct NetColorMatrix {
    std::vector<int> colors;             // row labels
    std::vector<std::vector<int>> rows;  // rows.size() == colors.size()
    int tile_count = 0;
};

NetColorMatrix build_system(const Pot& p);

// Nonnegative tile multiplicities; order() is the number of vertices the
// usage accounts for.
struct UsageVector {
    std::vector<int> counts;
    int order() const;
    friend bool operator==(const UsageVector& a, const UsageVector& b) {
        return a.counts == b.counts;
    }
    friend bool operator<(const UsageVector& a, const UsageVector& b);
};

// Every nonzero solution of the balance system with order <= max_total,
// sorted by (order, counts). Exact arithmetic throughout.
std::vector<UsageVector> enumerate_usage(const Pot& p, int max_total);

struct MinimalSolutions {
    std::vector<UsageVector> generators;  // minimal nonzero solutions under <=
    std::vector<int> orders;              // achievable orders <= max_order, ascending
    int max_order = 0;
};

// Componentwise-minimal nonzero solutions with order <= max_order. Every
// valid usage vector up to max_order is a nonnegative integer combination of
// the generators; this is re-verified internally before returning.
MinimalSolutions minimal_solutions(const Pot& p, int max_order);

struct MinOrderResult {
    std::optional<int> order;  // least order of a nonzero solution, if found
    bool provably_infeasible = false;  // nullspace is trivial: no solution at any order
    int bound = 0;                     // search bound when order is unknown
};

MinOrderResult min_order(const Pot& p, int bound = 64);

}  // namespace potlab
