#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potlab/multigraph.hpp"

namespace potlab {

// Maximum order accepted by the exact canonical/isomorphism searches.
inline constexpr int kCanonicalOrderLimit = 12;

// Relabeling-invariant certificate: the lexicographically minimal
// column-scan of the upper-triangular adjacency-multiplicity matrix
// (loop counts on the diagonal), taken over all admissible vertex
// labelings. Equal certificates iff the multigraphs are isomorphic.
class CanonicalForm {
public:
    CanonicalForm() = default;
    CanonicalForm(int order, std::vector<int> code) : order_(order), code_(std::move(code)) {}

    int order() const { return order_; }
    const std::vector<int>& code() const { return code_; }
    std::string to_string() const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.order_ == b.order_ && a.code_ == b.code_;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        return a.code_ < b.code_;
    }

private:
    int order_ = 0;
    std::vector<int> code_;
};

// Canonical form plus one labeling that achieves it (position_of[v] = slot).
struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> position_of;
};

CanonicalLabeling canonical_labeling(const Multigraph& g);
CanonicalForm canonical_form(const Multigraph& g);

// The canonically relabeled copy of g.
Multigraph canonical_copy(const Multigraph& g);

// Vertex bijection g -> h preserving multiplicities and loops, if one exists.
std::optional<std::vector<int>> are_isomorphic(const Multigraph& g, const Multigraph& h);

// All adjacency-multiplicity-preserving vertex permutations, identity included,
// sorted lexicographically.
std::vector<std::vector<int>> automorphism_group(const Multigraph& g);

// The connected simple cubic graphs of order 8, deduplicated by canonical
// form and sorted by it. Generated by exhaustive degree-constrained
// enumeration, not hard-coded.
std::vector<Multigraph> catalog_cubic8();

}  // namespace potlab

template <>
struct std::hash<potlab::CanonicalForm> {
    size_t operator()(const potlab::CanonicalForm& f) const noexcept {
        size_t h = std::hash<int>{}(f.order());
        for (int v : f.code()) h = h * 1099511628211ULL + static_cast<size_t>(v + 7);
        return h;
    }
};
