#pragma once

#include <optional>
#include <vector>

#include "potlab/coloring.hpp"
#include "potlab/multigraph.hpp"
#include "potlab/tile.hpp"

namespace potlab {

struct RealizationWitness {
    EdgeColoring coloring;
    Pot induced;             // induced pot of the coloring
    std::vector<int> usage;  // multiplicity per tile of the queried pot
};

struct RealizeOptions {
    // Require the witness to use every color of Sigma(P), not just a subset.
    bool require_all_colors = false;
};

// First witness in canonical search order (vertices by descending degree,
// tiles in canonical order), or nothing if no orientation+coloring of g
// induces a pot contained in p. g must be connected.
std::optional<RealizationWitness> realize(const Multigraph& g, const Pot& p,
                                          const RealizeOptions& options = {});

// Re-checks a witness from first principles: tile sizes match degrees,
// the induced pot is contained in p, and the usage vector balances.
bool validate_witness(const RealizationWitness& w, const Pot& p);

}  // namespace potlab
