#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "potlab/canonical.hpp"
#include "potlab/multigraph.hpp"
#include "potlab/realize.hpp"
#include "potlab/tile.hpp"

namespace potlab {

// Maximum order accepted by output enumeration.
inline constexpr int kOutputOrderLimit = 12;

struct OutputOptions {
    bool allow_loops = true;
    bool allow_multiedges = true;
};

// One isomorphism class of connected graphs realizable from a pot.
struct OutputClass {
    CanonicalForm form;
    Multigraph representative;
    RealizationWitness witness;  // on the representative
    int order = 0;
};

// All connected graphs realizable from p with at most max_order vertices,
// up to isomorphism. Exhaustive: every valid usage vector is expanded into
// every pairing of +c half-edges with -c half-edges (same-vertex pairings
// are loops), filtered by the options and connectivity, then deduplicated
// by canonical form. Sorted by (order, canonical form).
std::vector<OutputClass> enumerate_outputs(const Pot& p, int max_order,
                                           const OutputOptions& options = {});

// enumerate_outputs with max_order = order - 1.
std::vector<OutputClass> outputs_below(const Pot& p, int order,
                                       const OutputOptions& options = {});

// First generated output that defeats target's Scenario-3 claim: any output
// of smaller order, or one of equal order not isomorphic to target. Stops as
// soon as one is found. With scenario2_only, equal-order outputs are ignored.
std::optional<Multigraph> find_forbidden_output(const Pot& p, const Multigraph& target,
                                                bool scenario2_only = false);

struct ScenarioFlags {
    bool realized = false;
    bool scenario2 = false;
    bool scenario3 = false;
    std::optional<RealizationWitness> witness;
    std::vector<Multigraph> smaller_counterexamples;      // defeat Scenario 2
    std::vector<Multigraph> equal_order_counterexamples;  // defeat Scenario 3
};

// Scenario membership of (g, p): realized; realized with no smaller-order
// output; realized with every output of order <= |V(g)| isomorphic to g.
// Counterexample representatives from the exhaustive enumeration are
// attached when a level fails. g must be connected.
ScenarioFlags classify_scenarios(const Multigraph& g, const Pot& p);

}  // namespace potlab
