#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "potlab/coloring.hpp"
#include "potlab/multigraph.hpp"

namespace potlab {

struct CheckResult {
    std::string id;
    std::string label;
    std::string expected;
    std::string computed;
    bool pass = false;
    double ms = 0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool pass = true;
    double total_ms = 0;
};

struct VerifyOptions {
    uint64_t seed = 0x5eed5eedULL;
    int threads = 1;
    int property_cases = 1000;
    // Multiplier for the per-check runtime budgets; raise it when running
    // instrumented (sanitizer/debug) builds.
    double budget_scale = 1.0;
    // When set, the bundled data files in this directory are checked
    // against the library's own values first.
    std::optional<std::string> data_dir;
    // Run only checks whose id contains this substring.
    std::optional<std::string> only;
};

// Runs the full verification suite (deterministic for a fixed seed).
VerificationReport verify_all(const VerifyOptions& options = {});

// Deterministic random connected multigraph of order <= max_order with a
// random orientation and coloring; shared by the property suites.
EdgeColoring random_coloring(uint64_t& state, int max_order, int max_extra_edges,
                             int max_colors);

}  // namespace potlab
