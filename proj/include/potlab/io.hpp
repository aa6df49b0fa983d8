#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "potlab/coloring.hpp"
#include "potlab/extremal.hpp"
#include "potlab/multigraph.hpp"
#include "potlab/outputs.hpp"
#include "potlab/realize.hpp"
#include "potlab/spectrum.hpp"
#include "potlab/tile.hpp"

namespace potlab {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph: {"order": n, "edges": [[u, v], ...]}; loops as [u, u]; parallel
// edges as repeated pairs.
Json to_json(const Multigraph& g);
Multigraph multigraph_from_json(const Json& j);

// Pot: array of tiles, each an array of nonzero integers.
Json to_json(const Pot& p);
Pot pot_from_json(const Json& j);

// Coloring: {"graph": ..., "edges": [{"id", "tail", "head", "color"}, ...]}.
Json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Json& j);

Json to_json(const RealizationWitness& w);
Json to_json(const ScenarioFlags& flags);
Json to_json(const OutputClass& oc);
Json to_json(const NetColorMatrix& m);
Json to_json(const MinimalSolutions& sol);
Json to_json(const MinOrderResult& res);
Json to_json(const CensusReport& report, bool include_candidates);
Json to_json(const LowerBoundCertificates& cert);
Json to_json(const ExtremalStats& stats);

Json parse_file(const std::string& path);
void write_file(const std::string& path, const Json& j, bool pretty);

}  // namespace potlab
