#include "potlab/io.hpp"

#include <fstream>

#include "potlab/canonical.hpp"

namespace potlab {
namespace {

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<int>();
}

}  // namespace

Json to_json(const Multigraph& g) {
    Json j;
    j["order"] = g.order();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    return j;
}

Multigraph multigraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
        throw ParseError("graph JSON must have \"order\" and \"edges\"");
    int order = require_int(j["order"], "order");
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array of pairs");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
        edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
    }
    try {
        return Multigraph(order, edges);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

Json to_json(const Pot& p) {
    Json j = Json::array();
    for (const Tile& t : p.tiles()) j.push_back(t.values());
    return j;
}

Pot pot_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("pot JSON must be an array of tiles");
    std::vector<Tile> tiles;
    for (const Json& tj : j) {
        if (!tj.is_array()) throw ParseError("each tile must be an array of nonzero integers");
        std::vector<int> vals;
        for (const Json& v : tj) vals.push_back(require_int(v, "tile value"));
        try {
            tiles.emplace_back(std::move(vals));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
    }
    return Pot(std::move(tiles));
}

Json to_json(const EdgeColoring& c) {
    Json j;
    j["graph"] = to_json(c.graph());
    Json edges = Json::array();
    for (int e = 0; e < c.graph().edge_count(); ++e) {
        Json rec;
        rec["id"] = e;
        rec["tail"] = c.tail(e);
        rec["head"] = c.head(e);
        rec["color"] = c.color(e);
        edges.push_back(std::move(rec));
    }
    j["edges"] = std::move(edges);
    return j;
}

EdgeColoring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("edges"))
        throw ParseError("coloring JSON must have \"graph\" and \"edges\"");
    Multigraph g = multigraph_from_json(j["graph"]);
    if (!j["edges"].is_array() || j["edges"].size() != static_cast<size_t>(g.edge_count()))
        throw ParseError("coloring must cover every edge exactly once");
    std::vector<uint8_t> reversed(static_cast<size_t>(g.edge_count()), 0);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    std::vector<char> seen(static_cast<size_t>(g.edge_count()), 0);
    for (const Json& rec : j["edges"]) {
        if (!rec.is_object()) throw ParseError("each colored edge must be an object");
        int id = require_int(rec.at("id"), "edge id");
        if (id < 0 || id >= g.edge_count() || seen[static_cast<size_t>(id)])
            throw ParseError("edge ids must cover [0, m) exactly once");
        seen[static_cast<size_t>(id)] = 1;
        int tail = require_int(rec.at("tail"), "tail");
        int head = require_int(rec.at("head"), "head");
        int color = require_int(rec.at("color"), "color");
        const Edge& e = g.edge(id);
        if (!((tail == e.u && head == e.v) || (tail == e.v && head == e.u)))
            throw ParseError("tail/head must be the endpoints of the edge id");
        if (color < 1) throw ParseError("colors must be positive");
        reversed[static_cast<size_t>(id)] = static_cast<uint8_t>(tail == e.v && e.u != e.v);
        colors[static_cast<size_t>(id)] = color;
    }
    return EdgeColoring(std::move(g), std::move(reversed), std::move(colors));
}

Json to_json(const RealizationWitness& w) {
    Json j;
    j["coloring"] = to_json(w.coloring);
    j["induced_pot"] = to_json(w.induced);
    j["usage"] = w.usage;
    return j;
}

Json to_json(const ScenarioFlags& flags) {
    Json j;
    j["realized"] = flags.realized;
    j["scenario2"] = flags.scenario2;
    j["scenario3"] = flags.scenario3;
    if (flags.witness) j["witness"] = to_json(*flags.witness);
    Json smaller = Json::array();
    for (const Multigraph& g : flags.smaller_counterexamples) smaller.push_back(to_json(g));
    j["smaller_counterexamples"] = std::move(smaller);
    Json equal = Json::array();
    for (const Multigraph& g : flags.equal_order_counterexamples) equal.push_back(to_json(g));
    j["equal_order_counterexamples"] = std::move(equal);
    return j;
}

Json to_json(const OutputClass& oc) {
    Json j;
    j["order"] = oc.order;
    j["canonical"] = oc.form.to_string();
    j["graph"] = to_json(oc.representative);
    j["witness"] = to_json(oc.witness);
    return j;
}

Json to_json(const NetColorMatrix& m) {
    Json j;
    j["colors"] = m.colors;
    j["rows"] = m.rows;
    return j;
}

Json to_json(const MinimalSolutions& sol) {
    Json j;
    Json gens = Json::array();
    for (const UsageVector& u : sol.generators) gens.push_back(u.counts);
    j["generators"] = std::move(gens);
    j["orders"] = sol.orders;
    j["max_order"] = sol.max_order;
    return j;
}

Json to_json(const MinOrderResult& res) {
    Json j;
    if (res.order)
        j["min_order"] = *res.order;
    else
        j["min_order"] = nullptr;
    j["provably_infeasible"] = res.provably_infeasible;
    j["bound"] = res.bound;
    return j;
}

Json to_json(const CensusReport& report, bool include_candidates) {
    Json j;
    j["colors"] = report.color_count;
    j["raw_partitions"] = report.raw_partitions;
    j["canonical_partitions"] = report.canonical_partitions;
    j["candidates"] = report.candidates;
    j["survivors"] = report.survivors;
    j["survivor_pot_sizes"] = report.survivor_pot_sizes;
    Json classes = Json::array();
    for (const Pot& p : report.biminimal_classes) classes.push_back(to_json(p));
    j["biminimal_classes"] = std::move(classes);
    if (include_candidates) {
        Json cands = Json::array();
        for (const CensusCandidate& cand : report.candidate_list) {
            Json cj;
            Json cls = Json::array();
            for (const ColorClass& cc : cand.partition.classes) {
                Json c;
                c["edges"] = cc.edge_ids;
                c["kind"] = cc.kind == ColorClass::Kind::Star ? "star" : "antipodal-matching";
                if (cc.center >= 0) c["center"] = cc.center;
                cls.push_back(std::move(c));
            }
            cj["classes"] = std::move(cls);
            cj["pot"] = to_json(cand.pot);
            cj["witness"] = to_json(cand.coloring);
            cj["scenario3"] = cand.scenario3;
            if (cand.counterexample) cj["counterexample"] = to_json(*cand.counterexample);
            cands.push_back(std::move(cj));
        }
        j["candidates_detail"] = std::move(cands);
    }
    return j;
}

Json to_json(const LowerBoundCertificates& cert) {
    Json j;
    j["four_color_candidates"] = cert.four_color_candidates;
    j["four_color_survivors"] = cert.four_color_survivors;
    j["three_or_fewer_impossible"] = cert.three_or_fewer_impossible;
    j["five_color_candidates"] = cert.five_color_candidates;
    j["five_color_survivors"] = cert.five_color_survivors;
    j["five_color_min_pot_size"] = cert.five_color_min_pot_size;
    j["star_count_bound_holds"] = cert.star_count_bound_holds;
    return j;
}

Json to_json(const ExtremalStats& stats) {
    Json j;
    j["scenario"] = stats.scenario;
    j["tile_bound"] = stats.tile_bound;
    j["color_bound"] = stats.color_bound;
    if (stats.min_tiles)
        j["min_tiles"] = *stats.min_tiles;
    else
        j["min_tiles"] = nullptr;
    if (stats.min_colors)
        j["min_colors"] = *stats.min_colors;
    else
        j["min_colors"] = nullptr;
    if (stats.tile_witness) j["tile_witness"] = to_json(*stats.tile_witness);
    if (stats.color_witness) j["color_witness"] = to_json(*stats.color_witness);
    j["pots_examined"] = stats.pots_examined;
    j["note"] = stats.note;
    return j;
}

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return j;
}

void write_file(const std::string& path, const Json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace potlab
