#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "potlab/canonical.hpp"
#include "potlab/extremal.hpp"
#include "potlab/io.hpp"
#include "potlab/outputs.hpp"
#include "potlab/pot_iso.hpp"
#include "potlab/realize.hpp"
#include "potlab/spectrum.hpp"
#include "potlab/verification.hpp"

namespace {

using potlab::Json;

// exit codes: 0 success, 1 negative mathematical answer, 2 usage/input error
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int default_threads() {
    if (const char* env = std::getenv("POTLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"potlab: exact engine for flexible-tile graph self-assembly"};
    app.require_subcommand(1);
    bool pretty = false;
    int threads = default_threads();
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_option("--threads", threads, "worker threads for the census")->check(CLI::PositiveNumber);

    std::string graph_file, pot_file, pot_file2;
    bool strict_colors = false;

    auto* cmd_realize = app.add_subcommand("realize", "find a realization of a graph through a pot");
    cmd_realize->add_option("graph", graph_file, "graph JSON file")->required();
    cmd_realize->add_option("pot", pot_file, "pot JSON file")->required();
    cmd_realize->add_flag("--strict-colors", strict_colors,
                          "require the witness to use every color of the pot");

    auto* cmd_scenario = app.add_subcommand("scenario", "classify Scenario 1/2/3 membership");
    cmd_scenario->add_option("graph", graph_file, "graph JSON file")->required();
    cmd_scenario->add_option("pot", pot_file, "pot JSON file")->required();

    int max_order = 8;
    bool no_loops = false, no_multiedges = false;
    auto* cmd_outputs = app.add_subcommand("outputs", "enumerate realizable graphs up to an order");
    cmd_outputs->add_option("pot", pot_file, "pot JSON file")->required();
    cmd_outputs->add_option("--max-order", max_order, "largest order to enumerate")
        ->check(CLI::Range(1, 12));
    cmd_outputs->add_flag("--no-loops", no_loops, "discard outputs with loops");
    cmd_outputs->add_flag("--no-multiedges", no_multiedges, "discard outputs with parallel edges");

    int spectrum_max = 16, spectrum_bound = 64;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "balance system, generators and min order");
    cmd_spectrum->add_option("pot", pot_file, "pot JSON file")->required();
    cmd_spectrum->add_option("--max-order", spectrum_max, "bound for generator extraction")
        ->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--bound", spectrum_bound, "search bound for the minimum order")
        ->check(CLI::PositiveNumber);

    auto* cmd_potiso = app.add_subcommand("pot-iso", "enumerate pot isomorphisms");
    cmd_potiso->add_option("pot1", pot_file, "first pot JSON file")->required();
    cmd_potiso->add_option("pot2", pot_file2, "second pot JSON file")->required();

    std::string census_target;
    int census_colors = 5;
    bool emit_certificates = false;
    auto* cmd_census = app.add_subcommand("census", "exhaustive coloring census of the cube");
    cmd_census->add_option("target", census_target, "only \"cube\" is supported")->required();
    cmd_census->add_option("--colors", census_colors, "number of colors")->check(CLI::Range(1, 12));
    cmd_census->add_flag("--emit-certificates", emit_certificates,
                         "include every candidate with its counterexample");

    int scenario_index = 1, tile_bound = 3, color_bound = 6;
    auto* cmd_minpot = app.add_subcommand("minpot", "minimum pot size and color count for a graph");
    cmd_minpot->add_option("graph", graph_file, "graph JSON file")->required();
    cmd_minpot->add_option("--scenario", scenario_index, "scenario index 1..3")
        ->check(CLI::Range(1, 3));
    cmd_minpot->add_option("--tile-bound", tile_bound, "largest pot size searched")
        ->check(CLI::PositiveNumber);
    cmd_minpot->add_option("--color-bound", color_bound, "largest color count searched")
        ->check(CLI::PositiveNumber);

    std::string catalog_name;
    bool catalog_list = false;
    auto* cmd_catalog = app.add_subcommand("catalog", "built-in graph catalogs");
    cmd_catalog->add_option("name", catalog_name, "cube | cubic8")->required();
    cmd_catalog->add_flag("--list", catalog_list, "list canonical encodings only");

    bool verify_json = false;
    std::string data_dir, only;
    uint64_t seed = 0x5eed5eedULL;
    int property_cases = 1000;
    double budget_scale = 1.0;
    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");
    cmd_verify->add_option("--data-dir", data_dir, "directory with cube.json/p1.json/p2.json");
    cmd_verify->add_option("--seed", seed, "seed for the randomized suites");
    cmd_verify->add_option("--cases", property_cases, "cases per randomized suite")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--only", only, "run only checks whose id contains this substring");
    cmd_verify->add_option("--budget-scale", budget_scale,
                           "multiplier for runtime budgets (instrumented builds)")
        ->check(CLI::PositiveNumber);

    std::string out_dir;
    auto* cmd_data = app.add_subcommand("data", "write the bundled data files");
    cmd_data->add_option("--out-dir", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kInputError;
    }

    try {
        if (cmd_realize->parsed()) {
            potlab::Multigraph g = potlab::multigraph_from_json(potlab::parse_file(graph_file));
            potlab::Pot p = potlab::pot_from_json(potlab::parse_file(pot_file));
            potlab::RealizeOptions opts;
            opts.require_all_colors = strict_colors;
            auto witness = potlab::realize(g, p, opts);
            if (!witness) {
                std::cout << "unrealizable\n";
                return kNegative;
            }
            emit(potlab::to_json(*witness), pretty);
            return kOk;
        }
        if (cmd_scenario->parsed()) {
            potlab::Multigraph g = potlab::multigraph_from_json(potlab::parse_file(graph_file));
            potlab::Pot p = potlab::pot_from_json(potlab::parse_file(pot_file));
            potlab::ScenarioFlags flags = potlab::classify_scenarios(g, p);
            emit(potlab::to_json(flags), pretty);
            return flags.realized ? kOk : kNegative;
        }
        if (cmd_outputs->parsed()) {
            potlab::Pot p = potlab::pot_from_json(potlab::parse_file(pot_file));
            potlab::OutputOptions opts;
            opts.allow_loops = !no_loops;
            opts.allow_multiedges = !no_multiedges;
            Json j = Json::array();
            for (const potlab::OutputClass& oc : potlab::enumerate_outputs(p, max_order, opts))
                j.push_back(potlab::to_json(oc));
            emit(j, pretty);
            return kOk;
        }
        if (cmd_spectrum->parsed()) {
            potlab::Pot p = potlab::pot_from_json(potlab::parse_file(pot_file));
            Json j;
            j["system"] = potlab::to_json(potlab::build_system(p));
            j["tiles"] = potlab::to_json(p);
            j["solutions"] = potlab::to_json(potlab::minimal_solutions(p, spectrum_max));
            Json mo = potlab::to_json(potlab::min_order(p, spectrum_bound));
            for (auto& [k, v] : mo.items()) j[k] = v;
            emit(j, pretty);
            return kOk;
        }
        if (cmd_potiso->parsed()) {
            potlab::Pot p = potlab::pot_from_json(potlab::parse_file(pot_file));
            potlab::Pot q = potlab::pot_from_json(potlab::parse_file(pot_file2));
            auto maps = potlab::pot_isomorphisms(p, q);
            Json j;
            j["isomorphic"] = !maps.empty();
            Json list = Json::array();
            for (const potlab::PotIsomorphism& f : maps) {
                Json m;
                m["colors"] = f.from().colors();
                m["images"] = f.images();
                list.push_back(std::move(m));
            }
            j["maps"] = std::move(list);
            emit(j, pretty);
            return maps.empty() ? kNegative : kOk;
        }
        if (cmd_census->parsed()) {
            if (census_target != "cube") {
                std::cerr << "only the cube census is supported\n";
                return kInputError;
            }
            potlab::CensusReport report = potlab::census_cube(census_colors, threads);
            emit(potlab::to_json(report, emit_certificates), pretty);
            return kOk;
        }
        if (cmd_minpot->parsed()) {
            potlab::Multigraph g = potlab::multigraph_from_json(potlab::parse_file(graph_file));
            potlab::ExtremalStats stats =
                potlab::minimal_pot_stats(g, scenario_index, tile_bound, color_bound);
            emit(potlab::to_json(stats), pretty);
            return stats.min_tiles ? kOk : kNegative;
        }
        if (cmd_catalog->parsed()) {
            if (catalog_name == "cube") {
                emit(potlab::to_json(potlab::cube()), pretty);
                return kOk;
            }
            if (catalog_name == "cubic8") {
                Json j = Json::array();
                for (const potlab::Multigraph& g : potlab::catalog_cubic8()) {
                    if (catalog_list) {
                        j.push_back(potlab::canonical_form(g).to_string());
                    } else {
                        Json rec;
                        rec["canonical"] = potlab::canonical_form(g).to_string();
                        rec["graph"] = potlab::to_json(g);
                        rec["bipartite"] = potlab::is_bipartite(g);
                        j.push_back(std::move(rec));
                    }
                }
                emit(j, pretty);
                return kOk;
            }
            std::cerr << "unknown catalog: " << catalog_name << "\n";
            return kInputError;
        }
        if (cmd_verify->parsed()) {
            potlab::VerifyOptions opts;
            opts.seed = seed;
            opts.threads = threads;
            opts.property_cases = property_cases;
            opts.budget_scale = budget_scale;
            if (!data_dir.empty()) opts.data_dir = data_dir;
            if (!only.empty()) opts.only = only;
            potlab::VerificationReport report = potlab::verify_all(opts);
            if (verify_json) {
                Json j;
                j["pass"] = report.pass;
                j["total_ms"] = report.total_ms;
                Json checks = Json::array();
                for (const potlab::CheckResult& c : report.checks) {
                    Json cj;
                    cj["id"] = c.id;
                    cj["label"] = c.label;
                    cj["expected"] = c.expected;
                    cj["computed"] = c.computed;
                    cj["pass"] = c.pass;
                    cj["ms"] = c.ms;
                    checks.push_back(std::move(cj));
                }
                j["checks"] = std::move(checks);
                emit(j, pretty);
            } else {
                for (const potlab::CheckResult& c : report.checks)
                    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  (" << c.computed
                              << ", " << static_cast<long long>(c.ms) << " ms)\n";
                std::cout << (report.pass ? "all checks passed" : "CHECKS FAILED") << "\n";
            }
            return report.pass ? kOk : kNegative;
        }
        if (cmd_data->parsed()) {
            potlab::write_file(out_dir + "/cube.json", potlab::to_json(potlab::cube()), true);
            potlab::write_file(out_dir + "/p1.json", potlab::to_json(potlab::pot_p1()), true);
            potlab::write_file(out_dir + "/p2.json", potlab::to_json(potlab::pot_p2()), true);
            return kOk;
        }
    } catch (const potlab::ParseError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kInputError;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
