#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "potlab/io.hpp"

using namespace potlab;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(POTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/potlab_cli_") + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("realize exit codes and witness round trip") {
    const std::string data = POTLAB_DATA_DIR;

    RunResult ok = run_cli("realize " + data + "/cube.json " + data + "/p1.json");
    CHECK(ok.exit_code == 0);
    Json witness = Json::parse(ok.out);
    EdgeColoring coloring = coloring_from_json(witness["coloring"]);
    CHECK(coloring.induced_pot() == pot_p1());

    write_text(temp_path("triangle.json"), "{\"order\":3,\"edges\":[[0,1],[1,2],[2,0]]}");
    RunResult neg = run_cli("realize " + temp_path("triangle.json") + " " + data + "/p1.json");
    CHECK(neg.exit_code == 1);
    CHECK(neg.out.find("unrealizable") != std::string::npos);

    write_text(temp_path("broken.json"), "{\"order\": 3, \"edges\": [[0,");
    RunResult bad = run_cli("realize " + temp_path("broken.json") + " " + data + "/p1.json");
    CHECK(bad.exit_code == 2);

    RunResult missing = run_cli("realize /tmp/definitely_missing_file.json " + data + "/p1.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("bundled data files parse to the library values") {
    const std::string data = POTLAB_DATA_DIR;
    CHECK(multigraph_from_json(parse_file(data + "/cube.json")) == cube());
    CHECK(pot_from_json(parse_file(data + "/p1.json")) == pot_p1());
    CHECK(pot_from_json(parse_file(data + "/p2.json")) == pot_p2());
}

TEST_CASE("spectrum output") {
    const std::string data = POTLAB_DATA_DIR;
    RunResult r = run_cli("spectrum " + data + "/p1.json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["min_order"] == 8);
    CHECK(j["solutions"]["generators"] == Json::parse("[[1,1,1,1,2,2]]"));
}

TEST_CASE("pot-iso answers") {
    const std::string data = POTLAB_DATA_DIR;
    RunResult diff = run_cli("pot-iso " + data + "/p1.json " + data + "/p2.json");
    CHECK(diff.exit_code == 1);
    CHECK(Json::parse(diff.out)["isomorphic"] == false);

    RunResult same = run_cli("pot-iso " + data + "/p1.json " + data + "/p1.json");
    CHECK(same.exit_code == 0);
    CHECK(Json::parse(same.out)["isomorphic"] == true);
}

TEST_CASE("catalog listing") {
    RunResult r = run_cli("catalog cubic8 --list");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.size() == 5);
}

TEST_CASE("scenario command") {
    const std::string data = POTLAB_DATA_DIR;
    RunResult r = run_cli("scenario " + data + "/cube.json " + data + "/p2.json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["realized"] == true);
    CHECK(j["scenario2"] == true);
    CHECK(j["scenario3"] == true);
}

TEST_CASE("verify with tampered data fails the identity check") {
    const std::string data = POTLAB_DATA_DIR;
    // copy the data dir with a damaged p1.json (one value dropped from a tile)
    std::string dir = temp_path("tampered");
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    REQUIRE(std::system(("cp " + data + "/cube.json " + dir + "/cube.json").c_str()) == 0);
    REQUIRE(std::system(("cp " + data + "/p2.json " + dir + "/p2.json").c_str()) == 0);
    Json p1 = to_json(pot_p1());
    p1[4] = Json::array({-1, 3});  // color 5 deleted from one tile
    write_file(dir + "/p1.json", p1, false);

    RunResult good = run_cli("verify --only data --data-dir " + data + " --json");
    CHECK(good.exit_code == 0);
    CHECK(Json::parse(good.out)["pass"] == true);

    RunResult bad = run_cli("verify --only data --data-dir " + dir + " --json");
    CHECK(bad.exit_code == 1);
    Json report = Json::parse(bad.out);
    CHECK(report["pass"] == false);
    bool p1_failed = false;
    for (const Json& c : report["checks"])
        if (c["id"] == "data-p1" && c["pass"] == false) p1_failed = true;
    CHECK(p1_failed);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);                      // missing subcommand
    CHECK(run_cli("realize onlyone.json").exit_code == 2);  // missing argument
    CHECK(run_cli("frobnicate x").exit_code == 2);          // unknown subcommand
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("census dodecahedron").exit_code == 2);
}

TEST_CASE("verify --json emits the reporting schema") {
    RunResult r = run_cli("verify --only c5 --json");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.contains("pass"));
    CHECK(j.contains("checks"));
    for (const Json& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("label"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("ms"));
    }
}

TEST_CASE("json output is byte-stable for golden diffs") {
    const std::string data = POTLAB_DATA_DIR;
    RunResult a = run_cli("catalog cube");
    RunResult b = run_cli("catalog cube");
    CHECK(a.out == b.out);
    CHECK(a.out == to_json(cube()).dump() + "\n");

    // regenerated data files are byte-identical to the bundled ones
    std::string dir = temp_path("regen");
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    RunResult gen = run_cli("data --out-dir " + dir);
    REQUIRE(gen.exit_code == 0);
    for (const char* name : {"cube.json", "p1.json", "p2.json"}) {
        std::ifstream fresh(dir + "/" + name), bundled(data + "/" + std::string(name));
        std::string s1((std::istreambuf_iterator<char>(fresh)), std::istreambuf_iterator<char>());
        std::string s2((std::istreambuf_iterator<char>(bundled)),
                       std::istreambuf_iterator<char>());
        CHECK(s1 == s2);
        CHECK(!s1.empty());
    }
}
