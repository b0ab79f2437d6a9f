#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "veerkit/cli.hpp"
#include "veerkit/corpus.hpp"

using veerkit::io::Json;

namespace {

struct Result {
    int code;
    std::string out;
    Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream os;
    int code = veerkit::cli::run(args, os);
    return {code, os.str()};
}

std::string corpus(const std::string& file) { return (veerkit::default_corpus_dir() / file).string(); }

std::filesystem::path scratch(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / ("veerkit_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("map commands") {
    auto v = run({"validate", corpus("figure8.map.json")});
    CHECK(v.code == 0);
    CHECK(v.json()["valid"] == true);

    CHECK(run({"veering", corpus("figure8.map.json")}).json()["verdict"] == "neither");
    CHECK(run({"veering", corpus("left_trefoil.map.json")}).json()["verdict"] == "left-veering");

    auto f = run({"fdtc", corpus("right_trefoil.map.json")}).json();
    CHECK(f.dump().find("\"den\":6") != std::string::npos);

    auto g = run({"glue-check", corpus("right_trefoil.map.json"), "--n", "1"});
    CHECK(g.code == 0);
    CHECK(g.json() == Json::parse(R"({"difference":2,"verdict":"right-veering"})"));

    auto canon = run({"canon", corpus("figure8.map.json")});
    std::ifstream in(corpus("figure8.map.json"));
    std::stringstream file;
    file << in.rdbuf();
    CHECK(canon.out == file.str());
}

TEST_CASE("knot complex commands") {
    CHECK(run({"cfk", "tau", corpus("right_trefoil.json")}).json()["tau"] == 1);
    CHECK(run({"cfk", "tau", corpus("left_trefoil.json")}).json()["tau"] == -1);
    auto b = run({"cfk", "b", corpus("right_trefoil.json")}).json();
    CHECK(b["b"] == "infinity");
    CHECK(b["top_d1_nonzero"] == false);
    CHECK(run({"cfk", "thin", corpus("t34.json")}).json()["thin"] == false);
    CHECK(run({"cfk", "genus", corpus("thin_genus2.json")}).json()["genus"] == 2);
    CHECK(run({"cfk", "validate", corpus("figure8.json")}).code == 0);

    auto out = std::filesystem::temp_directory_path() / "veerkit_test_mirror.json";
    CHECK(run({"cfk", "mirror", corpus("right_trefoil.json"), "-o", out.string()}).code == 0);
    CHECK(run({"cfk", "tau", out.string()}).json()["tau"] == -1);
    std::filesystem::remove(out);
}

TEST_CASE("classify and surgery commands") {
    auto c = run({"classify", corpus("figure8.json")}).json();
    CHECK(c["monodromy_verdict"] == "neither");
    CHECK(c["surgery_constraint"] == "|q|<=2");
    CHECK(c["persistently_foliar"] == true);

    auto audit = run({"classify", corpus("figure8.json"), "--monodromy", corpus("right_trefoil.map.json")});
    CHECK(audit.code == 0);
    CHECK(audit.json()["agree"] == false);

    auto s = run({"surgery", "top-minus-one", corpus("figure8.json"), "--n", "1", "--side", "+"});
    CHECK(s.json()["dim"] == 2);
    CHECK(run({"surgery", "check-yi", corpus("figure8.json")}).json()["holds"] == true);

    auto refused = run({"surgery", "check-yi", corpus("right_trefoil.json")});
    CHECK(refused.code == 1);
    CHECK(refused.json()["kind"] == "domain");
}

TEST_CASE("corpus check passes") {
    auto r = run({"corpus", "check"});
    CHECK(r.code == 0);
}

TEST_CASE("errors and exit codes") {
    auto bad = scratch("bad.json", "{\"generators\": [");
    auto r = run({"cfk", "tau", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.json()["error"].get<std::string>().find("byte") != std::string::npos);
    std::filesystem::remove(bad);

    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"cfk", "tau", "/nonexistent/file.json"}).code == 2);

    auto invalid = scratch("invalid.map.json",
                           R"({"circles":[{"id":"x","surface_boundary":false}],"pieces":[)"
                           R"({"id":"A","genus":1,"boundary":["x"],"kind":"Fixed"},)"
                           R"({"id":"B","genus":1,"boundary":["x"],"kind":"Fixed"}],"annuli":[],)"
                           R"("surface_boundary":[],"meta":{"genus":2,"boundary_count":0}})");
    auto v = run({"validate", invalid.string()});
    CHECK(v.code == 1);
    CHECK(v.json()["valid"] == false);
    std::filesystem::remove(invalid);
}

TEST_CASE("verify is deterministic under a seed") {
    auto a = run({"verify", "prop-symp", "--trials", "40", "--seed", "7"});
    auto b = run({"verify", "prop-symp", "--trials", "40", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.json()["failures"] == 0);
    auto inv = run({"verify", "inverse-symp", "--trials", "40", "--seed", "3"});
    CHECK(inv.code == 0);
    CHECK(inv.json()["failures"] == 0);
}

TEST_CASE("table format") {
    auto t = run({"cfk", "tau", corpus("figure8.json"), "--format", "table"});
    CHECK(t.code == 0);
    CHECK(t.out.find("tau\t0") != std::string::npos);
}
