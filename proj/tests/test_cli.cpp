// test_cli.cpp — end-to-end tests of the command-line binary: every
// subcommand, the documented exit codes, deterministic output, and the
// represent -> verify round trip.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pfrep/jsonio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace pfrep;

namespace {

struct RunResult {
    int code;
    std::string out;
};

// run the binary with the given arguments, capturing stdout (stderr dropped)
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + PFREP_BIN_PATH + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string data_file(const std::string& name) {
    return std::string(PFREP_DATA_DIR) + "/" + name;
}

std::string tmp_file(const std::string& name) {
    return "/tmp/pfrep_cli_" + std::to_string(getpid()) + "_" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// JSON encoding of a rational projective point, matching the writers
Json qpt(const std::vector<long>& v) {
    Json out = Json::array();
    for (long c : v) out.push_back(Json::array({rat_str(Rat(c))}));
    return out;
}

const char* kRunning = "\"x0*x1^2 + x1*x3^2 + x2^3\"";

} // namespace

TEST_CASE("represent then verify round-trips through files") {
    std::string rep = tmp_file("rep.json");
    RunResult r = run_cli(std::string("represent --cubic ") + kRunning +
                          " --point 1,0,0,0 -o " + rep);
    REQUIRE(r.code == 0);

    Json doc = Json::parse(slurp(rep));
    CHECK(doc["schema"] == "pfaffian-rep/1");
    CHECK(doc["kind"] == "irreducible");
    CHECK(doc["field_minpoly"].is_null());
    CHECK(doc["constant_c"].is_array());
    CHECK(doc["matrix"]["size"] == 6);
    REQUIRE(doc["matrix"]["entries"].size() == 6);
    CHECK(doc["frame_points"].size() == 5);
    CHECK(doc["cone_vertex"].is_null());
    CHECK(doc["provenance"].is_array());

    RunResult v = run_cli(std::string("verify --cubic ") + kRunning + " --matrix " + rep);
    CHECK(v.code == 0);
    Json vd = Json::parse(v.out);
    CHECK(vd["verified"] == true);

    // verification against a different surface fails with exit 2
    RunResult bad = run_cli(std::string("verify --cubic \"x0^3 + x1^3 + x2^3 + x3^3\" --matrix ") + rep);
    CHECK(bad.code == 2);

    // a tampered constant is caught
    Json forged = doc;
    forged["constant_c"] = Json::array({"7/1"});
    std::string forged_path = tmp_file("forged.json");
    std::ofstream(forged_path) << forged.dump() << "\n";
    RunResult f = run_cli(std::string("verify --cubic ") + kRunning + " --matrix " + forged_path);
    CHECK(f.code == 2);
}

TEST_CASE("output bytes are identical across runs") {
    std::string a = tmp_file("det_a.json"), b = tmp_file("det_b.json");
    REQUIRE(run_cli(std::string("represent --cubic ") + kRunning + " --point 1,0,0,0 -o " + a).code == 0);
    REQUIRE(run_cli(std::string("represent --cubic ") + kRunning + " --point 1,0,0,0 -o " + b).code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("pretty output parses to the same document") {
    RunResult compact = run_cli(std::string("classify --cubic ") + kRunning);
    RunResult pretty = run_cli(std::string("classify --cubic ") + kRunning + " --pretty");
    REQUIRE(compact.code == 0);
    REQUIRE(pretty.code == 0);
    CHECK(compact.out != pretty.out);
    CHECK(Json::parse(compact.out) == Json::parse(pretty.out));
}

TEST_CASE("an injected candidate list replays a recorded frame") {
    RunResult r = run_cli(std::string("represent --cubic ") + kRunning +
                          " --point 1,0,0,0 --inject-candidates " + data_file("paper42.json"));
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    REQUIRE(doc["frame_points"].size() == 5);
    CHECK(doc["frame_points"][0] == qpt({1, 0, 0, 0}));
    CHECK(doc["frame_points"][1] == qpt({0, 1, 0, 0}));
    CHECK(doc["frame_points"][2] == qpt({0, 1, -1, -1}));
    CHECK(doc["frame_points"][3] == qpt({10, -1, -1, 3}));
    CHECK(doc["frame_points"][4] == qpt({95, 1, -6, 11}));

    // the frame subcommand reproduces the same points
    RunResult fr = run_cli(std::string("frame --cubic ") + kRunning +
                           " --point 1,0,0,0 --inject-candidates " + data_file("paper42.json"));
    REQUIRE(fr.code == 0);
    Json fd = Json::parse(fr.out);
    CHECK(fd["frame_points"] == doc["frame_points"]);
    CHECK(!fd["provenance"].empty());
}

TEST_CASE("classification names every surface kind") {
    RunResult irr = run_cli(std::string("classify --cubic ") + kRunning);
    REQUIRE(irr.code == 0);
    CHECK(Json::parse(irr.out)["kind"] == "irreducible");

    RunResult cone = run_cli("classify --cubic \"x1^2*x2 - x0^3 + 2*x2^3\"");
    REQUIRE(cone.code == 0);
    Json cd = Json::parse(cone.out);
    CHECK(cd["kind"] == "cone");
    CHECK(cd["cone_vertex"] == qpt({0, 0, 0, 1}));

    RunResult tp = run_cli("classify --cubic \"2*x0*x1*x2\"");
    REQUIRE(tp.code == 0);
    Json td = Json::parse(tp.out);
    CHECK(td["kind"] == "three-planes");
    CHECK(td["planes"].size() == 3);

    RunResult pq = run_cli("classify --cubic \"x3*(x0*x1 - x2^2)\"");
    REQUIRE(pq.code == 0);
    Json pd = Json::parse(pq.out);
    CHECK(pd["kind"] == "plane-and-quadric");
    CHECK(pd["quadric"].is_object());
}

TEST_CASE("classification can start in a declared extension field") {
    RunResult r = run_cli(
        "classify --cubic \"x0^2*x2 - 2*x1^2*x2\" --field-minpoly \"t^2 - 2\"");
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["kind"] == "three-planes");
    CHECK(doc["field_minpoly"] == Json::array({"-2/1", "0/1", "1/1"}));
    CHECK(doc["planes"].size() == 3);
}

TEST_CASE("T-point queries answer true, false, and reject bad points") {
    RunResult t = run_cli("tpoint --cubic \"x0*x1*x3 + x2^3 + x2*x3^2\" --point 0,0,0,1");
    REQUIRE(t.code == 0);
    CHECK(Json::parse(t.out)["t_point"] == true);

    RunResult f = run_cli("tpoint --cubic \"x0^2*x3 + x0*x1*x2 + x1^3\" --point 1,1,1,-2");
    REQUIRE(f.code == 0);
    CHECK(Json::parse(f.out)["t_point"] == false);

    CHECK(run_cli(std::string("tpoint --cubic ") + kRunning + " --point 1,1,1,1").code == 2);
    CHECK(run_cli(std::string("tpoint --cubic ") + kRunning + " --point 1,0,0,0").code == 2);
}

TEST_CASE("surfaces load from polynomial text files and JSON coefficient maps") {
    std::string text_path = tmp_file("surface.txt");
    std::ofstream(text_path) << "# a cubic with one singular point\n"
                             << "x0*x1^2 + x1*x3^2 + x2^3\n";
    RunResult t = run_cli("classify --surface-file " + text_path);
    REQUIRE(t.code == 0);
    CHECK(Json::parse(t.out)["kind"] == "irreducible");

    std::string json_path = tmp_file("surface.json");
    std::ofstream(json_path)
        << R"({"coeffs": {"x0*x1^2": 1, "x1*x3^2": "1/1", "x2^3": [ "1/1" ]}})" << "\n";
    RunResult j = run_cli("classify --surface-file " + json_path);
    REQUIRE(j.code == 0);
    CHECK(Json::parse(j.out)["kind"] == "irreducible");
}

TEST_CASE("family selection still verifies") {
    std::string base = tmp_file("fam_base.json"), fam = tmp_file("fam_shift.json");
    REQUIRE(run_cli(std::string("represent --cubic ") + kRunning + " --point 1,0,0,0 -o " + base).code == 0);
    REQUIRE(run_cli(std::string("represent --cubic ") + kRunning +
                    " --point 1,0,0,0 --family 1,0,-2,0,3 -o " + fam)
                .code == 0);
    CHECK(slurp(base) != slurp(fam));
    CHECK(run_cli(std::string("verify --cubic ") + kRunning + " --matrix " + fam).code == 0);
}

TEST_CASE("exit codes separate invalid input from unsupported input") {
    CHECK(run_cli(std::string("represent --cubic ") + kRunning + " --point 1,1,1,1").code == 2);
    CHECK(run_cli("represent --cubic \"x0^2\"").code == 4);
    CHECK(run_cli("represent --cubic \"x0^3 + x1\"").code == 4);
    CHECK(run_cli("represent --cubic \"0\"").code == 4);
    CHECK(run_cli("represent --cubic \"x0*x1^2 + \"").code == 2); // parse error
    CHECK(run_cli(std::string("represent --cubic ") + kRunning + " --nonsense").code == 2);
    CHECK(run_cli("").code == 2);                    // a subcommand is required
    CHECK(run_cli("frame --cubic \"2*x0*x1*x2\"").code == 4); // no frame on three planes
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("an exhausted search reports exit 3 with its rejection trail") {
    RunResult r = run_cli("represent --cubic \"x0*x1*x3 + x2^3 + x2*x3^2\""
                          " --point 1,0,0,0 --cap 3 --inject-candidates " +
                          data_file("stop_candidates.json"));
    CHECK(r.code == 3);
    Json doc = Json::parse(r.out);
    CHECK(doc["schema"] == "pfaffian-rep/1");
    CHECK(doc.contains("error"));
    REQUIRE(doc["provenance"].is_array());
    CHECK(!doc["provenance"].empty());
    for (const Json& ev : doc["provenance"]) CHECK(ev["verdict"] != "accepted");
}
