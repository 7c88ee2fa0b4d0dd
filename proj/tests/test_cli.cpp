#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "dehnkit/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dehnkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Example matrices written once by the examples command.
const fs::path& example_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "dehnkit_cli_tests";
        Run r = run({"examples", "--write", d.string()});
        REQUIRE(r.code == 0);
        return d;
    }();
    return dir;
}

std::string example(const char* name) { return (example_dir() / name).string(); }
std::string data(const char* name) { return (fs::path(DEHNKIT_TEST_DATA) / name).string(); }

}  // namespace

TEST_CASE("examples self-verify") {
    Run r = run({"examples"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j["command"] == "examples");
    CHECK(j["verdicts"]["all_verified"] == true);
    CHECK(j["results"]["v2788"]["closure_order"] == 48);
    CHECK(j["version"] == dehnkit::cli::kVersion);
}

TEST_CASE("classify the worked matrices") {
    Run b = run({"classify", "--matrix", example("v2788_b.json"), "--tau", "sqrt(-2)"});
    REQUIRE(b.code == 0);
    json jb = b.report()["results"];
    CHECK(jb["type"] == "III");
    CHECK(jb["min_poly"] == "x^2+1");
    CHECK(jb["template"] == "III/x^2+1/A1:x^2+1/2");
    CHECK(jb["field_D"] == -2);
    CHECK(jb["primary"]["aut_necessary"] == "RootsOfUnity");

    Run m = run({"classify", "--matrix", example("v2788_m.json"), "--tau", "sqrt(-2)"});
    REQUIRE(m.code == 0);
    json jm = m.report()["results"];
    CHECK(jm["min_poly"] == "x^2-x+1");
    CHECK(jm["template"] == "III/x^2-x+1/A1:x^2-x+3/4");
    CHECK(jm["finite_order"] == 6);
}

TEST_CASE("group build and presentation") {
    Run r = run({"group", "--scenario", "sqrt2_III", "--verify"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j["results"]["order"] == 48);
    CHECK(j["results"]["census"]["III"] == 40);
    CHECK(j["verdicts"]["presentation_as_stated"] == "fail");

    Run g = run({"group", "--generators", example("v2788_generators.json"), "--verify", "--kind", "sqrt2"});
    REQUIRE(g.code == 0);
    CHECK(g.report()["results"]["order"] == 48);
}

TEST_CASE("symmetry set through the CLI") {
    Run r = run({"symmetry", "--scenario", "TypeI_II", "--field", "-3", "--pair", "5/7,3/11"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j["results"]["count"] == 18);
    CHECK(j["results"]["bound"] == 18);
    CHECK(j["verdicts"]["within_bound"] == true);
    Run c = run({"symmetry", "--scenario", "TypeI_II", "--field", "-1", "--pair", "5/7,3/11", "--c22-nonzero"});
    REQUIRE(c.code == 0);
    CHECK(c.report()["results"]["count"] == 6);
}

TEST_CASE("dependent subcommands") {
    Run o = run({"dependent", "orbit", "--mode", "SGI", "--field", "-3", "--pair", "5/7,3/11", "--sigma1", "0,-1;1,-1",
                 "--sigma2", "0,-1;1,-1"});
    REQUIRE(o.code == 0);
    CHECK(o.report()["results"]["size"] == 9);
    CHECK(o.report()["command"] == "dependent orbit");
    Run c = run({"dependent", "check", "--A", "1,0;0,1", "--B", "1,0;0,1", "--tau", "sqrt(-1)", "--c40", "1", "--c04", "1"});
    REQUIRE(c.code == 0);
    CHECK(c.report()["results"]["holds"] == true);
    Run bad = run({"dependent", "orbit", "--mode", "SGI", "--field", "-3", "--pair", "5/7,3/11", "--sigma1", "0,-1;1,0",
                   "--sigma2", "0,-1;1,-1"});
    CHECK(bad.code == dehnkit::cli::kInputError);
    CHECK(bad.report()["error"]["kind"] == "OrderMismatch");
}

TEST_CASE("funceq through the CLI") {
    Run r = run({"funceq", "--primary", "1/2,1;3/4,-1/2", "--degree", "3", "--a", "3/4"});
    REQUIRE(r.code == 0);
    json j = r.report()["results"];
    CHECK(j["kernel"]["dimension"] == 4);
    CHECK(j["filter"]["dimension"] == 1);
    CHECK(j["filter"]["basis"][0][0]["text"] == "u1^3+4/3*u1*u2^2");
    CHECK(r.report()["verdicts"]["kernel_verified"] == true);

    Run m = run({"funceq", "--matrix", example("v2788_m.json"), "--tau", "sqrt(-2)"});
    REQUIRE(m.code == 0);
    CHECK(m.report()["results"]["kernel"]["dimension"] == 2);

    Run d = run({"funceq", "--primary", "2,0;0,3"});
    REQUIRE(d.code == 0);
    CHECK(d.report()["results"]["kernel"]["dimension"] == 0);
}

TEST_CASE("error exit codes") {
    Run g = run({"classify", "--matrix", data("garbage.json")});
    CHECK(g.code == dehnkit::cli::kInputError);
    CHECK(g.report()["error"]["kind"] == "MalformedInput");
    CHECK(g.out.find("malformed rational") != std::string::npos);
    CHECK_FALSE(g.err.empty());

    CHECK(run({"classify", "--matrix", "/nonexistent/m.json"}).code == dehnkit::cli::kInputError);
    Run u = run({"frobnicate"});
    CHECK(u.code == dehnkit::cli::kInputError);
    CHECK(u.report()["error"]["kind"] == "UsageError");
    CHECK(run({"funceq", "--primary", "1/2,1;3/4,-1/2", "--degree", "4"}).code == dehnkit::cli::kInputError);

    Run cap = run({"group", "--scenario", "sqrt3_III", "--cap", "10"});
    CHECK(cap.code == dehnkit::cli::kComputeError);
    CHECK(cap.report()["error"]["kind"] == "CapExceeded");
    Run mis = run({"group", "--scenario", "sqrt3_III", "--field", "-7"});
    CHECK(mis.code == dehnkit::cli::kComputeError);
    CHECK(mis.report()["error"]["kind"] == "ScenarioMismatch");
    CHECK(run({"group", "--scenario", "sqrt3_III", "--cap", "ten"}).code == dehnkit::cli::kInputError);
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}).code == 0);
    Run v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(dehnkit::cli::kVersion) != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::string> args{"symmetry", "--scenario", "sqrt1_III_pair", "--pair", "5/7,3/11", "--apply-filters"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run s1 = run({"group", "--scenario", "sqrt3_III", "--list", "--summary"});
    Run s2 = run({"group", "--scenario", "sqrt3_III", "--list", "--summary"});
    CHECK(s1.out == s2.out);
    CHECK(s1.out.rfind("dehnkit ", 0) == 0);
    CHECK(s1.out.find("order: 72") != std::string::npos);
}
