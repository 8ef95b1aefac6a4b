#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "vdcat/cli.hpp"

using namespace vdcat;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "vdcat");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(VDCAT_FIXTURE_DIR) + "/" + name; }

std::string strip_elapsed(const std::string& s) {
    return std::regex_replace(s, std::regex("\"elapsed_ms\": [0-9.eE+-]+"), "\"elapsed_ms\": 0");
}

bool single_line(const std::string& s) {
    return !s.empty() && s.back() == '\n' && s.find('\n') == s.size() - 1;
}

}  // namespace

TEST_CASE("torus reports") {
    const auto r = invoke({"torus", "--n", "3", "--x", "1,2,3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["euler_characteristic"] == 12);
    CHECK(j["homology_euler_characteristic"] == 12);
    CHECK(j["determinant"] == 12);
    CHECK(j["agree"] == true);
    CHECK(j["s"] == std::vector<int>{1, 2, 3});

    const auto neg = invoke({"torus", "--n", "2", "--x", "2,1", "--json"});
    REQUIRE(neg.code == 0);
    const auto jn = nlohmann::json::parse(neg.out);
    CHECK(jn["euler_characteristic"] == -2);
    CHECK(jn["homology_dims"] == std::vector<int>{0, 2});
    CHECK(jn["cochain_dims"] == std::vector<int>{2, 4});

    const auto table = invoke({"torus", "--n", "2", "--x", "1,2"});
    CHECK(table.code == 0);
    CHECK(table.out.find("agree           yes") != std::string::npos);
}

TEST_CASE("report fields appear in a fixed order") {
    const auto r = invoke({"torus", "--n", "2", "--x", "1,2", "--json"});
    const auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "n", "x", "s", "cochain_dims", "homology_dims",
                                           "euler_characteristic", "homology_euler_characteristic", "determinant",
                                           "agree", "elapsed_ms"});
}

TEST_CASE("reports are stable apart from timing") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"torus", "--n", "3", "--x", "2,3,1", "--json"},
             {"matrix", "--file", fixture("m2345.json"), "--json"},
             {"zmap", "--file", fixture("slide.json"), "--json"}}) {
        const auto a = invoke(args), b = invoke(args);
        REQUIRE(a.code == 0);
        CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
    }
}

TEST_CASE("skip homology") {
    const auto r = invoke({"torus", "--n", "5", "--x", "1,2,3,4,5", "--skip-homology", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["homology_dims"].is_null());
    CHECK(j["euler_characteristic"] == 34560);
    CHECK(j["agree"] == true);
}

TEST_CASE("diagram and matrix commands") {
    const auto d = invoke({"diagram", "--file", fixture("torus2.json"), "--x", "1,2", "--json"});
    REQUIRE(d.code == 0);
    CHECK(nlohmann::json::parse(d.out)["euler_characteristic"] == 2);

    const auto mixed = invoke({"diagram", "--file", fixture("mixed3.json"), "--x", "1,2,3", "--json"});
    REQUIRE(mixed.code == 0);
    CHECK(nlohmann::json::parse(mixed.out)["agree"] == true);

    const auto ones = invoke({"matrix", "--file", fixture("ones2.json"), "--json"});
    REQUIRE(ones.code == 0);
    const auto j = nlohmann::json::parse(ones.out);
    CHECK(j["euler_characteristic"] == 0);
    CHECK(j["determinant"] == 0);
    CHECK(j["cochain_dims"] == std::vector<int>{1, 1});

    const auto m = invoke({"matrix", "--file", fixture("m2345.json"), "--json"});
    REQUIRE(m.code == 0);
    CHECK(nlohmann::json::parse(m.out)["euler_characteristic"] == -2);
}

TEST_CASE("zmap command") {
    const auto r = invoke({"zmap", "--file", fixture("identity12.json"), "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["commutes"] == true);
    CHECK(j["source_homology_dims"] == std::vector<int>{2, 0});
    CHECK(j["induced_maps"][0] == std::vector<std::string>{"10", "01"});

    const auto slide = invoke({"zmap", "--file", fixture("slide.json"), "--diagram", fixture("torus2.json")});
    CHECK(slide.code == 0);
    CHECK(slide.out.find("commutes yes") != std::string::npos);
}

TEST_CASE("input errors exit with one diagnostic line") {
    const std::vector<std::vector<std::string>> cases = {
        {"torus", "--n", "3", "--x", "1,2"},
        {"torus", "--n", "2", "--x", "1,0"},
        {"torus", "--n", "2", "--x", "a,b"},
        {"torus", "--n", "4", "--x", "2,3,5,7"},
        {"torus", "--n", "7", "--x", "1,1,1,1,1,1,1", "--skip-homology"},
        {"matrix", "--file", fixture("missing.json")},
        {"matrix", "--file", fixture("ragged.json")},
        {"diagram", "--file", fixture("open.json"), "--x", "1"},
        {"zmap", "--file", fixture("backwards.json")},
        {"torus", "--x", "1,2"},
        {"bogus"},
        {},
    };
    for (const auto& args : cases) {
        const auto r = invoke(args);
        const std::string label = args.empty() ? std::string("<none>") : args[0];
        INFO(label);
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK(single_line(r.err));
    }
}

TEST_CASE("budget override") {
    const auto r = invoke({"torus", "--n", "2", "--x", "2,2", "--budget", "15"});
    CHECK(r.code == 1);
    CHECK(invoke({"torus", "--n", "2", "--x", "2,2", "--budget", "16"}).code == 0);
}

TEST_CASE("exit status follows agreement") {
    HomologyReport r;
    r.n = 1;
    r.euler_characteristic = 1;
    CHECK(exit_status(r) == kExitOk);
    r.determinant = 1;
    r.agree = true;
    CHECK(exit_status(r) == kExitOk);
    r.determinant = 2;
    r.agree = false;
    CHECK(exit_status(r) == kExitMismatch);
    CHECK(report_json(r, "torus").find("\"agree\": false") != std::string::npos);
}

TEST_CASE("check command") {
    const auto r = invoke({"check", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["passed"] == true);
}

TEST_CASE("large integers are written as strings") {
    HomologyReport r;
    r.n = 1;
    r.euler_characteristic = BigInt("123456789012345678901234567890");
    const auto j = nlohmann::json::parse(report_json(r, "torus"));
    CHECK(j["euler_characteristic"] == "123456789012345678901234567890");
}

TEST_CASE("run reports through the config interface") {
    RunConfig c;
    c.command = Command::torus;
    c.n = 2;
    c.x = ColorVector({1, 2});
    c.format = OutputFormat::structured;
    const auto r = run(c);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.diagnostic.empty());
    c.x = ColorVector({1, 2, 3});
    const auto bad = run(c);
    CHECK(bad.exit_code == kExitInputError);
    CHECK(bad.output.empty());
}
