#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "../tools/cli_app.hpp"

#include <json.hpp>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = groupalg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) {
    return std::string(GROUPALG_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("decide subcommand") {
    auto res = run_cli({"decide", "--ring", "Z", fx("loop.json")});
    CHECK(res.code == 0);
    CHECK(res.out.find("noetherian: yes") != std::string::npos);
    CHECK(res.out.find("artinian: no") != std::string::npos);
    CHECK(res.out.find("M_1(Laurent:Z)") != std::string::npos);
}

TEST_CASE("verify-iso subcommand") {
    auto res = run_cli({"verify-iso", "--ring", "Q", "--bound", "3", fx("a3.json")});
    CHECK(res.code == 0);
    CHECK(res.out.find("pass") != std::string::npos);

    auto bad = run_cli({"verify-iso", "--ring", "Q", fx("loop_with_exit.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("error: domain:", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
    auto res = run_cli({"decide", "--ring", "Zmod", fx("loop.json")});
    CHECK(res.code == 2);
    CHECK(res.err.rfind("error: parse:", 0) == 0);

    auto missing = run_cli({"decide", fx("loop.json")});
    CHECK(missing.code == 2);
    CHECK(missing.err.rfind("error: usage:", 0) == 0);

    auto nofile = run_cli({"analyze", fx("no_such_file.json")});
    CHECK(nofile.code == 2);

    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("json output is byte-stable and well formed") {
    auto a = run_cli({"decide", "--ring", "Q", "--json", fx("a3.json")});
    auto b = run_cli({"decide", "--ring", "Q", "--json", fx("a3.json")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["noetherian"] == "yes");
    CHECK(doc["artinian"] == "yes");
    CHECK(doc["decomposition"][0]["size"] == 3);
    CHECK(doc["decomposition"][0]["ring"] == "Q");
    // rule tags from the verdict are embedded verbatim
    bool has_rule = false;
    for (const auto& r : doc["reasons"])
        has_rule = has_rule || r["rule"] == "hopkins-levitzki";
    CHECK(has_rule);

    auto an = run_cli({"analyze", "--json", fx("two_cycles.json")});
    auto adoc = nlohmann::json::parse(an.out);
    CHECK(adoc["discrete"] == true);
    CHECK(adoc["boundary_paths"].size() == 3);
}

TEST_CASE("oracle subcommands") {
    auto ideals = run_cli({"oracle", "left-ideals", "--ring", "Zmod:6", "--json"});
    CHECK(ideals.code == 0);
    auto doc = nlohmann::json::parse(ideals.out);
    CHECK(doc["ideal_count"] == 4);

    auto col = run_cli({"oracle", "column-module", "--ring", "Zmod:4", "--size", "2", "--pivot",
                        "1", "--json"});
    CHECK(col.code == 0);
    auto cdoc = nlohmann::json::parse(col.out);
    CHECK(cdoc["bijective"] == true);
    CHECK(cdoc["submodule_count"] == 3);

    auto bad = run_cli({"oracle", "left-ideals", "--ring", "Z"});
    CHECK(bad.code == 1); // infinite ring is a domain failure for the oracle

    auto unknown = run_cli({"oracle", "nonsense", "--ring", "Zmod:4"});
    CHECK(unknown.code == 2);
}

TEST_CASE("validate-groupoid subcommand") {
    auto good = run_cli({"validate-groupoid", fx("pair_groupoid.json")});
    CHECK(good.code == 0);
    CHECK(good.out.find("valid: yes") != std::string::npos);

    auto bad = run_cli({"validate-groupoid", fx("broken_groupoid.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("non-composable") != std::string::npos);

    auto malformed = run_cli({"decide", "--ring", "Q", fx("broken_groupoid.json")});
    CHECK(malformed.code == 2); // a groupoid document is not a graph
}

TEST_CASE("decompose subcommand") {
    auto res = run_cli({"decompose", "--ring", "Q", "--json", fx("loop_with_entry.json")});
    CHECK(res.code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["orbits"].size() == 1);
    CHECK(doc["orbits"][0]["matrix_ring"] == "M_2(Laurent:Q)");

    auto nond = run_cli({"decompose", "--ring", "Q", fx("infinite_emitter.json")});
    CHECK(nond.code == 1);
}

TEST_CASE("help exits cleanly") {
    auto res = run_cli({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("analyze") != std::string::npos);
}
