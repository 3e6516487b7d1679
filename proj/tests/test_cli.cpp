#include <string>

#include "doctest.h"
#include "planarlim/cli.hpp"

using namespace planarlim;

namespace {

RunConfig config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    return cfg;
}

bool has_row(const Json& rows, const std::string& monomial, const std::string& coefficient) {
    for (const Json& row : rows)
        if (row.at("monomial") == monomial && row.at("coefficient") == coefficient) return true;
    return false;
}

}  // namespace

TEST_CASE("numbers parse exactly") {
    CHECK(parse_number("3/8") == Rat(3, 8));
    CHECK(parse_number("-3") == Rat(-3));
    CHECK(parse_number("0.01") == Rat(1, 100));
    CHECK(parse_number("1e-2") == Rat(1, 100));
    CHECK(parse_number("-2.5E1") == Rat(-25));
    CHECK_THROWS(parse_number("x"));
}

TEST_CASE("series command") {
    RunConfig cfg = config("series");
    cfg.weight_cap = 10;
    Json doc = cmd_series(cfg);
    CHECK(has_row(doc.at("F0"), "a_10", "21/5"));

    cfg.weight_cap = 0;
    doc = cmd_series(cfg);
    CHECK(doc.at("R").size() == 1);
    CHECK(has_row(doc.at("R"), "1", "1"));
    CHECK(doc.at("S").empty());
    CHECK(doc.at("F0").empty());

    cfg.weight_cap = 8;
    cfg.oracle = true;
    doc = cmd_series(cfg);
    CHECK(doc.at("oracle_all_match").get<bool>());
    for (const Json& row : doc.at("F0")) CHECK(row.at("oracle_match").get<bool>());
}

TEST_CASE("cap violations exit with status 2") {
    RunConfig cfg = config("series");
    cfg.weight_cap = kSeriesCapLimit + 1;
    CHECK(run_command(cfg).exit_code == 2);
    cfg.weight_cap = 10;
    cfg.oracle = true;
    RunOutcome out = run_command(cfg);
    CHECK(out.exit_code == 2);
    CHECK(out.error == "oracle cap exceeded");

    RunConfig ex = config("extreme");
    ex.kind = "edge-all";
    ex.t_cap = kExtremeTCapLimit + 1;
    CHECK(run_command(ex).exit_code == 2);

    RunConfig orc = config("oracle");
    orc.weight_cap = 9;
    CHECK(run_command(orc).exit_code == 2);
    orc.extended = true;
    orc.weight_cap = 11;
    CHECK(run_command(orc).exit_code == 2);

    RunConfig bad = config("extreme");
    bad.kind = "no-such-kind";
    CHECK(run_command(bad).exit_code == 1);
}

TEST_CASE("extreme command") {
    RunConfig cfg = config("extreme");
    cfg.kind = "edge-all";
    cfg.t_cap = 7;
    Json doc = cmd_extreme(cfg);
    CHECK(doc.at("series") == Json::array({"1", "9/4", "9", "189/4", "1458/5", "8019/4", "104247/7"}));
    CHECK(doc.at("table").size() == 20);

    cfg.kind = "face-all";
    cfg.t_cap = 6;
    doc = cmd_extreme(cfg);
    CHECK(doc.at("series") == Json::array({"7/6", "109/8", "15631/60", "256629/40", "38720767/210", "658811733/112"}));
    CHECK(doc.at("recurrence").is_null());

    cfg.kind = "edge-even";
    cfg.fn = 4;
    cfg.format = Format::Text;
    CHECK(render(cfg, cmd_extreme(cfg)) == "7\n");
}

TEST_CASE("asymptotics command") {
    RunConfig cfg = config("asymptotics");
    cfg.kind = "edge-all";
    cfg.corrections = 2;
    Json doc = cmd_asymptotics(cfg);
    CHECK(doc.at("rate").at("exact") == "12");
    CHECK(doc.at("exponent") == "-7/2");
    CHECK(doc.at("K").at("exact") == "1");
    CHECK(doc.at("corrections").at(0).at("exact") == "-25/8");
    CHECK(doc.at("comparison").size() == 3);

    cfg.kind = "face-all";
    doc = cmd_asymptotics(cfg);
    CHECK(doc.at("t0").at("decimal").get<std::string>().rfind("1.80827901833", 0) == 0);

    cfg.kind = "mixed34-edge";
    doc = cmd_asymptotics(cfg);
    CHECK(doc.at("t0").at("decimal").get<std::string>().rfind("2.094195368", 0) == 0);
    CHECK(doc.at("rate").at("decimal").get<std::string>().rfind("4.775103675", 0) == 0);
}

TEST_CASE("equilibrium command") {
    RunConfig cfg = config("equilibrium");
    cfg.a2 = Rat(1);
    cfg.a4 = Rat(1);
    Json doc = cmd_equilibrium(cfg);
    // c^2 = (-1 + sqrt 13) / 6.
    CHECK(doc.at("c_squared").get<std::string>().rfind("4.34258545910664882186536877911749", 0) == 0);
    CHECK(doc.at("support_ok").get<bool>());
    CHECK(doc.at("density").size() == 33);

    cfg.a2 = Rat(-3);
    CHECK_FALSE(cmd_equilibrium(cfg).at("support_ok").get<bool>());

    RunConfig g = config("equilibrium");
    g.gaussian = true;
    g.samples = 0;
    CHECK(cmd_equilibrium(g).at("I_V").get<std::string>().rfind("7.500000000000000000", 0) == 0);

    RunConfig both = config("equilibrium");
    both.gaussian = true;
    both.a4 = Rat(1);
    CHECK(run_command(both).exit_code == 1);
}

TEST_CASE("oracle command") {
    RunConfig cfg = config("oracle");
    cfg.weight_cap = 4;
    Json doc = cmd_oracle(cfg);
    bool torus = false;
    for (const Json& row : doc.at("counts"))
        if (row.at("monomial") == "a_4" && row.at("genus") == 1) torus = row.at("count") == "1/4";
    CHECK(torus);
}

TEST_CASE("output is deterministic and renders in every format") {
    RunConfig cfg = config("extreme");
    cfg.kind = "edge-min2";
    cfg.t_cap = 5;
    RunOutcome a = run_command(cfg), b = run_command(cfg);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    cfg.format = Format::Csv;
    std::string csv = run_command(cfg).output;
    CHECK(csv.rfind("n,f_n,decimal\n1,1/2,", 0) == 0);
    cfg.format = Format::Text;
    CHECK(run_command(cfg).output.find("kind: edge-min2") != std::string::npos);

    RunConfig series = config("series");
    series.weight_cap = 4;
    series.format = Format::Text;
    std::string text = run_command(series).output;
    CHECK(text.find("1/2 · a_4") != std::string::npos);
}

TEST_CASE("verify command reports selected criteria") {
    RunConfig cfg = config("verify");
    cfg.criteria = {3, 12};
    Json doc = cmd_verify(cfg);
    CHECK(doc.at("total") == 2);
    CHECK(doc.at("passed") == 2);
    cfg.criteria = {13};
    CHECK(run_command(cfg).exit_code == 2);
}
