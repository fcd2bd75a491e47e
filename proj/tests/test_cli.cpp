#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "qsdd/cli.hpp"

using namespace qsdd;
using qsdd::cli::CommandConfig;

namespace {

std::vector<std::pair<Code, std::string>> parse_table(const std::string& out) {
    std::vector<std::pair<Code, std::string>> rows;
    std::istringstream lines(out);
    std::string line;
    while (std::getline(lines, line)) {
        auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        rows.push_back({code_from_string(line.substr(0, tab)), line.substr(tab + 1)});
    }
    return rows;
}

} // namespace

TEST_CASE("table command") {
    CommandConfig cfg;
    cfg.n = 0;
    auto r = cli::cmd_table(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "()\t1\n");

    cfg.n = 5;
    auto r5 = cli::cmd_table(cfg);
    auto rows = parse_table(r5.output);
    CHECK(rows.size() == 42);
    // spot row from the pinned table
    bool found = false;
    for (auto& [c, poly] : rows)
        if (c == Code{0, 1, 1}) {
            found = true;
            CHECK(poly == "x1*x2 + x1*x3 + x2*x3");
        }
    CHECK(found);
    // every emitted polynomial parses back to the forest polynomial of its code
    for (auto& [c, poly] : rows)
        CHECK(parse_poly(poly) == forest_polynomial(forest_of_code(c, MParam(1))));

    cfg.m = 2;
    cfg.n = 4;
    auto r24 = cli::cmd_table(cfg);
    CHECK(Int((long)parse_table(r24.output).size()) == raney_count(4, MParam(2)));
}

TEST_CASE("table json format") {
    CommandConfig cfg;
    cfg.n = 3;
    cfg.format = "json";
    auto r = cli::cmd_table(cfg);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 3);
    CHECK(j["rows"].size() == 5);
}

TEST_CASE("expand command") {
    CommandConfig cfg;
    cfg.basis = "fundamental";
    cfg.n = 3;
    cfg.input = "2*x1^2*x2+2*x1^2*x3+2*x2^2*x3+x1*x2^2+x1*x3^2+x2*x3^2";
    auto r = cli::cmd_expand(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "332: 1\n322: 2\n321: -3\n");

    CommandConfig forest;
    forest.basis = "forest";
    forest.input = "x2^2*x3";
    auto rf = cli::cmd_expand(forest);
    CHECK(rf.exit_code == 0);
    CHECK(rf.output == "(2,0,1): -1\n(1,1,1): -1\n(0,2,1): 1\n");

    forest.input = "0";
    CHECK(cli::cmd_expand(forest).output.empty());
    CHECK(cli::cmd_expand(forest).exit_code == 0);

    CommandConfig ldiff;
    ldiff.basis = "lambda-diff";
    ldiff.input = "1/2*l1^2 - l1*l2 + 1/2*l2^2";
    auto rl = cli::cmd_expand(ldiff);
    CHECK(rl.exit_code == 0);
    CHECK(rl.output == "(2): 1/2\n");
}

TEST_CASE("expand errors give usage exit code") {
    CommandConfig cfg;
    cfg.basis = "fundamental";
    cfg.n = 2;
    cfg.input = "x1";  // not quasisymmetric
    CHECK(cli::cmd_expand(cfg).exit_code == 2);

    cfg.basis = "forest";
    cfg.input = "x1 + + x2";
    CHECK(cli::cmd_expand(cfg).exit_code == 2);

    cfg.basis = "lambda-diff";
    cfg.input = "l1";
    CHECK(cli::cmd_expand(cfg).exit_code == 2);

    cfg.basis = "nope";
    cfg.input = "x1";
    CHECK(cli::cmd_expand(cfg).exit_code == 2);
}

TEST_CASE("reduce command") {
    CommandConfig cfg;
    cfg.n = 3;
    cfg.input = "x1*x2 + x1*x3 + x2*x3";  // quasisymmetric, so reduces to zero
    cfg.k = 1;
    auto r = cli::cmd_reduce(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "in_ideal(k=1): true\n");

    cfg.input = "x2";
    cfg.k = -1;
    auto r2 = cli::cmd_reduce(cfg);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "(1): -1\n(0,1): 1\n");
}

TEST_CASE("volume command") {
    CommandConfig cfg;
    cfg.input = "[0,1]";
    auto r = cli::cmd_volume(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "l2 - l3\n");
    cfg.m = 2;
    cfg.input = "[1]";
    CHECK(cli::cmd_volume(cfg).output == "l1 - l3\n");
    cfg.input = "[boom]";
    CHECK(cli::cmd_volume(cfg).exit_code == 2);
}

TEST_CASE("verify command exits by outcome") {
    CommandConfig cfg;
    cfg.suite = "coinv-dims";
    auto r = cli::cmd_verify(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);

    cfg.suite = "does-not-exist";
    CHECK(cli::cmd_verify(cfg).exit_code == 2);

    cfg.suite = "epsilon";
    cfg.max_size = 3;
    cfg.format = "json";
    auto rj = cli::cmd_verify(cfg);
    CHECK(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.output);
    CHECK(j["all_pass"] == true);
}

TEST_CASE("identical configuration gives byte-identical output") {
    CommandConfig table;
    table.n = 5;
    CHECK(cli::cmd_table(table).output == cli::cmd_table(table).output);

    CommandConfig verify;
    verify.suite = "nilhecke";
    verify.n = 4;
    verify.seed = 777;
    CHECK(cli::cmd_verify(verify).output == cli::cmd_verify(verify).output);

    CommandConfig expand;
    expand.basis = "forest";
    expand.input = "x1^2*x3 + 4*x2 - x1*x2*x3";
    CHECK(cli::cmd_expand(expand).output == cli::cmd_expand(expand).output);
}
