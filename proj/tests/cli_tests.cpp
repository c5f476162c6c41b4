#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
using rps::test::CliResult;
using rps::test::run_cli;
using rps::test::slurp;

namespace {

std::string data_path(const std::string& name) {
  return std::string(RPS_TEST_DATA_DIR) + "/" + name;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

}  // namespace

TEST_CASE("table csv output matches the golden file byte for byte") {
  const CliResult result = run_cli("table 10 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.out == slurp(data_path("table1_golden.csv")));
  CHECK(result.err.empty());
}

TEST_CASE("table rows at the edges") {
  const CliResult one = run_cli("table 1 --format csv");
  CHECK(one.out == "N,H_max_SE,H_max_DE,H_max_RPS\n1,0.0000,0.0000,0.0000\n");

  const CliResult two = run_cli("table 2 --format csv");
  CHECK(lines_of(two.out).back() == "2,1.0000,2.3219,3.3219");

  const CliResult ten = run_cli("table 10 --format csv");
  CHECK(lines_of(ten.out).at(6) == "6,2.5850,9.3772,20.6691");
}

TEST_CASE("table respects base and format") {
  const CliResult base10 = run_cli("table 2 --format csv --base 10");
  CHECK(lines_of(base10.out).back() == "2,0.3010,0.6990,1.0000");

  const CliResult as_json = run_cli("table 3 --format json");
  const json rows = json::parse(as_json.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows.at(2).at("n") == 3);

  const CliResult plain = run_cli("table 2");
  CHECK(plain.out.find("H_max_RPS") != std::string::npos);
}

TEST_CASE("enumerate lists the event space in canonical order") {
  const CliResult rbg = run_cli("enumerate R B G");
  CHECK(rbg.exit_code == 0);
  const auto lines = lines_of(rbg.out);
  REQUIRE(lines.size() == 15);
  CHECK(lines.front() == "(R)");
  CHECK(lines.back() == "(G,B,R)");

  const CliResult single = run_cli("enumerate X");
  CHECK(single.out == "(X)\n");

  const CliResult with_empty = run_cli("enumerate X Y --include-empty");
  const auto five = lines_of(with_empty.out);
  REQUIRE(five.size() == 5);
  CHECK(five.front() == "()");
  CHECK(five.back() == "(Y,X)");

  const CliResult as_json = run_cli("enumerate X Y --format json");
  const json events = json::parse(as_json.out);
  CHECK(events == json::parse(R"([["X"],["Y"],["X","Y"],["Y","X"]])"));
}

TEST_CASE("enumerate rejects bad frames and oversize frames") {
  CHECK(run_cli("enumerate X X").exit_code == 2);

  const CliResult over = run_cli("enumerate a b c d e f g h i");
  CHECK(over.exit_code == 3);
  CHECK(over.err.find("--cap") != std::string::npos);

  const CliResult raised = run_cli("enumerate a b c d e f g h i --cap 9");
  CHECK(raised.exit_code == 0);
  CHECK(lines_of(raised.out).size() == 986409);
}

TEST_CASE("entropy reads files and stdin for each kind") {
  const CliResult rps_kind = run_cli("entropy " + data_path("eq24_pmf.json"));
  CHECK(rps_kind.exit_code == 0);
  CHECK(rps_kind.out == "6.8704\n");

  const CliResult deng_kind =
      run_cli("entropy " + data_path("eq23_mass.json") + " --kind deng");
  CHECK(deng_kind.exit_code == 0);
  CHECK(deng_kind.out == "4.2479\n");

  const CliResult from_stdin = run_cli(
      "entropy - --kind rps",
      R"({"elements":["X"],"pmf":[{"event":["X"],"mass":1.0}]})");
  CHECK(from_stdin.out == "0.0000\n");

  const CliResult shannon = run_cli(
      "entropy - --kind shannon",
      R"({"elements":["X","Y"],"pmf":[{"event":["X"],"mass":0.5},{"event":["Y"],"mass":0.5}]})");
  CHECK(shannon.out == "1.0000\n");
}

TEST_CASE("entropy failure modes use the validation exit code") {
  const CliResult bad_sum = run_cli(
      "entropy - --kind rps", R"({"elements":["X"],"pmf":[{"event":["X"],"mass":0.5}]})");
  CHECK(bad_sum.exit_code == 2);
  CHECK(bad_sum.err.find("sum") != std::string::npos);

  const CliResult not_json = run_cli("entropy - --kind rps", "pmf: nope");
  CHECK(not_json.exit_code == 2);

  const CliResult missing = run_cli("entropy /nonexistent/file.json");
  CHECK(missing.exit_code == 2);

  const CliResult renorm = run_cli(
      "entropy - --kind rps --renormalize",
      R"({"elements":["X"],"pmf":[{"event":["X"],"mass":0.5}]})");
  CHECK(renorm.exit_code == 0);
  CHECK(renorm.out == "0.0000\n");
}

TEST_CASE("entropy term breakdown") {
  const CliResult terms =
      run_cli("entropy " + data_path("eq24_pmf.json") + " --terms");
  const auto lines = lines_of(terms.out);
  REQUIRE(lines.size() == 16);
  CHECK(lines.front() == "6.8704");
  CHECK(lines.at(1).find("(R)\t") == 0);

  const CliResult as_json =
      run_cli("entropy " + data_path("eq24_pmf.json") + " --format json --terms");
  const json report = json::parse(as_json.out);
  CHECK(report.at("terms").size() == 15);
}

TEST_CASE("maxent prints table values") {
  CHECK(run_cli("maxent 10 --kind rps").out == "45.1699\n");
  CHECK(run_cli("maxent 1 --kind deng").out == "0.0000\n");
  CHECK(run_cli("maxent 3 --kind shannon").out == "1.5850\n");
  CHECK(run_cli("maxent 0").exit_code == 2);
}

TEST_CASE("maxent emits a reloadable distribution") {
  const CliResult emitted = run_cli("maxent 3 --kind rps --emit-distribution");
  CHECK(emitted.exit_code == 0);
  const json doc = json::parse(emitted.out);
  REQUIRE(doc.at("pmf").size() == 15);
  CHECK(doc.at("pmf").at(0).at("event") == json::array({"t1"}));
  CHECK(doc.at("pmf").at(0).at("mass").get<double>() ==
        doctest::Approx(1.0 / 117.0).epsilon(1e-15));
  CHECK(emitted.err == "6.8704\n");

  const CliResult reread = run_cli("entropy - --kind rps", emitted.out);
  CHECK(reread.out == "6.8704\n");

  const CliResult deng_doc = run_cli("maxent 2 --kind deng --emit-distribution");
  const CliResult deng_back = run_cli("entropy - --kind deng", deng_doc.out);
  CHECK(deng_back.out == "2.3219\n");

  const CliResult combined = run_cli("maxent 2 --kind rps --emit-distribution --format json");
  const json wrapped = json::parse(combined.out);
  CHECK(wrapped.at("value").get<double>() == doctest::Approx(3.3219).epsilon(1e-4));
  CHECK(wrapped.at("distribution").at("pmf").size() == 4);

  CHECK(run_cli("maxent 9 --kind rps --emit-distribution").exit_code == 3);
  CHECK(run_cli("maxent 9 --kind rps").exit_code == 0);
}

TEST_CASE("degenerate compares the collapsed maximum with its classical twin") {
  const CliResult order = run_cli("degenerate 2 --mode order-ignored");
  CHECK(order.exit_code == 0);
  const auto order_lines = lines_of(order.out);
  REQUIRE(order_lines.size() == 3);
  CHECK(order_lines.at(0).find("2.3219") != std::string::npos);
  CHECK(order_lines.at(1).find("2.3219") != std::string::npos);
  CHECK(order_lines.at(2) == "EQUAL");

  const CliResult singleton = run_cli("degenerate 2 --mode singleton-only");
  CHECK(singleton.out.find("1.0000") != std::string::npos);
  CHECK(singleton.out.find("EQUAL") != std::string::npos);

  const CliResult trivial = run_cli("degenerate 1 --mode order-ignored");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out.find("0.0000") != std::string::npos);

  const json doc = json::parse(run_cli("degenerate 3 --format json").out);
  CHECK(doc.at("equal") == true);
}

TEST_CASE("verify reports convergence and enforces the cap") {
  const CliResult three = run_cli("verify 3");
  CHECK(three.exit_code == 0);
  CHECK(three.out.find("converged: true") != std::string::npos);
  CHECK(three.out.find("OK") != std::string::npos);

  const CliResult one = run_cli("verify 1");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("entropy_gap: 0.000000e+00") != std::string::npos);

  CHECK(run_cli("verify 8").exit_code == 3);

  const json doc = json::parse(run_cli("verify 2 --format json").out);
  CHECK(doc.at("converged") == true);
  CHECK(doc.at("ok") == true);
  CHECK(doc.at("kkt_residual").get<double>() < 1e-5);
}

TEST_CASE("verify runs the sampling oracle on request") {
  const CliResult oracle = run_cli("verify 4 --oracle --samples 20000 --seed 7");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("oracle_bound_ok: true") != std::string::npos);

  const CliResult repeat = run_cli("verify 4 --oracle --samples 20000 --seed 7");
  CHECK(repeat.out == oracle.out);
}

TEST_CASE("argument errors map to the validation exit code") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("table").exit_code == 2);
  CHECK(run_cli("table 3 --format yaml").exit_code == 2);
  CHECK(run_cli("entropy - --kind unknown").exit_code == 2);
  CHECK(run_cli("table 3 --base 1.0").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("precision flag widens the printed value") {
  CHECK(run_cli("maxent 2 --precision 6").out == "3.321928\n");
  CHECK(run_cli("maxent 2 --precision 0").out == "3\n");
}
