#include <doctest.h>

#include <random>
#include <sstream>

#include "hbarkit/cli.hpp"
#include "hbarkit/parser.hpp"
#include "hbarkit/random_ops.hpp"
#include "hbarkit/report.hpp"

using namespace hbarkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hbarkit");
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_offset(const char* text) {
  try {
    parse_operator_expr(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("operator expressions") {
  CHECK(parse_operator_expr("(ad+a)^2").to_string() == "ad^2 + 2*ad*a + a^2 + h");
  CHECK(parse_operator_expr("a*ad") == QOperator::number() + QOperator(HbarScalar::hbar()));
  CHECK(parse_operator_expr("-a^2") == -QOperator::monomial(0, 2));
  CHECK(parse_operator_expr("3/6*h*ad") == QOperator::monomial(1, 0, HbarScalar::monomial(make_rational(1, 2), 1)));
  CHECK(parse_operator_expr("  2 - 2 ").is_zero());
  CHECK(parse_operator_expr("h^0") == QOperator(HbarScalar(1)));
}

TEST_CASE("commutative expressions") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(parse_commutative_poly("(x+y)^2 - x^2 - y^2", xy) == MultiPoly::monomial(xy, {1, 1}, 2));
  CHECK(parse_commutative_poly("y*x", xy) == parse_commutative_poly("x*y", xy));
  CHECK(split_names(" x, y ,z") == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("syntax errors carry offsets") {
  CHECK(error_offset("a+*") == 2);
  CHECK(error_offset("x^(-1)") == 2);
  CHECK(error_offset("b*a") == 0);
  CHECK(error_offset("(a+ad") == 5);
  CHECK(error_offset("a^65") == 2);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("1/0") == 2);
  CHECK_THROWS_AS(parse_commutative_poly("x*z", {"x", "y"}), ParseError);
  const std::string deep(500, '(');
  CHECK_THROWS_AS(parse_operator_expr(deep), ParseError);
}

TEST_CASE("render and parse round trip") {
  RandomAlgebra rng(71);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 50; ++i) {
    const QOperator f = rng.hbar_operator(4, 2, 6);
    CHECK(parse_operator_expr(f.to_string()) == f);
    const MultiPoly p = rng.poly(vars, 4, 6);
    CHECK(parse_commutative_poly(p.to_string(), vars) == p);
  }
}

TEST_CASE("random input never escapes as anything but a parse error") {
  std::mt19937_64 gen(2026);
  const std::string alphabet = "aadh()+-*^/0123456789 xy";
  std::uniform_int_distribution<int> byte(0, 255), pick(0, static_cast<int>(alphabet.size()) - 1), len(0, 24);
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const int n = len(gen);
    for (int k = 0; k < n; ++k) s.push_back(i % 2 ? static_cast<char>(byte(gen)) : alphabet[pick(gen)]);
    try {
      parse_operator_expr(s);
    } catch (const ParseError&) {
    }
  }
  CHECK(true);
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.command = {"spectrum", "--P", "a"};
  r.result["energy"] = hbar_json(HbarScalar::monomial(make_rational(-7, 3), 2) + HbarScalar::hbar(-1));
  r.checks.push_back({"oracle_equality", true, ""});
  r.checks.push_back({"defect_vanishes", false, "nonzero at order 2"});
  const nlohmann::json j = r;
  CHECK(j.at("schema_version") == 1);
  const Report back = j.get<Report>();
  CHECK(back == r);
  CHECK_FALSE(back.all_passed());
  CHECK(hbar_from_json(back.result["energy"]) ==
        HbarScalar::monomial(make_rational(-7, 3), 2) + HbarScalar::hbar(-1));
  CHECK(rational_from_json(rational_json(make_rational(-12345678901234567, 7))) ==
        make_rational(-12345678901234567, 7));
}

TEST_CASE("command exit codes") {
  CHECK(run({"normal-order", "--expr", "(ad+a)^2"}).code == kExitOk);
  const Run bad = run({"normal-order", "--expr", "a+*"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("offset 2") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"milnor", "--f", "x^2", "--vars", "x,y", "--cap", "10"}).code == kExitComputation);
  const Run mu = run({"milnor", "--f", "x^3+y^3", "--vars", "x,y"});
  CHECK(mu.code == kExitOk);
  CHECK(mu.out.rfind("4\n", 0) == 0);
}

TEST_CASE("spectrum report") {
  const Run r = run({"spectrum", "--P", "a+ad", "--n", "0", "--K", "2", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == Report::kSchemaVersion);
  const auto& energy = j.at("result").at("energy");
  REQUIRE(energy.size() == 3);
  CHECK(hbar_from_json(energy[0]).is_zero());
  CHECK(hbar_from_json(energy[1]).is_zero());
  CHECK(hbar_from_json(energy[2]) == HbarScalar(-1));
  for (const auto& c : j.at("checks")) CHECK(c.at("passed") == true);
}

TEST_CASE("spectrum table output does not depend on the job count") {
  const std::vector<std::string> base{"spectrum-table", "--P", "(a+ad)^4 + h*a", "--levels", "4", "--order", "2"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.insert(args.end(), {"--jobs", jobs, "--format", "json"});
    return run(args);
  };
  const Run one = with_jobs("1"), three = with_jobs("3");
  CHECK(one.code == kExitOk);
  CHECK(one.out == three.out);
}
