#include <doctest.h>

#include "harness.hpp"
#include "options.hpp"
#include "render.hpp"

using namespace qeuler;
using namespace qeuler::tools;

TEST_CASE("twist parsing") {
  CHECK(parse_twist("1").is_one());
  const TwistSpec t = parse_twist("2/6");
  CHECK(t.k == 1);
  CHECK(t.n == 3);
  CHECK(t.exact() == CycloExact::root_of_unity(1, 3));
  const TwistSpec z = parse_twist("zeta_p", 5);
  CHECK(z.k == 1);
  CHECK(z.n == 5);
  CHECK_THROWS_AS(parse_twist("zeta_p"), ConfigError);
  CHECK_THROWS_AS(parse_twist("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_twist("x"), ConfigError);
}

TEST_CASE("character parsing") {
  CHECK(parse_character("3,1") == character_by_index(3, 1));
  CHECK(parse_character("1,0").is_principal());
  CHECK_THROWS_AS(parse_character("4,0"), ConfigError);
  CHECK_THROWS_AS(parse_character("3,2"), ConfigError);
  CHECK_THROWS_AS(parse_character("3"), ConfigError);
}

TEST_CASE("range parsing") {
  CHECK(parse_range("0..4") == std::pair<long, long>(0, 4));
  CHECK(parse_range("3") == std::pair<long, long>(3, 3));
  const auto empty = parse_range("5..2");
  CHECK(empty.second < empty.first);
  CHECK_THROWS_AS(parse_range("a..b"), ConfigError);
}

TEST_CASE("rational options") {
  CHECK(parse_rational_option("q", "2/4") == Rational(1, 2));
  CHECK(parse_rational_option("q", "-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational_option("q", "abc"), ConfigError);
  CHECK_THROWS_AS(parse_rational_option("q", "1/0"), ConfigError);
}

TEST_CASE("encodings") {
  CHECK(encode(Rational(-3, 2)) == nlohmann::json("-3/2"));
  const auto z = encode(CycloExact::root_of_unity(1, 3));
  CHECK(z["order"] == 3);
  CHECK(z.contains("coeffs"));
  const auto c = encode(ComplexF(0.5, -1.0));
  CHECK(c["re"] == 0.5);
  CHECK(c["im"] == -1.0);
  const auto p = encode(PAdic(3, Rational(-1, 2), 6));
  CHECK(p.contains("digits"));
  CHECK(format_double(0.1) == "0.1");
  CHECK(render(Rational(3, 4)) == "3/4");
}

TEST_CASE("small grid suites have no unexplained failures") {
  VerifyOptions options;
  options.grid = "small";
  for (const auto& suite : {"addition", "recurrence", "distribution", "s-zero", "special-values", "partial-zeta"}) {
    const SuiteReport report = run_suite(suite, options);
    CHECK_MESSAGE(report.failed() == 0, suite);
    CHECK(!report.cases.empty());
  }
}

TEST_CASE("sampled reports are deterministic") {
  VerifyOptions options;
  options.grid = "small";
  options.sample = 20;
  options.seed = 7;
  options.threads = 3;
  const auto a = to_json(run_suite("addition", options)).dump();
  options.threads = 1;
  const auto b = to_json(run_suite("addition", options)).dump();
  CHECK(a == b);
  options.seed = 8;
  CHECK(to_json(run_suite("addition", options)).dump() != a);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["grid"] == kSmallGridVersion);
  CHECK(j["cases"].size() == 20);
}

TEST_CASE("unknown suite") { CHECK_THROWS(run_suite("nope", VerifyOptions{})); }
