#include <doctest.h>

#include <thread>

#include "qeuler/errors.hpp"
#include "qeuler/euler.hpp"

using namespace qeuler;

namespace {

const std::vector<Rational> kQs{Rational(1, 2), Rational(2, 3), Rational(3, 5)};

EulerParams<CycloExact> cyclo_params(const Rational& q, long alpha, const CycloExact& w) {
  return EulerParams<CycloExact>(alpha, CycloExact(q), w);
}

std::vector<CycloExact> twists() {
  return {CycloExact(1), CycloExact::root_of_unity(1, 3), CycloExact::root_of_unity(1, 9)};
}

}  // namespace

TEST_CASE("euler_number examples") {
  for (const auto& q : kQs) {
    for (long alpha : {1L, 2L, 3L}) {
      const EulerParams<Rational> params(alpha, q, Rational(1));
      CHECK(euler_number(0, params) == Rational((1 + q) / 2));
      CHECK(euler_number(1, params) == Rational(-(1 + q) / (2 * (1 + rational_pow(q, alpha)))));
    }
    CHECK(euler_number(1, EulerParams<Rational>(1, q, Rational(1))) == Rational(-1, 2));
  }
  const Rational q(1, 2);
  const auto params = cyclo_params(q, 2, CycloExact::root_of_unity(1, 9));
  CHECK(euler_number(0, params) == CycloExact(Rational(1 + q)) / (CycloExact(1) + params.w()));
}

TEST_CASE("q -> 1 recovers the classical Euler values at 0") {
  // Classical E_n(0) from 2/(e^t + 1): 1, -1/2, 0, 1/4, 0, -1/2.
  const std::vector<double> classical{1.0, -0.5, 0.0, 0.25, 0.0, -0.5};
  const EulerParams<Rational> params(1, Rational(999999, 1000000), Rational(1));
  for (long n = 0; n < 6; ++n) {
    CHECK(euler_number(n, params).get_d() == doctest::Approx(classical[static_cast<std::size_t>(n)]).epsilon(1e-3));
  }
}

TEST_CASE("euler_polynomial") {
  const Rational q(2, 3);
  const auto params = cyclo_params(q, 2, CycloExact::root_of_unity(1, 3));
  for (long n = 0; n < 5; ++n) CHECK(euler_polynomial(n, Rational(0), params) == euler_number(n, params));
  for (long x = 0; x < 4; ++x) CHECK(euler_polynomial(0, Rational(x), params) == euler_number(0, params));

  // Base q^d at (x + a)/d only needs q^{alpha a}.
  const Rational q4(1, 4);
  const EulerParams<Rational> base(1, q4, Rational(1));
  CHECK_NOTHROW(euler_polynomial(3, Rational(2, 5), base.scaled(5)));
  CHECK_THROWS_AS(euler_polynomial(3, Rational(1, 3), base), InexactPower);
  CHECK(euler_polynomial(3, Rational(1, 2), base) ==
        twisted_gen_euler_at_power(3, Rational(1, 2), unit_table(q4), base));
}

TEST_CASE("generalized numbers") {
  const DirichletCharacter quad = character_by_index(3, 1);
  for (const auto& q : kQs) {
    const auto params = cyclo_params(q, 1, CycloExact(1));
    CHECK(twisted_gen_euler_poly(0, Rational(0), exact_table(quad), params) == CycloExact(Rational(-(1 + q))));
    for (long n = 0; n < 5; ++n) {
      CHECK(twisted_gen_euler_poly(n, Rational(2), exact_table(trivial_character()), params) ==
            euler_polynomial(n, Rational(2), params));
    }
  }
  const EulerParams<Rational> half(1, Rational(1, 2), Rational(1));
  CharTable<Rational> real{3, {Rational(0), Rational(1), Rational(-1)}, {false, true, true}};
  CHECK(twisted_gen_euler_at_power(0, Rational(1), real, half) == Rational(-3, 2));
}

TEST_CASE("addition formula") {
  for (const auto& q : {Rational(1, 2), Rational(2, 3)}) {
    for (const auto& w : twists()) {
      for (long d : {1L, 3L, 5L}) {
        for (const auto& chi : enumerate_characters(d)) {
          const TwistedEulerFamily<CycloExact> family(cyclo_params(q, 2, w), exact_table(chi));
          for (long n = 0; n <= 8; ++n) {
            CHECK(family.addition_formula(n, Rational(0)) == family.number(n));
            for (long x : {0L, 1L, 2L}) {
              CHECK(family.addition_formula(n, Rational(x)) == family.polynomial(n, Rational(x)));
              CHECK(family.addition_formula_reversed(n, Rational(x)) == family.addition_formula(n, Rational(x)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("addition formula, two-term case") {
  const Rational q(3, 5);
  const EulerParams<Rational> params(2, q, Rational(1));
  const TwistedEulerFamily<Rational> family(params, unit_table(q));
  for (long x = 0; x < 4; ++x) {
    const Rational qax = rational_pow(q, 2 * x);
    CHECK(family.addition_formula(1, Rational(x)) ==
          q_bracket(x, params.q_alpha()) * family.number(0) + qax * family.number(1));
  }
}

TEST_CASE("memoized numbers under concurrent access") {
  const TwistedEulerFamily<CycloExact> family(cyclo_params(Rational(2, 3), 3, CycloExact::root_of_unity(1, 9)),
                                              exact_table(character_by_index(9, 1)));
  std::vector<std::vector<CycloExact>> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&, t] {
      for (long l = 6; l >= 0; --l) seen[t].push_back(family.number(l));
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& s : seen) CHECK(s == seen[0]);
}

TEST_CASE("recurrence") {
  const Rational q(1, 2);
  const EulerParams<Rational> params(1, q, Rational(1));
  const auto unit = unit_table(q);
  CHECK(recurrence_residual(0, 1, unit, params) == 0);
  CHECK(recurrence_residual(1, 2, unit, params) == 0);

  for (const auto& w : twists()) {
    for (long d : {3L, 5L, 9L}) {
      for (const auto& chi : enumerate_characters(d)) {
        const auto p = cyclo_params(Rational(3, 5), 2, w);
        const auto table = exact_table(chi);
        for (long m = 0; m < 5; ++m) {
          for (long n = 1; n < 4; ++n) {
            CHECK(recurrence_residual(m, n, table, p, RecurrenceForm::kShiftedCharacter).is_zero());
          }
          CHECK(recurrence_residual(m, d, table, p).is_zero());
          CHECK(recurrence_residual(m, 2 * d, table, p).is_zero());
        }
      }
    }
  }
}

TEST_CASE("recurrence as printed needs a period shift") {
  const auto p = cyclo_params(Rational(1, 2), 1, CycloExact(1));
  const auto table = exact_table(character_by_index(3, 1));
  CHECK(!recurrence_residual(1, 1, table, p).is_zero());
}

TEST_CASE("distribution formula") {
  for (const auto& q : kQs) {
    for (const auto& w : twists()) {
      const auto params = cyclo_params(q, 2, w);
      for (long n = 0; n < 4; ++n) {
        CHECK(distribution_formula(n, Rational(1), unit_table(CycloExact(q)), params, 1) ==
              euler_polynomial(n, Rational(1), params));
      }
      for (long d : {3L, 5L, 9L}) {
        for (const auto& chi : enumerate_characters(d)) {
          const auto table = exact_table(chi);
          // n = 0 collapses to [2]_q sum_a (-1)^a w^a chi(a) / (1 + w^d).
          CycloExact sum(0);
          for (long a = 0; a < d; ++a) {
            const CycloExact term = params.w().pow(a) * table(a);
            sum = (a & 1) ? sum - term : sum + term;
          }
          const CycloExact collapsed = CycloExact(Rational(1 + q)) * sum / (CycloExact(1) + params.w().pow(d));
          CHECK(distribution_formula(0, Rational(0), table, params, d) == collapsed);
          for (long n = 0; n <= 6; ++n) {
            CHECK(distribution_formula(n, Rational(1), table, params, d) ==
                  twisted_gen_euler_poly(n, Rational(1), table, params));
          }
        }
      }
    }
  }
  const auto params = cyclo_params(Rational(1, 2), 1, CycloExact(1));
  CHECK_THROWS_AS(distribution_formula(1, Rational(0), exact_table(character_by_index(3, 1)), params, 5),
                  InvalidArgument);
}

TEST_CASE("pole detection") {
  const EulerParams<Rational> params(1, Rational(-1), Rational(1));
  try {
    euler_number(2, params);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.k() == 1);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(EulerParams<Rational>(0, Rational(1, 2), Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(EulerParams<Rational>(1, Rational(1), Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(EulerParams<Rational>(2, Rational(-1), Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(EulerParams<Rational>(1, Rational(1, 2), Rational(2)), InvalidArgument);
  CHECK_THROWS_AS(EulerParams<PAdic>(1, PAdic(3, 2L, 10), PAdic(3, 1L, 10)), InvalidArgument);
  CHECK_THROWS_AS(EulerParams<PAdic>(1, PAdic(3, 4L, 10), PAdic(3, -1L, 10)), InvalidArgument);
}

TEST_CASE("witt formula") {
  const long p = 3, N = 8;
  const EulerParams<PAdic> params(1, PAdic(p, 4L, 30), PAdic(p, 1L, 30));
  const auto unit = embed_padic(trivial_character(), p, 30);
  const auto one = witt_verify(1, 0, unit, params, N);
  CHECK(one.closed_form == PAdic(p, Rational(-1, 2), 30));
  CHECK(one.diff_valuation >= 6);
  CHECK(witt_verify(0, 2, unit, params, N).diff_valuation >= N - 2);

  const long N5 = 5;
  const EulerParams<PAdic> params5(2, PAdic(5, 6L, 30), PAdic(5, 1L, 30));
  const auto quad = embed_padic(character_by_index(5, 2), 5, 30);
  for (long n = 0; n <= 4; ++n) CHECK(witt_verify(n, 1, quad, params5, N5).diff_valuation >= N5 - 2);
}
