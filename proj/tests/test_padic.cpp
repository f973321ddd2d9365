#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qeuler/cyclo_padic.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/integral.hpp"
#include "qeuler/padic.hpp"

using namespace qeuler;

TEST_CASE("padic arithmetic examples") {
  const PAdic two(3, 2L, 10);
  CHECK((two.inverse() * two - PAdic(3, 1L, 10)).is_zero());
  CHECK(PAdic(3, Rational(-1, 2), 2).residue(2) == 4);
  const PAdic fifty(5, 50L, 10);
  CHECK(fifty.valuation() == 2);
  CHECK(fifty.unit() == 2);
}

TEST_CASE("padic precision propagation") {
  const PAdic a(3, Rational(1, 3), 5);   // v = -1, absolute precision 5
  const PAdic b(3, 9L, 8);               // v = 2
  CHECK((a + b).precision() == 5);
  CHECK((a * b).valuation() == 1);
  CHECK((a * b).relative_precision() == std::min(a.relative_precision(), b.relative_precision()));
  CHECK(a.inverse().valuation() == 1);
  CHECK(a.inverse().relative_precision() == a.relative_precision());
  CHECK_THROWS_AS(PAdic::exact_zero(3).inverse(), DivisionByZero);
}

TEST_CASE("recomputing at higher precision keeps the reported digits") {
  const auto pipeline = [](long prec) {
    const PAdic x(5, Rational(7, 3), prec);
    const PAdic y(5, Rational(-2, 11), prec);
    return (x * y + x.pow(3)) / (y + PAdic(5, 1L, prec)) - y.inverse();
  };
  const PAdic low = pipeline(8);
  const PAdic high = pipeline(20);
  CHECK(low.residue(8) == high.residue(8));
}

TEST_CASE("teichmuller examples") {
  CHECK(teichmuller(1, 7, 12) == PAdic(7, 1L, 12));
  CHECK(teichmuller(2, 5, 2).residue(2) == 7);
  for (long m : {1L, 5L, 20L}) CHECK(teichmuller(2, 3, m) == PAdic(3, -1L, m));
  CHECK_THROWS_AS(teichmuller(6, 3, 5), InvalidArgument);
}

TEST_CASE("teichmuller properties") {
  const long M = 10;
  for (long p : {3L, 5L, 7L, 11L}) {
    for (long a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      const PAdic w = teichmuller(a, p, M);
      CHECK(w.pow(p - 1) == PAdic(p, 1L, M));
      CHECK(w.residue(1) == a % p);
      for (long b = 1; b < p; ++b) CHECK(teichmuller(a * b, p, M) == w * teichmuller(b, p, M));
    }
  }
}

TEST_CASE("qpow_neg") {
  const PAdic q(3, 4L, 10);
  CHECK(qpow_neg(q, 0) == PAdic(3, 1L, 10));
  CHECK(qpow_neg(q, 1) == PAdic(3, Rational(1, 4), 10));
  CHECK(qpow_neg(q, 2) == PAdic(3, Rational(1, 16), 10));
}

TEST_CASE("normalizer [p^N]_{-q} tends to 2/(1+q)") {
  for (long p : {3L, 5L}) {
    const PAdic q(p, 1L + p, 30);
    const PAdic limit = PAdic(p, 2L, 30) / (PAdic(p, 1L, 30) + q);
    for (long N = 0; N < 6; ++N) {
      const PAdic norm = fermionic_normalizer(q, prime_power(p, N).get_si());
      CHECK(norm.is_unit());
      CHECK((norm - limit).valuation() >= N);
    }
  }
}

TEST_CASE("one-unit powers") {
  const PAdic base(3, 4L, 20);
  const PAdic half = one_unit_power(base, Rational(1, 2));
  CHECK(half * half == base);
  CHECK(one_unit_power(base, Rational(3)) == base.pow(3));
}

TEST_CASE("digit rendering and json") {
  CHECK(PAdic(3, 5L, 3).to_digits() == "2 + 1*3 + 0*3^2 (mod 3^3)");
  const PAdic x(5, Rational(-7, 25), 6);
  nlohmann::json j = x;
  CHECK(j.at("v") == -2);
  CHECK(j.get<PAdic>() == x);
}

TEST_CASE("cyclotomic p-adic ring") {
  const long p = 3;
  const long prec = 12;
  const CycloPAdic z = CycloPAdic::root_of_unity(1, p, 1, prec);
  const CycloPAdic one = CycloPAdic::constant(PAdic(p, 1L, prec), 1);
  CHECK(z.pow(3) == one);
  CHECK(CycloPAdic::root_of_unity(1, p, 2, prec).pow(9) == CycloPAdic::constant(PAdic(p, 1L, prec), 2));

  // 1 + zeta + zeta^2 reduces to zero: augmentations are taken on reduced
  // representatives.
  CHECK((one + z + z * z).is_zero());
  CHECK((one + z + z * z).augment().is_zero());

  const CycloPAdic pi = z - one;
  CHECK(pi.augment().is_zero());
  CHECK(!pi.is_unit());
}

TEST_CASE("cyclotomic p-adic inverse") {
  const long prec = 12;
  for (long p : {3L, 5L}) {
    const CycloPAdic z = CycloPAdic::root_of_unity(1, p, 1, prec);
    const CycloPAdic one = CycloPAdic::constant(PAdic(p, 1L, prec), 1);
    const CycloPAdic two = CycloPAdic::constant(PAdic(p, 2L, prec), 1);
    const CycloPAdic u = two + (z - one);
    CHECK(u.is_unit());
    CHECK((u * u.inverse() - one).valuation() >= prec - 1);
    // zeta - 1 divides p, so its inverse lives in Q_p(zeta).
    const CycloPAdic pi = z - one;
    CHECK((pi * pi.inverse() - one).valuation() >= prec - 3);
  }
}
