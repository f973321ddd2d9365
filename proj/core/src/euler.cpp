#include "qeuler/euler.hpp"

#include <cmath>

namespace qeuler {

namespace {

bool is_integer(const Rational& e) { return e.get_den() == 1; }

long integer_exponent(const Rational& e) {
  if (!e.get_num().fits_slong_p()) throw InvalidArgument("exponent too large");
  return e.get_num().get_si();
}

[[noreturn]] void inexact(const std::string& ring, const Rational& e) {
  throw InexactPower("q^(" + to_string(e) + ") is not representable in the " + ring + " ring");
}

}  // namespace

Rational q_power(const Rational& q, const Rational& e) {
  if (is_integer(e)) return rational_pow(q, integer_exponent(e));
  if (auto r = rational_power(q, e)) return *r;
  inexact("exact", e);
}

CycloExact q_power(const CycloExact& q, const Rational& e) {
  if (is_integer(e)) return q.pow(integer_exponent(e));
  if (q.is_rational()) {
    if (auto r = rational_power(q.rational_value(), e)) return CycloExact(*r);
  }
  inexact("cyclotomic", e);
}

ComplexF q_power(const ComplexF& q, const Rational& e) {
  if (is_integer(e)) return std::pow(q, static_cast<int>(integer_exponent(e)));
  return std::pow(q, e.get_d());
}

PAdic q_power(const PAdic& q, const Rational& e) {
  if (is_integer(e)) return q.pow(integer_exponent(e));
  return one_unit_power(q, e);
}

CycloPAdic q_power(const CycloPAdic& q, const Rational& e) {
  if (is_integer(e)) return q.pow(integer_exponent(e));
  return CycloPAdic::constant(q_power(padic_scalar(q), e), q.level());
}

void validate_euler_q(const Rational&) {}
void validate_euler_q(const CycloExact&) {}
void validate_euler_q(const ComplexF& q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) throw InvalidArgument("q must be finite");
}
void validate_euler_q(const PAdic& q) { check_fermionic_q(q); }
void validate_euler_q(const CycloPAdic& q) { check_fermionic_q(padic_scalar(q)); }

void validate_twist(const Rational& w) {
  if (w != 1 && w != -1) throw InvalidArgument("twist must be a root of unity");
}

void validate_twist(const CycloExact& w) {
  // A root of unity of Q(zeta_n) has order dividing lcm(2, n).
  const long period = w.order() % 2 == 0 ? w.order() : 2 * w.order();
  if (!(w.pow(period) == CycloExact(1))) throw InvalidArgument("twist must be a root of unity");
}

void validate_twist(const ComplexF& w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-12) throw InvalidArgument("twist must lie on the unit circle");
}

void validate_twist(const PAdic& w) {
  // The only p-power root of unity in Q_p (p odd) is 1.
  if (!(w == PAdic(w.prime(), 1L, w.precision()))) {
    throw InvalidArgument("p-adic twist must be 1 or a p-power root of unity in the cyclotomic ring");
  }
}

void validate_twist(const CycloPAdic& w) {
  const CycloPAdic one = CycloPAdic::constant(PAdic(w.prime(), 1L, w.precision()), w.level());
  if (!(w.pow(w.order()) == one)) throw InvalidArgument("p-adic twist must be a p-power root of unity");
}

PAdic padic_scalar(const CycloPAdic& x) {
  for (std::size_t i = 1; i < x.coeffs().size(); ++i) {
    if (!x.coeffs()[i].is_zero()) throw InvalidArgument("expected a p-adic scalar, got a cyclotomic element");
  }
  return x.coeffs()[0];
}

}  // namespace qeuler
