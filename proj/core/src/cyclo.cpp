#include "qeuler/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo the monic integer polynomial m.
void reduce_mod(Poly& a, const std::vector<Integer>& m) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t top = a.size(); top-- > deg;) {
    if (a[top] == 0) continue;
    const Rational c = a[top];
    for (std::size_t j = 0; j < deg; ++j) {
      if (m[j] != 0) a[top - deg + j] -= c * m[j];
    }
    a[top] = 0;
  }
  a.resize(deg);
}

// Quotient and remainder over Q[x]; b must be nonzero and trimmed.
void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    trim(rem);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::vector<Integer> compute_cyclotomic(long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1, Integer(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    // Exact monic division over Z.
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> quot(num.size() - dd, Integer(0));
    for (std::size_t top = num.size(); top-- > dd;) {
      const Integer c = num[top];
      quot[top - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[top - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

long euler_phi(long n) {
  if (n <= 0) throw InvalidArgument("euler_phi requires n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  if (n <= 0) throw InvalidArgument("cyclotomic polynomial order must be positive");
  static std::mutex mutex;
  static std::map<long, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> poly;
  if (n == 1) {
    poly = {Integer(-1), Integer(1)};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard lock(mutex);
  // std::map never invalidates references, so a concurrent insert of the
  // same key is harmless: emplace keeps the first value.
  return cache.emplace(n, std::move(poly)).first->second;
}

CycloExact::CycloExact(const Rational& c) : order_(1), coeffs_{c} {}

CycloExact::CycloExact(long order, std::vector<Rational> coeffs) : order_(order) {
  if (order <= 0) throw InvalidArgument("cyclotomic order must be positive");
  const auto& phi = cyclotomic_polynomial(order);
  if (coeffs.size() < phi.size() - 1) coeffs.resize(phi.size() - 1, Rational(0));
  for (auto& c : coeffs) c.canonicalize();  // mpq_class(n, d) does not reduce
  reduce_mod(coeffs, phi);
  coeffs_ = std::move(coeffs);
}

CycloExact CycloExact::root_of_unity(long k, long n) {
  if (n <= 0) throw InvalidArgument("root of unity order must be positive");
  long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  return CycloExact(n, std::move(c));
}

CycloExact CycloExact::promoted(long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw InvalidArgument("promotion target must be a multiple of the order");
  const long step = m / order_;
  std::vector<Rational> c(static_cast<std::size_t>((static_cast<long>(coeffs_.size()) - 1) * step) + 1,
                          Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return CycloExact(m, std::move(c));
}

bool CycloExact::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloExact::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CycloExact::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic element is not rational");
  return coeffs_[0];
}

CycloExact CycloExact::operator-() const {
  CycloExact out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloExact& CycloExact::operator+=(const CycloExact& rhs) {
  if (rhs.order_ != order_) {
    const long m = std::lcm(order_, rhs.order_);
    *this = promoted(m);
    return *this += rhs.promoted(m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloExact& CycloExact::operator-=(const CycloExact& rhs) { return *this += -rhs; }

CycloExact& CycloExact::operator*=(const CycloExact& rhs) {
  if (rhs.is_rational()) {
    const Rational& s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (rhs.order_ != order_) {
    const long m = std::lcm(order_, rhs.order_);
    *this = promoted(m);
    return *this *= rhs.promoted(m);
  }
  Poly prod = poly_mul(coeffs_, rhs.coeffs_);
  reduce_mod(prod, cyclotomic_polynomial(order_));
  coeffs_ = std::move(prod);
  return *this;
}

CycloExact& CycloExact::operator/=(const CycloExact& rhs) { return *this *= rhs.inverse(); }

CycloExact CycloExact::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in cyclotomic field");
  if (is_rational()) return CycloExact(Rational(1) / coeffs_[0]);
  // Extended Euclid: track s with s * a == r (mod Phi).
  const auto& phi_int = cyclotomic_polynomial(order_);
  Poly m(phi_int.begin(), phi_int.end());
  Poly r0 = m, r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi is irreducible.
  const Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return CycloExact(order_, std::move(s1));
}

CycloExact CycloExact::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloExact result(1L);
  CycloExact base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

ComplexF CycloExact::embed_complex() const {
  ComplexF sum(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    sum += coeffs_[i].get_d() * ComplexF(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CycloExact::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << qeuler::to_string(coeffs_[i]);
    if (i > 0) os << "*z" << order_ << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

bool operator==(const CycloExact& a, const CycloExact& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const long m = std::lcm(a.order_, b.order_);
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

}  // namespace qeuler
