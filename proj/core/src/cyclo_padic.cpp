#include "qeuler/cyclo_padic.hpp"

#include <algorithm>
#include <sstream>

#include "qeuler/cyclo.hpp"
#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void reduce(std::vector<PAdic>& a, const std::vector<Integer>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t top = a.size(); top-- > deg;) {
    if (a[top].is_exact_zero()) continue;
    const PAdic c = a[top];
    for (std::size_t j = 0; j < deg; ++j) {
      // Coefficients of Phi_{p^r} are 0 or 1.
      if (phi[j] != 0) a[top - deg + j] -= c;
    }
    a[top] = PAdic::exact_zero(c.prime());
  }
  a.resize(deg);
}

}  // namespace

CycloPAdic::CycloPAdic(long p, long level, std::vector<PAdic> coeffs) : p_(p), level_(level) {
  if (!is_odd_prime(p)) throw InvalidArgument("CycloPAdic requires an odd prime");
  if (level < 1) throw InvalidArgument("CycloPAdic level must be >= 1");
  const auto& phi = cyclotomic_polynomial(ipow(p, level));
  if (coeffs.size() < phi.size() - 1) coeffs.resize(phi.size() - 1, PAdic::exact_zero(p));
  for (auto& c : coeffs) {
    if (c.prime() == 0) c = PAdic::exact_zero(p);
    if (c.prime() != p) throw InvalidArgument("CycloPAdic coefficient over a different prime");
  }
  reduce(coeffs, phi);
  coeffs_ = std::move(coeffs);
}

CycloPAdic CycloPAdic::constant(const PAdic& c, long level) {
  return CycloPAdic(c.prime(), level, {c});
}

CycloPAdic CycloPAdic::root_of_unity(long k, long p, long level, long prec) {
  const long n = ipow(p, level);
  long e = k % n;
  if (e < 0) e += n;
  std::vector<PAdic> c(static_cast<std::size_t>(e) + 1, PAdic::exact_zero(p));
  c[static_cast<std::size_t>(e)] = PAdic(p, 1L, prec);
  return CycloPAdic(p, level, std::move(c));
}

long CycloPAdic::order() const { return ipow(p_, level_); }

long CycloPAdic::precision() const {
  long m = PAdic::kInfinity;
  for (const auto& c : coeffs_) m = std::min(m, c.precision());
  return m;
}

long CycloPAdic::valuation() const {
  long m = PAdic::kInfinity;
  for (const auto& c : coeffs_) m = std::min(m, c.valuation());
  return m;
}

PAdic CycloPAdic::augment() const {
  PAdic s = PAdic::exact_zero(p_);
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool CycloPAdic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PAdic& c) { return c.is_zero(); });
}

CycloPAdic CycloPAdic::with_precision(long prec) const {
  CycloPAdic out = *this;
  for (auto& c : out.coeffs_) c = c.with_precision(prec);
  return out;
}

void CycloPAdic::check_compatible(const CycloPAdic& rhs) const {
  if (p_ != rhs.p_ || level_ != rhs.level_) {
    throw InvalidArgument("CycloPAdic operands live in different rings");
  }
}

CycloPAdic CycloPAdic::operator-() const {
  CycloPAdic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloPAdic& CycloPAdic::operator+=(const CycloPAdic& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloPAdic& CycloPAdic::operator-=(const CycloPAdic& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloPAdic& CycloPAdic::operator*=(const PAdic& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycloPAdic& CycloPAdic::operator*=(const CycloPAdic& rhs) {
  check_compatible(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<PAdic> prod(2 * n - 1, PAdic::exact_zero(p_));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j].is_exact_zero()) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  reduce(prod, cyclotomic_polynomial(order()));
  coeffs_ = std::move(prod);
  return *this;
}

CycloPAdic& CycloPAdic::operator/=(const CycloPAdic& rhs) { return *this *= rhs.inverse(); }

CycloPAdic CycloPAdic::inverse() const {
  const long v = valuation();
  if (v == PAdic::kInfinity || is_zero()) throw DivisionByZero("inverse of zero in Q_p(zeta)");
  // x = p^v y with y integral and primitive.
  long top = 0;
  for (const auto& c : coeffs_) {
    if (!c.is_exact_zero()) top = std::max(top, c.precision());
  }
  const PAdic scale(p_, Rational(1, prime_power(p_, v)), top - 2 * v);
  const CycloPAdic y = *this * scale;
  if (y.augment().is_unit()) return y.unit_inverse() * scale;
  // y is divisible by a power of (zeta - 1): invert through the norm,
  // 1/y = prod_{k != 1} sigma_k(y) / N(y).
  CycloPAdic cofactor = constant(PAdic(p_, 1L, y.precision()), level_);
  for (long k = 2; k < order(); ++k) {
    if (k % p_ != 0) cofactor *= y.conjugate(k);
  }
  const CycloPAdic norm = y * cofactor;
  return cofactor * norm.coeffs_[0].inverse() * scale;
}

CycloPAdic CycloPAdic::unit_inverse() const {
  const PAdic aug = augment();
  const long prec = precision();
  CycloPAdic y = constant(aug.inverse().with_precision(prec), level_);
  const CycloPAdic two = constant(PAdic(p_, 2L, prec), level_);
  const CycloPAdic one = constant(PAdic(p_, 1L, prec), level_);
  for (int iter = 0; iter < 64; ++iter) {
    const CycloPAdic xy = *this * y;
    if ((xy - one).is_zero()) return y;
    y = y * (two - xy);
  }
  throw NoConvergence("Newton inversion in Z_p[zeta] did not converge");
}

CycloPAdic CycloPAdic::conjugate(long k) const {
  CycloPAdic result = constant(PAdic::exact_zero(p_), level_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_exact_zero()) continue;
    result += root_of_unity(static_cast<long>(i) * k, p_, level_, coeffs_[i].precision()) * coeffs_[i];
  }
  return result;
}

CycloPAdic CycloPAdic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloPAdic result = constant(PAdic(p_, 1L, precision() == PAdic::kInfinity ? 64 : precision()), level_);
  CycloPAdic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string CycloPAdic::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].to_digits();
  }
  os << "] in Z_" << p_ << "[zeta_" << order() << "]";
  return os.str();
}

bool operator==(const CycloPAdic& a, const CycloPAdic& b) { return (a - b).is_zero(); }

}  // namespace qeuler
