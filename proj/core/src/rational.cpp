#include "qeuler/rational.hpp"

#include <cctype>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw InvalidArgument("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("0 raised to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::optional<Rational> rational_root(const Rational& r, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return r;
  if (r < 0 && k % 2 == 0) return std::nullopt;
  Integer num = abs(r.get_num());
  Integer den = r.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  if (r < 0) rn = -rn;
  return Rational(rn, rd);
}

std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
  const Integer& num = exponent.get_num();
  const Integer& den = exponent.get_den();
  if (!den.fits_ulong_p() || !num.fits_slong_p()) return std::nullopt;
  auto root = rational_root(base, den.get_ui());
  if (!root) return std::nullopt;
  if (*root == 0 && num < 0) return std::nullopt;
  return rational_pow(*root, num.get_si());
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace qeuler
