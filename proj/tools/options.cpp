#include "options.hpp"

#include <charconv>
#include <numeric>

#include "qeuler/errors.hpp"
#include "qeuler/padic.hpp"

namespace qeuler::tools {

namespace {

long parse_long(const std::string& name, std::string_view text) {
  long value = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ConfigError("--" + name + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string TwistSpec::to_string() const {
  if (is_one()) return "1";
  return std::to_string(k) + "/" + std::to_string(n);
}

TwistSpec parse_twist(const std::string& text, long p) {
  if (text == "1") return {};
  if (text == "zeta_p") {
    if (p == 0) throw ConfigError("--w zeta_p needs --p");
    return {1, p};
  }
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw ConfigError("--w: expected 1, k/n or zeta_p, got '" + text + "'");
  TwistSpec w{parse_long("w", std::string_view(text).substr(0, slash)),
              parse_long("w", std::string_view(text).substr(slash + 1))};
  if (w.n < 1) throw ConfigError("--w: the order n in k/n must be positive");
  w.k %= w.n;
  if (w.k < 0) w.k += w.n;
  const long g = std::gcd(w.k, w.n);
  if (w.k == 0) return {};
  w.k /= g;
  w.n /= g;
  return w;
}

DirichletCharacter parse_character(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("--char: expected d,index, got '" + text + "'");
  const long d = parse_long("char", std::string_view(text).substr(0, comma));
  const long index = parse_long("char", std::string_view(text).substr(comma + 1));
  if (d < 1 || d % 2 == 0) throw ConfigError("--char: the modulus must be odd and positive");
  if (index < 0 || index >= euler_phi(d)) {
    throw ConfigError("--char: index must lie in [0, " + std::to_string(euler_phi(d)) + ") for modulus " +
                      std::to_string(d));
  }
  return character_by_index(d, index);
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long n = parse_long("n", text);
    return {n, n};
  }
  return {parse_long("n", std::string_view(text).substr(0, dots)),
          parse_long("n", std::string_view(text).substr(dots + 2))};
}

Rational parse_rational_option(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw ConfigError("--" + name + ": expected n or n/d, got '" + text + "'");
  }
}

}  // namespace qeuler::tools
