#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qeuler/characters.hpp"
#include "qeuler/cyclo.hpp"

namespace qeuler::tools {

// Raised for malformed or inconsistent command-line input (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A twist given as "1", "k/n" (zeta_n^k) or "zeta_p".
struct TwistSpec {
  long k = 0;
  long n = 1;

  bool is_one() const { return k % n == 0; }
  CycloExact exact() const { return CycloExact::root_of_unity(k, n); }
  std::string to_string() const;
};

TwistSpec parse_twist(const std::string& text, long p = 0);

// "d,index".
DirichletCharacter parse_character(const std::string& text);

// "a..b" or a single integer. b < a yields an empty range.
std::pair<long, long> parse_range(const std::string& text);

Rational parse_rational_option(const std::string& name, const std::string& text);

}  // namespace qeuler::tools
