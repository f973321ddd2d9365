#include "render.hpp"

#include <charconv>
#include <cmath>

namespace qeuler::tools {

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

nlohmann::json encode(const Rational& x) { return to_string(x); }

nlohmann::json encode(const CycloExact& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return {{"order", x.order()}, {"coeffs", coeffs}, {"text", x.to_string()}};
}

nlohmann::json encode(const ComplexF& x) { return {{"re", x.real()}, {"im", x.imag()}}; }

nlohmann::json encode(const PAdic& x) {
  nlohmann::json j = x;
  j["digits"] = x.to_digits();
  return j;
}

nlohmann::json encode(const CycloPAdic& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(encode(c));
  return {{"p", x.prime()}, {"level", x.level()}, {"coeffs", coeffs}};
}

nlohmann::json encode(const SeriesValue& x) {
  return {{"value_re", x.value.real()},
          {"value_im", x.value.imag()},
          {"terms_used", x.terms_used},
          {"tail_bound", x.tail_bound}};
}

std::string render(const Rational& x) { return to_string(x); }
std::string render(const CycloExact& x) { return x.to_string(); }

std::string render(const ComplexF& x) {
  std::string out = format_double(x.real());
  if (x.imag() != 0.0) out += (x.imag() < 0 ? " - " : " + ") + format_double(std::abs(x.imag())) + "i";
  return out;
}

std::string render(const PAdic& x) { return x.to_digits(); }
std::string render(const CycloPAdic& x) { return x.to_string(); }

}  // namespace qeuler::tools
