#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qeuler/cyclo.hpp"
#include "qeuler/cyclo_padic.hpp"
#include "qeuler/lfun.hpp"
#include "qeuler/padic.hpp"

namespace qeuler::tools {

// JSON encodings. Exact values are strings, never floats.
nlohmann::json encode(const Rational& x);
nlohmann::json encode(const CycloExact& x);
nlohmann::json encode(const ComplexF& x);
nlohmann::json encode(const PAdic& x);
nlohmann::json encode(const CycloPAdic& x);
nlohmann::json encode(const SeriesValue& x);

// One-line renderings for human and CSV output.
std::string render(const Rational& x);
std::string render(const CycloExact& x);
std::string render(const ComplexF& x);
std::string render(const PAdic& x);
std::string render(const CycloPAdic& x);

// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace qeuler::tools
