#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qeuler/cyclo.hpp"
#include "qeuler/cyclo_padic.hpp"
#include "qeuler/padic.hpp"

namespace qeuler {

// zeta_n^k with 0 <= k < n and gcd(k, n) = 1 (the value 1 is {0, 1}).
struct RootOfUnity {
  long k = 0;
  long n = 1;

  static RootOfUnity reduced(long k, long n);
  RootOfUnity operator*(const RootOfUnity& rhs) const;
  RootOfUnity pow(long e) const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

// Dirichlet character of odd modulus, fully tabulated over residues
// 0..modulus-1. A value of std::nullopt means chi(m) = 0. The character mod 1
// is identically 1, including at 0.
class DirichletCharacter {
 public:
  DirichletCharacter(long modulus, std::vector<std::optional<RootOfUnity>> values);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  long conductor() const;
  bool is_principal() const;

  std::optional<RootOfUnity> value(long m) const;
  // Exact value in Q(zeta_order).
  CycloExact eval(long m) const;
  const std::vector<std::optional<RootOfUnity>>& table() const { return values_; }

  // Character mod m (a multiple of the modulus) inducing the same values on
  // residues coprime to m.
  DirichletCharacter extended_to(long m) const;
  // The primitive character inducing this one (modulus = conductor).
  DirichletCharacter primitive() const;

  DirichletCharacter operator*(const DirichletCharacter& rhs) const;
  DirichletCharacter pow(long e) const;

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  long modulus_;
  std::vector<std::optional<RootOfUnity>> values_;
  long order_;
};

// All phi(d) characters mod an odd d, ordered by the mixed-radix index over
// the prime-power factors (smallest prime least significant) with the
// smallest primitive root of each factor as generator. Index 0 is principal.
std::vector<DirichletCharacter> enumerate_characters(long d);
DirichletCharacter character_by_index(long d, long index);
DirichletCharacter trivial_character();

// omega mod p with omega(g) = exp(2 pi i / (p-1)) for the smallest
// primitive root g.
DirichletCharacter teichmuller_character(long p);

// chi * omega^(-n), of modulus lcm(d, p).
DirichletCharacter chi_n(const DirichletCharacter& chi, long n, long p);

// Character values carried into a coefficient ring, indexed by residue.
template <class T>
struct CharTable {
  long modulus = 1;
  std::vector<T> values;
  std::vector<bool> nonzero;

  const T& operator()(long m) const {
    long r = m % modulus;
    if (r < 0) r += modulus;
    return values[static_cast<std::size_t>(r)];
  }
  bool is_nonzero(long m) const {
    long r = m % modulus;
    if (r < 0) r += modulus;
    return nonzero[static_cast<std::size_t>(r)];
  }
};

CharTable<CycloExact> exact_table(const DirichletCharacter& chi);
CharTable<ComplexF> complex_table(const DirichletCharacter& chi);

// Canonical embedding: exp(2 pi i/(p-1)) -> teichmuller(g) for the smallest
// primitive root g mod p. Requires order | p - 1 (UnsupportedEmbedding
// otherwise).
CharTable<PAdic> embed_padic(const DirichletCharacter& chi, long p, long m);
CharTable<CycloPAdic> embed_padic_cyclotomic(const DirichletCharacter& chi, long p, long level, long m);

void to_json(nlohmann::json& j, const DirichletCharacter& chi);

}  // namespace qeuler
