#include "qeuler/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <nlohmann/json.hpp>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

struct PrimePowerFactor {
  long p;
  long e;
  long pe;
  long phi;
  long generator;
};

std::vector<PrimePowerFactor> factor_odd(long d) {
  std::vector<PrimePowerFactor> out;
  long m = d;
  for (long p = 3; p * p <= m; p += 2) {
    if (m % p) continue;
    PrimePowerFactor f{p, 0, 1, 0, 0};
    while (m % p == 0) {
      m /= p;
      ++f.e;
      f.pe *= p;
    }
    out.push_back(f);
  }
  if (m > 1) out.push_back({m, 1, m, 0, 0});
  for (auto& f : out) {
    f.phi = f.pe / f.p * (f.p - 1);
    f.generator = smallest_primitive_root(f.p, f.e);
  }
  return out;
}

void check_odd_modulus(long d) {
  if (d < 1 || d % 2 == 0) throw InvalidArgument("character modulus must be odd and positive, got " + std::to_string(d));
}

// Table of discrete logarithms base g modulo pe (-1 for non-units).
std::vector<long> discrete_logs(const PrimePowerFactor& f) {
  std::vector<long> logs(static_cast<std::size_t>(f.pe), -1);
  long x = 1;
  for (long t = 0; t < f.phi; ++t) {
    logs[static_cast<std::size_t>(x)] = t;
    x = x * f.generator % f.pe;
  }
  return logs;
}

}  // namespace

RootOfUnity RootOfUnity::reduced(long k, long n) {
  if (n <= 0) throw InvalidArgument("root of unity order must be positive");
  long r = k % n;
  if (r < 0) r += n;
  if (r == 0) return {0, 1};
  const long g = std::gcd(r, n);
  return {r / g, n / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& rhs) const {
  const long l = std::lcm(n, rhs.n);
  return reduced(k * (l / n) + rhs.k * (l / rhs.n), l);
}

RootOfUnity RootOfUnity::pow(long e) const {
  const long r = ((e % n) + n) % n;
  return reduced(k * r, n);
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<std::optional<RootOfUnity>> values)
    : modulus_(modulus), values_(std::move(values)), order_(1) {
  check_odd_modulus(modulus);
  if (static_cast<long>(values_.size()) != modulus) {
    throw InvalidArgument("character table size must equal the modulus");
  }
  for (long m = 0; m < modulus; ++m) {
    const bool unit = std::gcd(m, modulus) == 1;
    if (unit != values_[static_cast<std::size_t>(m)].has_value()) {
      throw InvalidArgument("character must vanish exactly off the units");
    }
    if (unit) order_ = std::lcm(order_, values_[static_cast<std::size_t>(m)]->n);
  }
}

std::optional<RootOfUnity> DirichletCharacter::value(long m) const {
  long r = m % modulus_;
  if (r < 0) r += modulus_;
  return values_[static_cast<std::size_t>(r)];
}

CycloExact DirichletCharacter::eval(long m) const {
  const auto v = value(m);
  if (!v) return CycloExact(0L);
  return CycloExact::root_of_unity(v->k, v->n);
}

bool DirichletCharacter::is_principal() const { return order_ == 1; }

long DirichletCharacter::conductor() const {
  for (long f = 1; f <= modulus_; ++f) {
    if (modulus_ % f) continue;
    bool induced = true;
    for (long a = 1; a < modulus_ && induced; ++a) {
      if (std::gcd(a, modulus_) != 1 || a % f != 1 % f) continue;
      if (!(values_[static_cast<std::size_t>(a)] == std::optional<RootOfUnity>(RootOfUnity{}))) induced = false;
    }
    if (induced) return f;
  }
  return modulus_;
}

DirichletCharacter DirichletCharacter::extended_to(long m) const {
  check_odd_modulus(m);
  if (m % modulus_) throw InvalidArgument("extension modulus must be a multiple of the modulus");
  std::vector<std::optional<RootOfUnity>> vals(static_cast<std::size_t>(m));
  for (long a = 0; a < m; ++a) {
    if (std::gcd(a, m) == 1) vals[static_cast<std::size_t>(a)] = value(a);
  }
  return DirichletCharacter(m, std::move(vals));
}

DirichletCharacter DirichletCharacter::primitive() const {
  const long f = conductor();
  std::vector<std::optional<RootOfUnity>> vals(static_cast<std::size_t>(f));
  for (long b = 0; b < f; ++b) {
    if (std::gcd(b, f) != 1) continue;
    long a = b;
    while (std::gcd(a, modulus_) != 1) a += f;
    vals[static_cast<std::size_t>(b)] = value(a);
  }
  return DirichletCharacter(f, std::move(vals));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& rhs) const {
  const long m = std::lcm(modulus_, rhs.modulus_);
  std::vector<std::optional<RootOfUnity>> vals(static_cast<std::size_t>(m));
  for (long a = 0; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    vals[static_cast<std::size_t>(a)] = *value(a) * *rhs.value(a);
  }
  return DirichletCharacter(m, std::move(vals));
}

DirichletCharacter DirichletCharacter::pow(long e) const {
  std::vector<std::optional<RootOfUnity>> vals = values_;
  for (auto& v : vals) {
    if (v) v = v->pow(e);
  }
  return DirichletCharacter(modulus_, std::move(vals));
}

std::vector<DirichletCharacter> enumerate_characters(long d) {
  check_odd_modulus(d);
  if (d == 1) return {trivial_character()};
  const auto factors = factor_odd(d);
  std::vector<std::vector<long>> logs;
  long total = 1;
  long exponent = 1;
  for (const auto& f : factors) {
    logs.push_back(discrete_logs(f));
    total *= f.phi;
    exponent = std::lcm(exponent, f.phi);
  }
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long index = 0; index < total; ++index) {
    std::vector<long> digits;
    long rest = index;
    for (const auto& f : factors) {
      digits.push_back(rest % f.phi);
      rest /= f.phi;
    }
    std::vector<std::optional<RootOfUnity>> vals(static_cast<std::size_t>(d));
    for (long a = 0; a < d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      long k = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const long l = logs[i][static_cast<std::size_t>(a % factors[i].pe)];
        k += digits[i] * l * (exponent / factors[i].phi);
      }
      vals[static_cast<std::size_t>(a)] = RootOfUnity::reduced(k, exponent);
    }
    out.emplace_back(d, std::move(vals));
  }
  return out;
}

DirichletCharacter character_by_index(long d, long index) {
  auto all = enumerate_characters(d);
  if (index < 0 || index >= static_cast<long>(all.size())) {
    throw InvalidArgument("character index " + std::to_string(index) + " out of range for modulus " +
                          std::to_string(d) + " (" + std::to_string(all.size()) + " characters)");
  }
  return all[static_cast<std::size_t>(index)];
}

DirichletCharacter trivial_character() { return DirichletCharacter(1, {RootOfUnity{}}); }

DirichletCharacter teichmuller_character(long p) {
  if (!is_odd_prime(p)) throw InvalidArgument("teichmuller character requires an odd prime");
  const long g = smallest_primitive_root(p);
  std::vector<std::optional<RootOfUnity>> vals(static_cast<std::size_t>(p));
  long x = 1;
  for (long t = 0; t < p - 1; ++t) {
    vals[static_cast<std::size_t>(x)] = RootOfUnity::reduced(t, p - 1);
    x = x * g % p;
  }
  return DirichletCharacter(p, std::move(vals));
}

DirichletCharacter chi_n(const DirichletCharacter& chi, long n, long p) {
  return chi * teichmuller_character(p).pow(-n);
}

CharTable<CycloExact> exact_table(const DirichletCharacter& chi) {
  CharTable<CycloExact> t;
  t.modulus = chi.modulus();
  for (long m = 0; m < chi.modulus(); ++m) {
    t.values.push_back(chi.eval(m));
    t.nonzero.push_back(chi.value(m).has_value());
  }
  return t;
}

CharTable<ComplexF> complex_table(const DirichletCharacter& chi) {
  CharTable<ComplexF> t;
  t.modulus = chi.modulus();
  for (long m = 0; m < chi.modulus(); ++m) {
    const auto v = chi.value(m);
    if (!v) {
      t.values.emplace_back(0.0, 0.0);
      t.nonzero.push_back(false);
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(v->k) / static_cast<double>(v->n);
    t.values.emplace_back(std::cos(angle), std::sin(angle));
    t.nonzero.push_back(true);
  }
  return t;
}

CharTable<PAdic> embed_padic(const DirichletCharacter& chi, long p, long m) {
  if (!is_odd_prime(p)) throw InvalidArgument("embedding prime must be odd");
  if ((p - 1) % chi.order() != 0) {
    throw UnsupportedEmbedding("character of order " + std::to_string(chi.order()) +
                               " does not embed into Q_" + std::to_string(p) + " (order must divide " +
                               std::to_string(p - 1) + ")");
  }
  const PAdic generator = teichmuller(smallest_primitive_root(p), p, m);
  std::vector<PAdic> powers{PAdic(p, 1L, m)};
  for (long j = 1; j < p - 1; ++j) powers.push_back(powers.back() * generator);
  CharTable<PAdic> t;
  t.modulus = chi.modulus();
  for (long a = 0; a < chi.modulus(); ++a) {
    const auto v = chi.value(a);
    if (!v) {
      t.values.push_back(PAdic::exact_zero(p));
      t.nonzero.push_back(false);
      continue;
    }
    t.values.push_back(powers[static_cast<std::size_t>(v->k * ((p - 1) / v->n))]);
    t.nonzero.push_back(true);
  }
  return t;
}

CharTable<CycloPAdic> embed_padic_cyclotomic(const DirichletCharacter& chi, long p, long level, long m) {
  const auto base = embed_padic(chi, p, m);
  CharTable<CycloPAdic> t;
  t.modulus = base.modulus;
  t.nonzero = base.nonzero;
  for (const auto& v : base.values) t.values.push_back(CycloPAdic::constant(v, level));
  return t;
}

void to_json(nlohmann::json& j, const DirichletCharacter& chi) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : chi.table()) {
    if (v) values.push_back({v->k, v->n});
    else values.push_back(nullptr);
  }
  j = nlohmann::json{{"modulus", chi.modulus()},
                     {"conductor", chi.conductor()},
                     {"order", chi.order()},
                     {"values", std::move(values)}};
}

}  // namespace qeuler
