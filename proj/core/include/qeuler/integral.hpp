#pragma once

#include <algorithm>
#include <future>
#include <vector>

#include "qeuler/padic.hpp"
#include "qeuler/ring.hpp"

namespace qeuler {

struct PrecisionBudget {
  long target = 10;    // M: requested absolute precision
  long level_cap = 0;  // N: highest Riemann level tried (0 = default for p)
};

template <class T>
struct IntegralResult {
  T value;
  long precision = 0;  // agreement level of the last two Riemann sums
  long level = 0;      // level N of the reported sum
};

// Keeps p^N * period at or below ~5e5 summands (N <= 12 for p = 3, N <= 8 for p = 5).
long default_level_cap(long p);

inline long padic_valuation(const PAdic& x) { return x.valuation(); }
inline long padic_valuation(const CycloPAdic& x) { return x.valuation(); }
inline long padic_precision(const PAdic& x) { return x.precision(); }
inline long padic_precision(const CycloPAdic& x) { return x.precision(); }

// [m]_{-q} for odd m, i.e. (1 + q^m) / (1 + q).
PAdic fermionic_normalizer(const PAdic& q, long m);

// Requires q = 1 mod p.
void check_fermionic_q(const PAdic& q);

// Fermionic Riemann sum at level N over the residues 0..period*p^N - 1:
//   (1 / [period p^N]_{-q}) sum_x (-1)^x q^x f(x).
// With period > 1 (odd) the sum is taken over Z/(period p^N), which is the
// space a character of modulus `period` lives on. The index range may be
// split into `chunks` partial sums evaluated concurrently; they are combined
// in chunk order, each chunk deriving its sign and q-power from its offset.
template <class T, class F>
T riemann_sum(const F& f, const PAdic& q, long level, long period = 1, unsigned chunks = 1) {
  check_fermionic_q(q);
  if (level < 0) throw InvalidArgument("Riemann level must be non-negative");
  if (period < 1 || period % 2 == 0) throw InvalidArgument("Riemann period must be odd and positive");
  const long count = period * prime_power(q.prime(), level).get_si();
  chunks = std::max(1u, std::min<unsigned>(chunks, static_cast<unsigned>(count)));

  auto partial = [&](long begin, long end) {
    PAdic qx = q.pow(begin);
    T acc = f(begin) * qx;
    if (begin & 1) acc = -acc;
    for (long x = begin + 1; x < end; ++x) {
      qx *= q;
      T term = f(x) * qx;
      if (x & 1) acc = acc - term;
      else acc = acc + term;
    }
    return acc;
  };

  std::vector<long> bounds;
  for (unsigned c = 0; c <= chunks; ++c) bounds.push_back(count * static_cast<long>(c) / static_cast<long>(chunks));
  T sum = partial(bounds[0], bounds[1]);
  if (chunks > 1) {
    std::vector<std::future<T>> parts;
    for (unsigned c = 1; c < chunks; ++c) {
      parts.push_back(std::async(std::launch::async, partial, bounds[c], bounds[c + 1]));
    }
    for (auto& part : parts) sum = sum + part.get();
  }
  return sum * fermionic_normalizer(q, count).inverse();
}

// Raises the level until the Riemann sums agree modulo p^M across two
// consecutive level steps.
// NoConvergence when the cap is reached first.
template <class T, class F>
IntegralResult<T> integrate(const F& f, const PAdic& q, const PrecisionBudget& budget, long period = 1) {
  const long cap = budget.level_cap > 0 ? budget.level_cap : default_level_cap(q.prime());
  // Two consecutive agreements are required; low levels can agree by accident.
  T previous = riemann_sum<T>(f, q, 0, period);
  int streak = 0;
  for (long level = 1; level <= cap; ++level) {
    T current = riemann_sum<T>(f, q, level, period);
    const T diff = current - previous;
    streak = padic_valuation(diff) >= budget.target ? streak + 1 : 0;
    if (streak == 2) return IntegralResult<T>{current, budget.target, level};
    previous = std::move(current);
  }
  throw NoConvergence("Riemann sums did not stabilise modulo p^" + std::to_string(budget.target) +
                      " by level " + std::to_string(cap));
}

// Residual of (-1)^(n-1) I(f) + q^n I(f_n) - [2]_q sum_{l<n} (-1)^(n-1-l) q^l f(l)
// at level N, with f_n(x) = f(x + n).
template <class T, class F>
T shift_identity_check(const F& f, const PAdic& q, long n, long level) {
  if (n < 1) throw InvalidArgument("shift must be positive");
  const T base = riemann_sum<T>(f, q, level);
  const auto shifted_f = [&](long x) { return f(x + n); };
  const T shifted = riemann_sum<T>(shifted_f, q, level);
  const PAdic one(q.prime(), 1L, q.precision());
  const PAdic two_q = one + q;
  T boundary = f(0) * one;
  boundary = boundary - boundary;  // zero of the right shape
  for (long l = 0; l < n; ++l) {
    T term = f(l) * q.pow(l);
    if ((n - 1 - l) & 1) boundary = boundary - term;
    else boundary = boundary + term;
  }
  T lhs = ((n - 1) & 1) ? -base : base;
  lhs = lhs + shifted * q.pow(n);
  return lhs - boundary * two_q;
}

}  // namespace qeuler
