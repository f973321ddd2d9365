#include "qeuler/integral.hpp"

namespace qeuler {

long default_level_cap(long p) {
  if (p == 3) return 12;
  if (p == 5) return 8;
  long n = 0;
  long size = 1;
  while (size * p <= 531441) {
    size *= p;
    ++n;
  }
  return std::max(n, 1L);
}

void check_fermionic_q(const PAdic& q) {
  if (q.prime() == 0 || !q.is_unit()) throw InvalidArgument("fermionic q must be a p-adic unit");
  const PAdic one(q.prime(), 1L, q.precision());
  if ((q - one).valuation() < 1) {
    throw InvalidArgument("fermionic q must satisfy q = 1 (mod p)");
  }
}

PAdic fermionic_normalizer(const PAdic& q, long m) {
  if (m % 2 == 0) throw InvalidArgument("fermionic normalizer needs an odd count");
  const PAdic one(q.prime(), 1L, q.precision());
  return (one + q.pow(m)) / (one + q);
}

}  // namespace qeuler
