#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// An element is known only modulo p^N and cannot be inverted or rendered
// to the requested precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

// A closed-form denominator q^{alpha k d} w^d + 1 vanished.
class PoleError : public Error {
 public:
  PoleError(int k, const std::string& what)
      : Error(what), k_(k) {}
  int k() const { return k_; }

 private:
  int k_;
};

// q^{e} for a fractional exponent e is not representable in the ring.
class InexactPower : public Error {
 public:
  using Error::Error;
};

class UnsupportedEmbedding : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class TruncationFailure : public Error {
 public:
  using Error::Error;
};

class DivergentParameters : public Error {
 public:
  using Error::Error;
};

class RegionViolation : public Error {
 public:
  using Error::Error;
};

// Malformed parameters supplied by a caller (bad modulus, q out of range...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
