#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitzeta {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Error taxonomy. The CLI maps each class onto its own exit code.

/// Bad arguments: zero dimension, malformed lattice text, unknown group.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration or exact-arithmetic cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree exactly did not (an internal bug).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested operation is not available for this group.
class UnsupportedOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt pow(std::int64_t base, std::uint64_t exponent);

// Overflow-checked 64-bit arithmetic for lattice matrices; throws CapExceeded.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Floor division for signed operands.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

bool is_squarefree(std::int64_t n);
/// Prime divisors of n > 0 in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
/// Classical Moebius function on positive integers.
int classical_moebius(std::int64_t n);

double to_double(const Rational& q);

/// Exact decimal rendering of q rounded half away from zero to `digits`
/// places after the point.
std::string to_decimal(const Rational& q, int digits);

/// "num/den" in lowest terms (den omitted never; integers print as "n/1").
std::string to_fraction(const Rational& q);

/// Neumaier-compensated floating-point sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace orbitzeta
