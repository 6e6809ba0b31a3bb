#include "orbitzeta/numeric.hpp"

#include <cmath>
#include <vector>

namespace orbitzeta {

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt pow(std::int64_t base, std::uint64_t exponent) {
  return pow(BigInt(base), exponent);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw CapExceeded("64-bit overflow in lattice arithmetic");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw CapExceeded("64-bit overflow in lattice arithmetic");
  }
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_squarefree(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

int classical_moebius(std::int64_t n) {
  if (!is_squarefree(n)) return 0;
  return prime_divisors(n).size() % 2 == 0 ? 1 : -1;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_decimal(const Rational& q, int digits) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  const BigInt scale = pow(BigInt(10), static_cast<std::uint64_t>(digits));
  BigInt scaled = (abs(num) * scale * 2 + den) / (den * 2);

  std::string body = scaled.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) body.insert(0, "-");
  return body;
}

std::string to_fraction(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

}  // namespace orbitzeta
