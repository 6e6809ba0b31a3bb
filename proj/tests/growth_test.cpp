#include "orbitzeta/growth.hpp"
#include "orbitzeta/lattice.hpp"

#include "brute.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace orbitzeta;

namespace {

// Heisenberg a_{p^k} from the local Euler factor, expanded as a power series
// in x = p^{-s}: 1/((1-x)(1-px)(1-p^2x^2)(1-p^3x^2)) * (1 - p^3x^3).
std::vector<__int128> heisenberg_local(std::int64_t p, int kmax) {
  std::vector<__int128> series(static_cast<std::size_t>(kmax) + 1, 0);
  series[0] = 1;
  auto times_geometric = [&](int step, __int128 ratio) {
    // multiply by 1/(1 - ratio x^step)
    for (int k = step; k <= kmax; ++k) series[static_cast<std::size_t>(k)] += ratio * series[static_cast<std::size_t>(k - step)];
  };
  const __int128 q = p;
  times_geometric(1, 1);
  times_geometric(1, q);
  times_geometric(2, q * q);
  times_geometric(2, q * q * q);
  for (int k = kmax; k >= 3; --k) series[static_cast<std::size_t>(k)] -= q * q * q * series[static_cast<std::size_t>(k - 3)];
  return series;
}

__int128 heisenberg_by_euler_factors(std::int64_t n) {
  __int128 total = 1;
  for (const std::int64_t p : prime_divisors(n)) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    total *= heisenberg_local(p, k)[static_cast<std::size_t>(k)];
  }
  return total;
}

bool is_prime(std::int64_t n) { return n >= 2 && prime_divisors(n) == std::vector<std::int64_t>{n}; }

}  // namespace

TEST_CASE("a_zd_sieve examples") {
  const auto z1 = a_zd_sieve(1, 5);
  for (std::int64_t n = 1; n <= 5; ++n) CHECK(z1.a[static_cast<std::size_t>(n)] == 1);

  const auto z2 = a_zd_sieve(2, 6);
  const std::vector<int> sigma{1, 3, 4, 7, 6, 12};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(z2.a[n] == sigma[n - 1]);
  CHECK(z2.s[6] == 33);

  CHECK(a_zd_sieve(3, 2).a[2] == 7);
  CHECK_THROWS_AS(a_zd_sieve(0, 3), DomainError);
  CHECK_THROWS_AS(a_zd_sieve(2, 0), DomainError);
}

TEST_CASE("sieve agrees with lattice enumeration and sigma") {
  const auto z2 = a_zd_sieve(2, 60);
  for (std::int64_t n = 1; n <= 60; ++n) {
    CHECK(z2.a[static_cast<std::size_t>(n)] == brute::sigma(n));
    CHECK(z2.a[static_cast<std::size_t>(n)] == enumerate_sublattices(2, n).size());
  }
  const auto z3 = a_zd_sieve(3, 20);
  for (std::int64_t n = 1; n <= 20; ++n) CHECK(z3.a[static_cast<std::size_t>(n)] == enumerate_sublattices(3, n).size());
}

TEST_CASE("zeta product coefficients equal the sieve for d <= 4") {
  for (int d = 1; d <= 4; ++d) {
    const auto seq = a_zd_sieve(d, 1000);
    const auto zeta = zeta_product_coefficients(d, 1000);
    for (std::size_t n = 1; n <= 1000; ++n) REQUIRE(seq.a[n] == zeta[n]);
  }
}

TEST_CASE("heisenberg small values") {
  const auto h = a_heisenberg_sieve(100);
  CHECK(h.a[1] == 1);
  CHECK(h.a[2] == 3);
  CHECK(h.a[4] == 19);
  for (std::int64_t p = 2; p < 100; ++p) {
    if (is_prime(p)) CHECK(h.a[static_cast<std::size_t>(p)] == p + 1);
  }
}

TEST_CASE("heisenberg sieve matches the local Euler factors") {
  const auto h = a_heisenberg_sieve(10'000);
  for (std::int64_t n = 1; n <= 10'000; ++n) {
    const auto expected = heisenberg_by_euler_factors(n);
    REQUIRE(h.a[static_cast<std::size_t>(n)] == BigInt(static_cast<long long>(expected)));
  }
}

TEST_CASE("multiplicativity on coprime arguments") {
  const auto h = a_heisenberg_sieve(2000);
  const auto z3 = a_zd_sieve(3, 2000);
  for (std::int64_t m = 2; m <= 2000; ++m) {
    for (std::int64_t n = m + 1; m * n <= 2000; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const auto mn = static_cast<std::size_t>(m * n);
      CHECK(h.a[mn] == h.a[static_cast<std::size_t>(m)] * h.a[static_cast<std::size_t>(n)]);
      CHECK(z3.a[mn] == z3.a[static_cast<std::size_t>(m)] * z3.a[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("group descriptors") {
  const auto z3 = GroupDescriptor::free_abelian(3);
  CHECK(z3.rank == 3);
  CHECK(z3.abelian_rank == 3);
  CHECK(z3.gamma == 3);
  CHECK(z3.delta == 0);
  const auto h = GroupDescriptor::heisenberg();
  CHECK(h.rank == 3);
  CHECK(h.abelian_rank == 2);
  CHECK(h.gamma == 2);
  CHECK(h.delta == 1);
  CHECK(parse_group("z:3") == z3);
  CHECK(parse_group("Z^3") == z3);
  CHECK(parse_group("heisenberg") == h);
  CHECK_THROWS_AS(parse_group("q:2"), DomainError);
  CHECK_THROWS_AS(parse_group("z:0"), DomainError);
}

TEST_CASE("check_bounds") {
  for (int d = 1; d <= 4; ++d) {
    const auto report = check_bounds(a_zd_sieve(d, 1000));
    CHECK(report.ok());
    CHECK(report.checked == 1000);
  }
  CHECK(check_bounds(a_heisenberg_sieve(10'000)).ok());

  // d = 2, n = 2: 2 <= 3 <= 9 * 2 * ln 2.
  CHECK(3.0 <= 9 * 2 * std::log(2.0));

  GrowthSequence bad = a_zd_sieve(2, 10);
  bad.a[7] = 100;
  const auto report = check_bounds(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violation->n == 7);
  CHECK(report.violation->bound == "upper n^r(G)");

  bad = a_zd_sieve(2, 10);
  bad.a[5] = 4;
  CHECK(check_bounds(bad).violation->bound == "lower n^(d(G)-1)");
}

TEST_CASE("mertens main term") {
  CHECK(mertens_main_term_exact(a_zd_sieve(2, 2), 2) == Rational(5, 2));
  CHECK(mertens_main_term_exact(a_zd_sieve(1, 3), 3) == Rational(11, 6));

  const auto z2 = a_zd_sieve(2, 10'001);
  CHECK_THROWS_AS(mertens_main_term_exact(z2, 10'001), CapExceeded);
  CHECK_THROWS_AS(mertens_main_term_float(a_zd_sieve(2, 5), 6), DomainError);

  const std::int64_t n = 10'000;
  double double_sum = 0;  // sum_d floor(N/d)/d
  for (std::int64_t d = 1; d <= n; ++d) double_sum += static_cast<double>(n / d) / static_cast<double>(d);
  const double f = mertens_main_term_float(z2, n);
  CHECK(f == doctest::Approx(double_sum).epsilon(1e-12));
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  CHECK(std::abs(f / (zeta2 * n) - 1) < 0.005);
  CHECK(to_double(mertens_main_term_exact(z2, 2000)) == doctest::Approx(mertens_main_term_float(z2, 2000)).epsilon(1e-13));
}

TEST_CASE("asymptotic ratio") {
  const auto z1 = a_zd_sieve(1, 100);
  for (std::int64_t n = 2; n <= 100; ++n) CHECK(asymptotic_ratio(z1, n) == 1.0);

  const auto z2 = a_zd_sieve(2, 10'000);
  double divisor_sum = 0;  // sum_{n<=N} sigma(n) = sum_k q (q + 1) / 2 with q = floor(N/k)
  for (std::int64_t k = 1; k <= 10'000; ++k) {
    const std::int64_t q = 10'000 / k;
    divisor_sum += static_cast<double>(q * (q + 1) / 2);
  }
  CHECK(z2.s[10'000].convert_to<double>() == divisor_sum);
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  CHECK(std::abs(asymptotic_ratio(z2, 10'000) / (zeta2 / 2) - 1) < 0.02);
  CHECK_THROWS_AS(asymptotic_ratio(z2, 1), DomainError);
}

TEST_CASE("partial summation remainder") {
  // N = 1: 1^e b - b/(b-1) b
  CHECK(partial_summation_remainder(1, 2, 1) == Rational(-2));
  CHECK(partial_summation_remainder(2, 3, 1) == Rational(-3, 2));
  for (int e = 1; e <= 4; ++e) {
    for (int b : {2, 3}) {
      for (std::int64_t n = 1; n <= 60; ++n) {
        const Rational r = partial_summation_remainder(e, b, n);
        const BigInt envelope = 8 * orbitzeta::pow(n, static_cast<std::uint64_t>(e - 1)) * orbitzeta::pow(b, static_cast<std::uint64_t>(n));
        CHECK(abs(r) <= Rational(envelope));
      }
    }
  }
}
