#include "orbitzeta/acceptance.hpp"

#include "orbitzeta/algebraic.hpp"
#include "orbitzeta/growth.hpp"
#include "orbitzeta/lattice.hpp"
#include "orbitzeta/moebius.hpp"
#include "orbitzeta/oracle.hpp"
#include "orbitzeta/report.hpp"
#include "orbitzeta/shiftorbits.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>

namespace orbitzeta {
namespace {

// Collects failures for one criterion; the first few are kept for the report.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!first_.empty()) first_ += "; ";
      first_ += what;
    }
  }

  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_ != 0) os << ", " << failures_ << " failed: " << first_;
    if (!extra.empty()) os << "; " << extra;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

template <class Body>
CriterionResult timed(int id, std::string name, double limit_seconds, Body body) {
  CriterionResult r{id, std::move(name), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && r.seconds >= limit_seconds) {
    r.passed = false;
    std::ostringstream os;
    os << "; runtime " << r.seconds << " s exceeds limit " << limit_seconds << " s";
    r.detail += os.str();
  }
  return r;
}

std::int64_t sigma_by_trial_division(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    s += k;
    if (k != n / k) s += n / k;
  }
  return s;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::string decimal(const Rational& q) { return to_decimal(q, 9); }

using Outcome = std::pair<bool, std::string>;

Outcome moebius_equivalence() {
  Tally t;
  MoebiusOracle oracle(2);
  const auto& catalog = oracle.catalog();
  std::size_t pairs = 0;
  for (std::int64_t n = 1; n <= 36; ++n) {
    for (const auto& l : catalog.at_index(n)) {
      for (const auto& m : catalog.superlattices(l)) {
        ++pairs;
        const auto closed = moebius_closed(m, l);
        const auto recursive = oracle(m, l);
        t.expect(closed == recursive, "mu([" + m.to_string() + "], [" + l.to_string() + "]) closed " +
                                          closed.str() + " vs recursive " + recursive.str());
      }
    }
  }
  return {t.ok(), t.summary(std::to_string(pairs) + " intervals")};
}

Outcome orbit_oracle_equivalence() {
  Tally t;
  for (const auto& [b, max_index] : {std::pair{2, 10}, std::pair{3, 8}}) {
    const auto sys = ShiftSystem::full_shift_zd(2, b);
    const OrbitCounter counter(sys);
    const auto table = orbit_table(sys, max_index);
    BigInt pi_brute = 0;
    Rational mertens_brute = 0;
    for (std::int64_t n = 1; n <= max_index; ++n) {
      BigInt orbits_brute = 0;
      for (const auto& l : enumerate_sublattices(2, n)) {
        const auto brute = orbit_count_oracle(sys, l);
        const auto inverted = counter.orbit_count(l);
        t.expect(brute == inverted, "b=" + std::to_string(b) + " O_T([" + l.to_string() + "]) inversion " +
                                        inverted.str() + " vs brute " + brute.str());
        orbits_brute += brute;
      }
      pi_brute += orbits_brute;
      mertens_brute += Rational(orbits_brute, pow(b, static_cast<std::uint64_t>(n)));
      const auto& row = table.rows[static_cast<std::size_t>(n - 1)];
      t.expect(row.pi == pi_brute, "b=" + std::to_string(b) + " pi(" + std::to_string(n) + ")");
      t.expect(row.mertens == mertens_brute, "b=" + std::to_string(b) + " M(" + std::to_string(n) + ")");
    }
    t.expect(pi_oracle(sys, max_index) == table.rows.back().pi, "pi_oracle at horizon");
    t.expect(mertens_oracle(sys, max_index) == table.rows.back().mertens, "mertens_oracle at horizon");
  }
  return {t.ok(), t.summary()};
}

Outcome exact_anchors() {
  Tally t;
  const auto sys = ShiftSystem::full_shift_zd(2, 2);
  const auto table = orbit_table(sys, 3);
  const auto main_term = mertens_main_term_exact(a_zd_sieve(2, 2), 2);
  const BigInt pis[] = {2, 5, 13};
  for (std::int64_t n = 1; n <= 3; ++n) {
    const auto& want = pis[n - 1];
    t.expect(table.rows[static_cast<std::size_t>(n - 1)].pi == want, "inversion pi(" + std::to_string(n) + ")");
    t.expect(pi_oracle(sys, n) == want, "brute pi(" + std::to_string(n) + ")");
  }
  t.expect(table.rows[1].mertens == Rational(7, 4), "inversion M(2)");
  t.expect(table.rows[2].mertens == Rational(11, 4), "inversion M(3)");
  t.expect(mertens_oracle(sys, 2) == Rational(7, 4), "brute M(2)");
  t.expect(mertens_oracle(sys, 3) == Rational(11, 4), "brute M(3)");
  t.expect(table.rows[1].delta == Rational(-3, 4), "inversion Delta_2");
  t.expect(mertens_oracle(sys, 2) - main_term == Rational(-3, 4), "brute Delta_2");
  return {t.ok(), t.summary()};
}

Outcome inversion_consistency(unsigned) {
  Tally t;
  for (const int b : {2, 3}) {
    const OrbitCounter counter(ShiftSystem::full_shift_zd(2, b));
    for (std::int64_t n = 1; n <= 20; ++n) {
      const BigInt fixed = pow(b, static_cast<std::uint64_t>(n));
      for (const auto& l : counter.catalog().at_index(n)) {
        BigInt total = 0;
        for (const auto& m : counter.catalog().superlattices(l)) total += m.index_value() * counter.orbit_count(m);
        t.expect(total == fixed, "b=" + std::to_string(b) + " [" + l.to_string() + "]");
      }
    }
  }
  return {t.ok(), t.summary()};
}

Outcome figure_reproduction(unsigned threads) {
  Tally t;
  const auto points = figure_series(ShiftSystem::full_shift_zd(2, 2), 100, {kDefaultOrbitHorizonCap, threads});
  std::ostringstream csv;
  write_figure_csv(csv, points);
  std::size_t lines = 0;
  for (const char c : csv.str()) lines += c == '\n';
  t.expect(lines == 101, "CSV should have a header and 100 rows");

  const Rational lo = 1;
  const Rational hi = Rational(9, 2);
  const Rational tol = Rational(1, 1000);
  Rational worst_gap = 0;
  Rational phi_min = 100, phi_max = 0;
  for (const auto& p : points) {
    if (p.n >= 10) {
      t.expect(p.phi >= lo && p.phi <= hi, "phi(" + std::to_string(p.n) + ")=" + decimal(p.phi));
      t.expect(p.psi >= lo && p.psi <= hi, "psi(" + std::to_string(p.n) + ")=" + decimal(p.psi));
      phi_min = std::min(phi_min, p.phi);
      phi_max = std::max(phi_max, p.phi);
    }
    if (p.n >= 40) {
      const Rational gap = abs(p.phi - p.psi);
      worst_gap = std::max(worst_gap, gap);
      t.expect(gap < tol, "|phi-psi|(" + std::to_string(p.n) + ")=" + decimal(gap));
    }
  }
  std::ostringstream extra;
  extra << "phi in [" << to_decimal(phi_min, 4) << ", " << to_decimal(phi_max, 4)
        << "] for 10<=N<=100, max |phi-psi| for N>=40 = " << to_double(worst_gap);
  return {t.ok(), t.summary(extra.str())};
}

Outcome growth_cross_checks() {
  Tally t;
  const auto z2 = a_zd_sieve(2, 60);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto& a = z2.a[static_cast<std::size_t>(n)];
    t.expect(a == sigma_by_trial_division(n), "a_" + std::to_string(n) + "(Z^2) vs sigma");
    t.expect(a == enumerate_sublattices(2, n).size(), "a_" + std::to_string(n) + "(Z^2) vs enumeration");
  }
  for (int d = 1; d <= 4; ++d) {
    const auto seq = a_zd_sieve(d, 1000);
    const auto zeta = zeta_product_coefficients(d, 1000);
    for (std::size_t n = 1; n <= 1000; ++n) {
      t.expect(seq.a[n] == zeta[n], "d=" + std::to_string(d) + " n=" + std::to_string(n) + " recursion vs zeta product");
    }
    const auto report = check_bounds(seq);
    t.expect(report.ok() && report.checked == 1000,
             "bounds Z^" + std::to_string(d) + (report.ok() ? "" : " n=" + std::to_string(report.violation->n) +
                                                                     " " + report.violation->bound));
  }
  const auto heis = check_bounds(a_heisenberg_sieve(10'000));
  t.expect(heis.ok(), "bounds heisenberg");
  return {t.ok(), t.summary()};
}

Outcome heisenberg_checks() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  const auto h = a_heisenberg_sieve(1'000'000);
  const double sieve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(sieve_seconds < 30.0, "sieve took " + std::to_string(sieve_seconds) + " s");

  t.expect(h.a[1] == 1, "a_1");
  t.expect(h.a[2] == 3, "a_2");
  for (std::int64_t p = 2; p < 100; ++p) {
    if (is_prime(p)) t.expect(h.a[static_cast<std::size_t>(p)] == p + 1, "a_" + std::to_string(p));
  }
  for (std::int64_t m = 2; m <= 10'000; ++m) {
    for (std::int64_t n = m + 1; m * n <= 10'000; ++n) {
      if (std::gcd(m, n) != 1) continue;
      t.expect(h.a[static_cast<std::size_t>(m * n)] == h.a[static_cast<std::size_t>(m)] * h.a[static_cast<std::size_t>(n)],
               "a_" + std::to_string(m * n) + " multiplicativity");
    }
  }
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  const double zeta3 = 1.2020569031595942;
  const double constant = zeta2 * zeta2 / (2 * zeta3);
  const double ratio = asymptotic_ratio(h, 1'000'000);
  t.expect(ratio >= constant / 2 && ratio <= constant * 2, "s_n/(n^2 ln n) = " + std::to_string(ratio));
  std::ostringstream extra;
  extra << std::setprecision(6) << "s_n/(n^2 ln n) at 1e6 = " << ratio << " vs " << constant << ", sieve "
        << sieve_seconds << " s";
  return {t.ok(), t.summary(extra.str())};
}

Outcome mertens_asymptotics(unsigned threads) {
  Tally t;
  const std::int64_t big = 10'000;
  const auto z2 = a_zd_sieve(2, big);
  double oracle = 0;  // sum_d floor(N/d) / d
  for (std::int64_t d = 1; d <= big; ++d) oracle += static_cast<double>(big / d) / static_cast<double>(d);
  const double main_term = mertens_main_term_float(z2, big);
  t.expect(std::abs(main_term - oracle) <= 1e-9 * oracle, "main term vs double-sum oracle");
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  const double rel = std::abs(main_term / static_cast<double>(big) / zeta2 - 1);
  t.expect(rel < 0.005, "relative deviation from zeta(2) " + std::to_string(rel));

  const auto table = orbit_table(ShiftSystem::full_shift_zd(2, 2), 60, {kDefaultOrbitHorizonCap, threads});
  Rational worst = 0;
  std::int64_t first_bad = 0;
  for (const auto& row : table.rows) {
    t.expect(row.mertens - row.main_term == row.delta, "Delta_" + std::to_string(row.n) + " identity");
    const Rational mag = abs(row.delta);
    if (mag > Rational(3, 2) && first_bad == 0) first_bad = row.n;
    worst = std::max(worst, mag);
    t.expect(mag <= Rational(3, 2), "|Delta_" + std::to_string(row.n) + "| = " + decimal(mag) + " > 1.5");
  }
  std::ostringstream extra;
  extra << "sum sigma(n)/n / N = " << std::setprecision(8) << main_term / static_cast<double>(big)
        << " (rel. dev " << rel << "); max |Delta_N| (N<=60) = " << decimal(worst);
  if (first_bad != 0) extra << ", first exceeds 1.5 at N=" << first_bad;
  return {t.ok(), t.summary(extra.str())};
}

Outcome partial_summation() {
  Tally t;
  Rational worst_ratio = 0;
  for (int e = 1; e <= 4; ++e) {
    for (const int b : {2, 3}) {
      for (std::int64_t n = 1; n <= 60; ++n) {
        const Rational r = partial_summation_remainder(e, b, n);
        const BigInt scale = pow(n, static_cast<std::uint64_t>(e - 1)) * pow(b, static_cast<std::uint64_t>(n));
        const Rational ratio = abs(r) / Rational(scale);
        worst_ratio = std::max(worst_ratio, ratio);
        t.expect(ratio <= 8, "e=" + std::to_string(e) + " b=" + std::to_string(b) + " N=" + std::to_string(n));
      }
    }
  }
  return {t.ok(), t.summary("max |remainder| / (N^(e-1) b^N) = " + decimal(worst_ratio))};
}

Outcome algebraic_examples() {
  Tally t;
  for (std::int64_t k = 1; k <= 6; ++k) {
    const std::int64_t side = std::int64_t{1} << k;
    t.expect(ledrappier_fix(Sublattice::diagonal({side, side})).fix_count == 1, "diag(2^" + std::to_string(k) + ")");
  }
  std::ostringstream growth;
  BigInt previous = 0;
  for (std::int64_t k = 2; k <= 5; ++k) {
    const std::int64_t side = (std::int64_t{1} << k) - 1;
    const auto fix = ledrappier_fix(Sublattice::diagonal({side, side})).fix_count;
    t.expect(fix > previous, "diag(2^" + std::to_string(k) + "-1) not increasing");
    growth << (k == 2 ? "" : ", ") << fix;
    previous = fix;
  }
  for (std::int64_t n = 1; n <= 20; ++n) {
    t.expect(solenoid_fix(SolenoidFamily::Horizontal, n) == pow(2, static_cast<std::uint64_t>(n)) - 1,
             "horizontal n=" + std::to_string(n));
    t.expect(solenoid_fix(SolenoidFamily::Vertical, n) == 1, "vertical n=" + std::to_string(n));
  }
  return {t.ok(), t.summary("Ledrappier along diag(2^k-1), k=2..5: " + growth.str())};
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "Moebius closed form = recursive oracle on [L, M], index(L) <= 36",
       [](const AcceptanceOptions&) { return timed(1, "moebius oracle equivalence", 10.0, moebius_equivalence); }},
      {2, "orbit counts, pi, M equal brute force (b=2 to 10, b=3 to 8)",
       [](const AcceptanceOptions&) { return timed(2, "orbit oracle equivalence", 60.0, orbit_oracle_equivalence); }},
      {3, "exact anchors pi(1..3), M(2), M(3), Delta_2",
       [](const AcceptanceOptions&) { return timed(3, "exact anchors", 0.0, exact_anchors); }},
      {4, "sum_{L' >= L} [L'] O_T(L') = b^[L], index <= 20",
       [](const AcceptanceOptions& o) {
         return timed(4, "inversion consistency", 0.0, [&] { return inversion_consistency(o.threads); });
       }},
      {5, "figure 1: phi, psi in [1, 4.5]; |phi - psi| < 1e-3 for N >= 40",
       [](const AcceptanceOptions& o) {
         return timed(5, "figure 1 reproduction", 120.0, [&] { return figure_reproduction(o.threads); });
       }},
      {6, "growth sequences: sigma, enumeration, zeta product, bounds",
       [](const AcceptanceOptions&) { return timed(6, "growth cross-checks", 0.0, growth_cross_checks); }},
      {7, "Heisenberg values, multiplicativity, asymptotic constant",
       [](const AcceptanceOptions&) { return timed(7, "heisenberg", 0.0, heisenberg_checks); }},
      {8, "Mertens asymptotics: main term ~ zeta(2) N; |Delta_N| <= 1.5 for N <= 60",
       [](const AcceptanceOptions& o) {
         return timed(8, "mertens asymptotics", 0.0, [&] { return mertens_asymptotics(o.threads); });
       }},
      {9, "partial summation remainder <= 8 N^(e-1) b^N",
       [](const AcceptanceOptions&) { return timed(9, "partial summation", 0.0, partial_summation); }},
      {10, "Ledrappier and solenoid examples",
       [](const AcceptanceOptions&) { return timed(10, "algebraic examples", 0.0, algebraic_examples); }},
  };
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& c : acceptance_criteria()) {
    results.push_back(c.run(options));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << r.name << " (" << std::fixed
     << std::setprecision(2) << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace orbitzeta
