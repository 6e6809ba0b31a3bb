#include "orbitzeta/shiftorbits.hpp"

#include "orbitzeta/moebius.hpp"

#include <doctest.h>

#include <map>

using namespace orbitzeta;

namespace {

const ShiftSystem kBinaryZ2 = ShiftSystem::full_shift_zd(2, 2);

}  // namespace

TEST_CASE("fix_count") {
  CHECK(fix_count(kBinaryZ2, Sublattice::full(2)) == 2);
  CHECK(fix_count(kBinaryZ2, Sublattice::diagonal({2, 2})) == 16);
  CHECK(fix_count(ShiftSystem::full_shift_zd(2, 3), parse_sublattice("3 0; 0 1")) == 27);
  const auto heis = ShiftSystem::full_shift(GroupDescriptor::heisenberg(), 2);
  CHECK_THROWS_AS(fix_count(heis, Sublattice::full(3)), UnsupportedOperation);
  CHECK_THROWS_AS(fix_count(kBinaryZ2, Sublattice::full(3)), DomainError);
  CHECK_THROWS_AS(ShiftSystem::full_shift_zd(2, 1), DomainError);
}

TEST_CASE("orbit_count examples") {
  CHECK(orbit_count(kBinaryZ2, Sublattice::full(2)) == 2);
  for (const auto& l : enumerate_sublattices(2, 2)) CHECK(orbit_count(kBinaryZ2, l) == 1);
  CHECK(orbit_count(kBinaryZ2, Sublattice::diagonal({2, 2})) == 2);
  CHECK(orbit_count(kBinaryZ2, Sublattice::diagonal({4, 1})) == 3);
}

TEST_CASE("pi, mertens and error terms at small horizons") {
  CHECK(pi(kBinaryZ2, 1) == 2);
  CHECK(pi(kBinaryZ2, 2) == 5);
  CHECK(pi(kBinaryZ2, 3) == 13);
  CHECK(mertens(kBinaryZ2, 1) == 1);
  CHECK(mertens(kBinaryZ2, 2) == Rational(7, 4));
  CHECK(mertens(kBinaryZ2, 3) == Rational(11, 4));

  const auto e1 = error_terms(kBinaryZ2, 1);
  CHECK(e1.sigma_over_bN == 0);
  CHECK(e1.delta == 0);
  CHECK(error_terms(kBinaryZ2, 2).delta == Rational(-3, 4));
  // 3 index-2 lattices each contribute -b^1 / 2 to Sigma_2.
  CHECK(error_terms(kBinaryZ2, 2).sigma_over_bN == Rational(-3, 4));

  const auto e40 = error_terms(kBinaryZ2, 40);
  CHECK(abs(e40.sigma_over_bN) < Rational(1, 1000));
}

TEST_CASE("orbit table invariants") {
  const auto table = orbit_table(kBinaryZ2, 30);
  REQUIRE(table.rows.size() == 30);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    CHECK(r.n == static_cast<std::int64_t>(i) + 1);
    CHECK(r.orbits >= 0);
    if (i == 0) continue;
    const auto& prev = table.rows[i - 1];
    CHECK(r.pi >= prev.pi);
    CHECK(r.mertens >= prev.mertens);
    CHECK(r.mertens - prev.mertens == Rational(r.orbits, orbitzeta::pow(2, static_cast<std::uint64_t>(r.n))));
    CHECK(r.pi == prev.pi + r.orbits);
  }
}

TEST_CASE("threaded table is identical to the serial one") {
  const auto serial = orbit_table(kBinaryZ2, 24);
  const auto threaded = orbit_table(kBinaryZ2, 24, {kDefaultOrbitHorizonCap, 4});
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].pi == threaded.rows[i].pi);
    CHECK(serial.rows[i].mertens == threaded.rows[i].mertens);
  }
}

TEST_CASE("orbit_table enforces its horizon cap") {
  CHECK_THROWS_AS(orbit_table(kBinaryZ2, 121), CapExceeded);
  CHECK_THROWS_AS(orbit_table(kBinaryZ2, 10, {5, 1}), CapExceeded);
  const auto heis = ShiftSystem::full_shift(GroupDescriptor::heisenberg(), 2);
  CHECK_THROWS_AS(orbit_table(heis, 5), UnsupportedOperation);
}

TEST_CASE("inversion consistency: sum over L' >= L of [L'] O_T(L') = b^[L]") {
  for (const int b : {2, 3}) {
    const OrbitCounter counter(ShiftSystem::full_shift_zd(2, b));
    for (std::int64_t n = 1; n <= 20; ++n) {
      for (const auto& l : counter.catalog().at_index(n)) {
        BigInt total = 0;
        for (const auto& m : counter.catalog().superlattices(l)) total += m.index_value() * counter.orbit_count(m);
        CHECK(total == orbitzeta::pow(b, static_cast<std::uint64_t>(n)));
      }
    }
  }
}

TEST_CASE("O_T depends only on the index and quotient type") {
  const OrbitCounter counter(kBinaryZ2);
  for (std::int64_t n = 1; n <= 20; ++n) {
    std::map<std::vector<std::int64_t>, BigInt> by_type;
    for (const auto& l : counter.catalog().at_index(n)) {
      const auto type = quotient_invariants(Sublattice::full(2), l);
      const auto o = counter.orbit_count(l);
      auto [it, inserted] = by_type.try_emplace(type, o);
      if (!inserted) CHECK(it->second == o);
    }
  }
}

TEST_CASE("figure series small rows") {
  const auto pts = figure_series(kBinaryZ2, 3);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].phi == 1);
  CHECK(pts[0].psi == 1);
  CHECK(pts[1].phi == Rational(5, 4));
  CHECK(pts[1].psi == 2);
  // psi(3) = (2 + 6 + (4/3) 8) / 8
  CHECK(pts[2].psi == Rational(2 + 6, 8) + Rational(4, 3));
}

TEST_CASE("d = 3 envelope: phi(N) / (N (ln N)^2) stays in a loose band") {
  const auto table = orbit_table(ShiftSystem::full_shift_zd(3, 2), 12);
  for (const auto& r : table.rows) {
    if (r.n < 3) continue;
    const double ln = std::log(static_cast<double>(r.n));
    const double scaled = to_double(r.phi) / (static_cast<double>(r.n) * ln * ln);
    CHECK(scaled > 0.0);
    CHECK(scaled < 5.0);
  }
}
