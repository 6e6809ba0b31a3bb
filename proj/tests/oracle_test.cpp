#include "orbitzeta/oracle.hpp"

#include <doctest.h>

#include <map>

using namespace orbitzeta;

TEST_CASE("coset representatives") {
  CHECK(coset_representatives(Sublattice::full(2)) == std::vector<std::vector<std::int64_t>>{{0, 0}});
  CHECK(coset_representatives(Sublattice::diagonal({2, 2})).size() == 4);
  CHECK(coset_representatives(Sublattice::diagonal({2, 1})) == std::vector<std::vector<std::int64_t>>{{0, 0}, {1, 0}});
  CHECK(coset_representatives(parse_sublattice("2 1; 0 3")).size() == 6);
}

TEST_CASE("stabilizer examples") {
  const auto d21 = Sublattice::diagonal({2, 1});
  CHECK(stabilizer({Sublattice::diagonal({3, 2}), std::vector<int>(6, 1)}) == Sublattice::full(2));
  CHECK(stabilizer({d21, {0, 1}}) == d21);

  // Cells of diag(2,2): (0,0) (1,0) (0,1) (1,1). A diagonal pair is fixed by (1,1).
  const auto s = stabilizer({Sublattice::diagonal({2, 2}), {1, 0, 0, 1}});
  CHECK(s.index_value() == 2);
  CHECK(s == parse_sublattice("1 1; 0 2"));
}

TEST_CASE("stabilizer is a subgroup containing L and constant along orbits") {
  for (const auto& l : enumerate_sublattices(2, 6)) {
    const Torus torus(l);
    std::vector<int> values(6);
    for (int code = 0; code < 64; ++code) {
      for (int i = 0; i < 6; ++i) values[static_cast<std::size_t>(i)] = (code >> i) & 1;
      const auto s = stabilizer(torus, values);
      CHECK(contains(s, l));
      for (std::int64_t g = 0; g < torus.size(); ++g) {
        std::vector<int> shifted(6);
        for (std::int64_t h = 0; h < 6; ++h) shifted[static_cast<std::size_t>(h)] = values[static_cast<std::size_t>(torus.translate(h, g))];
        CHECK(stabilizer(torus, shifted) == s);
      }
    }
  }
}

TEST_CASE("Burnside consistency: configurations split by stabilizer into orbits of size [S]") {
  const auto l = Sublattice::diagonal({2, 4});
  const Torus torus(l);
  std::map<Sublattice, std::int64_t> class_sizes;
  std::vector<int> values(8);
  for (int code = 0; code < 256; ++code) {
    for (int i = 0; i < 8; ++i) values[static_cast<std::size_t>(i)] = (code >> i) & 1;
    ++class_sizes[stabilizer(torus, values)];
  }
  std::int64_t total = 0;
  for (const auto& [s, count] : class_sizes) {
    CHECK(count % s.index_value() == 0);
    total += count;
  }
  CHECK(total == 256);
}

TEST_CASE("orbit_count_oracle examples") {
  const auto b2 = ShiftSystem::full_shift_zd(2, 2);
  CHECK(orbit_count_oracle(b2, Sublattice::full(2)) == 2);
  CHECK(orbit_count_oracle(b2, Sublattice::diagonal({2, 2})) == 2);
  CHECK(orbit_count_oracle(ShiftSystem::full_shift_zd(2, 3), Sublattice::diagonal({2, 1})) == 3);
  CHECK_THROWS_AS(orbit_count_oracle(b2, Sublattice::diagonal({5, 5})), CapExceeded);
  CHECK_THROWS_AS(orbit_count_oracle(b2, Sublattice::diagonal({3, 3}), 100), CapExceeded);
}

TEST_CASE("pi and mertens oracles") {
  const auto b2 = ShiftSystem::full_shift_zd(2, 2);
  CHECK(pi_oracle(b2, 1) == 2);
  CHECK(mertens_oracle(b2, 1) == 1);
  CHECK(pi_oracle(b2, 2) == 5);
  CHECK(mertens_oracle(b2, 2) == Rational(7, 4));
  CHECK(pi_oracle(b2, 4) == pi(b2, 4));
  CHECK(mertens_oracle(b2, 4) == mertens(b2, 4));
}

TEST_CASE("oracle equivalence with Moebius inversion, d = 2") {
  for (const auto& [b, max_index] : {std::pair{2, 10}, std::pair{3, 8}}) {
    const auto sys = ShiftSystem::full_shift_zd(2, b);
    const OrbitCounter counter(sys);
    for (std::int64_t n = 1; n <= max_index; ++n) {
      for (const auto& l : enumerate_sublattices(2, n)) CHECK(orbit_count_oracle(sys, l) == counter.orbit_count(l));
    }
  }
}

TEST_CASE("oracle equivalence, d = 3, b = 2") {
  const auto sys = ShiftSystem::full_shift_zd(3, 2);
  const OrbitCounter counter(sys);
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (const auto& l : enumerate_sublattices(3, n)) CHECK(orbit_count_oracle(sys, l) == counter.orbit_count(l));
  }
}
