#pragma once

// Brute-force orbit counting on quotient tori. Nothing here may call into the
// Moebius module: these counts are the independent reference for it.

#include "orbitzeta/lattice.hpp"
#include "orbitzeta/numeric.hpp"
#include "orbitzeta/shiftorbits.hpp"
#include "orbitzeta/torus.hpp"

#include <cstdint>
#include <vector>

namespace orbitzeta {

/// An L-periodic configuration, stored as one symbol per cell of Z^d / L.
struct PeriodicConfiguration {
  Sublattice lattice;
  std::vector<int> values;
};

inline constexpr std::int64_t kDefaultConfigurationCap = std::int64_t{1} << 20;

/// Box transversal of Z^d / L in torus cell order.
std::vector<std::vector<std::int64_t>> coset_representatives(const Sublattice& l);

/// {g in Z^d : translating cfg by g leaves it unchanged}, canonical.
Sublattice stabilizer(const PeriodicConfiguration& cfg);

/// Same, reusing a prebuilt torus for cfg's lattice.
Sublattice stabilizer(const Torus& torus, std::span<const int> values);

/// (1/[L]) #{L-periodic configurations whose stabilizer is exactly L}.
/// Throws CapExceeded if b^{[L]} exceeds the configuration cap.
BigInt orbit_count_oracle(const ShiftSystem& sys, const Sublattice& l,
                          std::int64_t cap = kDefaultConfigurationCap);

BigInt pi_oracle(const ShiftSystem& sys, std::int64_t horizon, std::int64_t cap = kDefaultConfigurationCap);
Rational mertens_oracle(const ShiftSystem& sys, std::int64_t horizon,
                        std::int64_t cap = kDefaultConfigurationCap);

}  // namespace orbitzeta
