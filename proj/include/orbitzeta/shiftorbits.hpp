#pragma once

#include "orbitzeta/growth.hpp"
#include "orbitzeta/lattice.hpp"
#include "orbitzeta/numeric.hpp"

#include <cstdint>
#include <vector>

namespace orbitzeta {

/// The full G-shift on b symbols; its entropy is ln b.
struct ShiftSystem {
  GroupDescriptor group;
  int alphabet = 2;

  static ShiftSystem full_shift(GroupDescriptor group, int alphabet);
  static ShiftSystem full_shift_zd(int d, int alphabet) {
    return full_shift(GroupDescriptor::free_abelian(d), alphabet);
  }

  double entropy() const;
};

/// Default exact-mode horizon cap for orbit tables.
inline constexpr std::int64_t kDefaultOrbitHorizonCap = 120;

/// b^{[L]}: the configurations fixed by every element of L.
BigInt fix_count(const ShiftSystem& sys, const Sublattice& l);

/// O_T(L) = (1/[L]) sum_{M >= L} mu(M, L) F_T(M); the division is asserted exact.
BigInt orbit_count(const ShiftSystem& sys, const Sublattice& l);

/// pi_T(N): number of closed orbits of size at most N.
BigInt pi(const ShiftSystem& sys, std::int64_t horizon);

/// M_T(N) = sum_{|tau| <= N} b^{-|tau|}.
Rational mertens(const ShiftSystem& sys, std::int64_t horizon);

/// The remainders in pi_T(N) = sum a_n b^n / n + Sigma_N and
/// M_T(N) = sum a_n / n + Delta_N.
struct ErrorTerms {
  Rational sigma_over_bN;
  Rational delta;
};

ErrorTerms error_terms(const ShiftSystem& sys, std::int64_t horizon);

struct OrbitRow {
  std::int64_t n = 0;
  BigInt a_n;
  BigInt orbits;       // sum_{[L] = n} O_T(L)
  BigInt pi;           // pi_T(n)
  Rational mertens;    // M_T(n)
  Rational main_term;  // sum_{m <= n} a_m / m
  Rational phi;        // pi_T(n) / b^n
  Rational psi;        // b^{-n} sum_{m <= n} a_m b^m / m
  Rational sigma_over_bN;
  Rational delta;
};

struct OrbitTable {
  ShiftSystem system;
  std::int64_t horizon = 0;
  std::vector<OrbitRow> rows;  // rows[i].n == i + 1
};

struct OrbitOptions {
  std::int64_t horizon_cap = kDefaultOrbitHorizonCap;
  unsigned threads = 1;
};

/// Builds every row 1..N from lattice and Moebius data, then cross-checks
/// both error-term identities; a mismatch throws ConsistencyError.
OrbitTable orbit_table(const ShiftSystem& sys, std::int64_t horizon, const OrbitOptions& options = {});

struct FigurePoint {
  std::int64_t n = 0;
  Rational phi;
  Rational psi;
};

/// (n, phi(n), psi(n)) for 1 <= n <= N.
std::vector<FigurePoint> figure_series(const ShiftSystem& sys, std::int64_t horizon,
                                       const OrbitOptions& options = {});

/// Per-lattice evaluator sharing one enumeration cache.
class OrbitCounter {
 public:
  explicit OrbitCounter(ShiftSystem sys);

  const ShiftSystem& system() const { return sys_; }
  const SublatticeCatalog& catalog() const { return catalog_; }

  /// sum_{M > L} mu(M, L) b^{[M]}.
  BigInt proper_sum(const Sublattice& l) const;
  BigInt orbit_count(const Sublattice& l) const;

 private:
  ShiftSystem sys_;
  SublatticeCatalog catalog_;
};

}  // namespace orbitzeta
