#pragma once

#include "orbitzeta/lattice.hpp"
#include "orbitzeta/numeric.hpp"

#include <atomic>
#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>

namespace orbitzeta {

using MoebiusValue = BigInt;

/// Closed form on a finite abelian quotient given by its invariant factors:
/// 0 unless every factor is squarefree, otherwise
/// prod_p (-1)^{n_p} p^{n_p (n_p - 1) / 2} with n_p = #{factors divisible by p}.
MoebiusValue moebius_from_invariants(std::span<const std::int64_t> factors);

/// mu(M, L) for L <= M via the quotient's invariant factors.
/// Throws DomainError if L is not contained in M.
MoebiusValue moebius_closed(const Sublattice& upper, const Sublattice& lower);

/// Number of times moebius_closed reached the non-normal vanishing branch.
/// Every subgroup of Z^d is normal, so this stays zero.
std::uint64_t non_normal_branch_hits();

inline constexpr std::int64_t kDefaultIntervalCap = 256;

/// Evaluates mu(M, L) = -sum_{L < X <= M} mu(M, X) literally over the
/// enumerated interval, memoized on (M, X). Safe to share between threads.
class MoebiusOracle {
 public:
  explicit MoebiusOracle(int dim, std::int64_t interval_cap = kDefaultIntervalCap);

  /// Throws CapExceeded when [M : L] exceeds the cap.
  MoebiusValue operator()(const Sublattice& upper, const Sublattice& lower);

  const SublatticeCatalog& catalog() const { return catalog_; }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<Sublattice, Sublattice>& p) const noexcept;
  };

  MoebiusValue evaluate(const Sublattice& upper, const Sublattice& lower);

  std::int64_t cap_;
  SublatticeCatalog catalog_;
  std::mutex mutex_;
  std::unordered_map<std::pair<Sublattice, Sublattice>, MoebiusValue, PairHash> memo_;
};

MoebiusValue moebius_recursive(const Sublattice& upper, const Sublattice& lower,
                               std::int64_t interval_cap = kDefaultIntervalCap);

/// ceil(k^{(log2 k)/2}), an explicit envelope for |mu| on quotients of order k.
BigInt moebius_bound(std::int64_t k);

/// |mu|^2 <= k^{log2 k}, compared in log space with a 1e-12 relative guard.
bool within_moebius_bound(const MoebiusValue& mu, std::int64_t k);

}  // namespace orbitzeta
