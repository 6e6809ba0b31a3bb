#pragma once

#include "orbitzeta/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitzeta {

enum class GroupKind { FreeAbelian, Heisenberg };

/// Which group G, with the rank data and subgroup-growth exponents
/// s_n(G) ~ C n^gamma (log n)^delta used throughout.
struct GroupDescriptor {
  GroupKind kind = GroupKind::FreeAbelian;
  int dim = 1;           // d for Z^d; Hirsch length 3 for Heisenberg
  int rank = 1;          // r(G)
  int abelian_rank = 1;  // d(G), rank of the abelianization
  int gamma = 1;
  int delta = 0;

  static GroupDescriptor free_abelian(int d);
  static GroupDescriptor heisenberg();

  bool is_free_abelian() const { return kind == GroupKind::FreeAbelian; }
  /// "z:3" or "heisenberg".
  std::string name() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Accepts "z:d", "z^d", "zd" and "heisenberg".
GroupDescriptor parse_group(std::string_view text);

/// a_n(G) and s_n(G) for 1 <= n <= horizon. Index 0 of both vectors is an
/// unused zero so that a[n] is a_n.
struct GrowthSequence {
  GroupDescriptor group;
  std::int64_t horizon = 0;
  std::vector<BigInt> a;
  std::vector<BigInt> s;
  std::string method;
};

/// Dirichlet convolution (f * g)(n) = sum_{k | n} f(k) g(n/k) for n <= N,
/// both operands 1-based with slot 0 ignored.
std::vector<BigInt> dirichlet_convolve(std::span<const BigInt> f, std::span<const BigInt> g);

/// Coefficients of zeta(z) zeta(z-1) ... zeta(z-d+1) up to N, by convolving
/// the sequences n^0, ..., n^{d-1}.
std::vector<BigInt> zeta_product_coefficients(int d, std::int64_t horizon);

/// a_n(Z^d) via the divisor-sum recursion a_n(Z^d) = sum_{k|n} a_{n/k}(Z^{d-1}) k^{d-1}.
GrowthSequence a_zd_sieve(int d, std::int64_t horizon);

/// a_n of the discrete Heisenberg group: coefficients of
/// zeta(z) zeta(z-1) zeta(2z-2) zeta(2z-3) / zeta(3z-3).
GrowthSequence a_heisenberg_sieve(std::int64_t horizon);

GrowthSequence growth_sequence(const GroupDescriptor& group, std::int64_t horizon);

struct BoundViolation {
  std::int64_t n = 0;
  std::string bound;
  std::string detail;
};

struct BoundsReport {
  std::int64_t checked = 0;
  std::optional<BoundViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks n^{d(G)-1} <= a_n and a_n < n^{r(G)} (n > 1) for every group, and
/// for Z^d additionally a_n <= 3^d n^{d-1} (ln n)^{d-1} (n >= 2).
/// Stops at the first violation.
BoundsReport check_bounds(const GrowthSequence& seq);

/// Largest horizon accepted by mertens_main_term_exact.
inline constexpr std::int64_t kExactMainTermCap = 10'000;

/// sum_{n <= N} a_n / n as a reduced fraction. Throws CapExceeded past 10^4.
Rational mertens_main_term_exact(const GrowthSequence& seq, std::int64_t horizon);

/// Same sum in double precision with compensated summation.
double mertens_main_term_float(const GrowthSequence& seq, std::int64_t horizon);

/// s_n / (n^gamma (ln n)^delta) with the group's exponents; n >= 2.
double asymptotic_ratio(const GrowthSequence& seq, std::int64_t n);

/// sum_{n=1}^{N} n^e b^n - (b/(b-1)) N^e b^N, exactly.
Rational partial_summation_remainder(int e, int b, std::int64_t horizon);

}  // namespace orbitzeta
