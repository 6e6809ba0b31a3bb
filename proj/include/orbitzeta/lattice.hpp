#pragma once

#include "orbitzeta/normal_form.hpp"
#include "orbitzeta/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitzeta {

/// A finite-index subgroup of Z^d, held in canonical Hermite form: rows are
/// generators, upper triangular, H[i][i] >= 1 and 0 <= H[i][j] < H[j][j]
/// for i < j. Two values compare equal iff they are the same subgroup.
class Sublattice {
 public:
  /// Z^d itself.
  static Sublattice full(int dim);

  /// Diagonal lattice diag(d_1, ..., d_k).
  static Sublattice diagonal(std::span<const std::int64_t> entries);
  static Sublattice diagonal(std::initializer_list<std::int64_t> entries);

  /// Adopts an already-canonical d x d matrix; throws DomainError otherwise.
  static Sublattice from_canonical(IntRows rows);

  /// Canonical form of the lattice spanned by arbitrary generators.
  static Sublattice from_generators(IntRows generators, int dim);

  int dim() const { return dim_; }
  std::int64_t at(int i, int j) const { return h_[static_cast<std::size_t>(i * dim_ + j)]; }
  std::span<const std::int64_t> row(int i) const {
    return {h_.data() + static_cast<std::ptrdiff_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  IntRows rows() const;

  /// [Z^d : L] as a machine integer (always fits for canonical values).
  std::int64_t index_value() const { return index_; }

  /// "h00 h01; 0 h11" text form.
  std::string to_string() const;

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
  friend std::strong_ordering operator<=>(const Sublattice& a, const Sublattice& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.h_ <=> b.h_;
  }

 private:
  Sublattice(int dim, std::vector<std::int64_t> entries);

  int dim_ = 0;
  std::int64_t index_ = 1;
  std::vector<std::int64_t> h_;
};

struct SublatticeHash {
  std::size_t operator()(const Sublattice& l) const noexcept;
};

/// Parses "2 1; 0 3". Non-canonical input is rejected unless `canonicalize`
/// is set, in which case the rows are treated as generators.
Sublattice parse_sublattice(std::string_view text, bool canonicalize = false);

/// All sublattices of Z^d of index exactly n, canonical, sorted by entries.
std::vector<Sublattice> enumerate_sublattices(int dim, std::int64_t n);

/// [Z^d : L].
BigInt index(const Sublattice& l);

/// True iff L is a subgroup of M (equivalently M >= L in the poset).
bool contains(const Sublattice& m, const Sublattice& l);

/// Rows of L written in the basis of M, or nullopt when L is not inside M.
std::optional<IntRows> coordinates_in(const Sublattice& m, const Sublattice& l);

/// Nonunit invariant factors of M/L. Throws DomainError if L is not in M.
std::vector<std::int64_t> quotient_invariants(const Sublattice& m, const Sublattice& l);

/// Every M with L <= M <= Z^d, sorted by (index, entries).
std::vector<Sublattice> superlattices(const Sublattice& l);

/// Thread-safe memo of enumerate_sublattices for one dimension.
class SublatticeCatalog {
 public:
  explicit SublatticeCatalog(int dim);

  int dim() const { return dim_; }
  const std::vector<Sublattice>& at_index(std::int64_t n) const;

  /// Same contract as the free superlattices(), served from the memo.
  std::vector<Sublattice> superlattices(const Sublattice& l) const;

  /// Sublattices M with L <= M <= upper.
  std::vector<Sublattice> interval(const Sublattice& l, const Sublattice& upper) const;

 private:
  int dim_;
  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, std::vector<Sublattice>> by_index_;
};

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace orbitzeta
