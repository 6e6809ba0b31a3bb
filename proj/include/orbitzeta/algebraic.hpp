#pragma once

#include "orbitzeta/lattice.hpp"
#include "orbitzeta/numeric.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace orbitzeta {

/// Dense matrix over the two-element field, rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void flip(std::size_t r, std::size_t c);

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;
  std::size_t kernel_dimension() const { return cols_ - rank(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// L-periodic points of Ledrappier's action: binary configurations with
/// x_h + x_{h+e1} + x_{h+e2} = 0 everywhere, counted as 2^{dim ker}.
struct LedrappierFixReport {
  Sublattice lattice;
  std::int64_t kernel_dim = 0;
  BigInt fix_count;
};

/// Requires d = 2.
LedrappierFixReport ledrappier_fix(const Sublattice& l);

enum class SolenoidFamily { Horizontal, Vertical };

SolenoidFamily parse_solenoid_family(std::string_view text);

/// Fixed points of the x2/shift action on the lattice (n,0),(0,1)
/// (horizontal: 2^n - 1) or (1,0),(0,n) (vertical: 1).
BigInt solenoid_fix(SolenoidFamily family, std::int64_t n);

/// Lattice of the given family member.
Sublattice solenoid_lattice(SolenoidFamily family, std::int64_t n);

/// Dispatches on the lattice's shape; any other shape throws UnsupportedOperation.
BigInt solenoid_fix(const Sublattice& l);

}  // namespace orbitzeta
