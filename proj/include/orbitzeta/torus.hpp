#pragma once

#include "orbitzeta/lattice.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace orbitzeta {

/// The finite group Z^d / L with cells numbered by the box transversal
/// prod_i [0, H[i][i]), first coordinate varying fastest.
class Torus {
 public:
  explicit Torus(Sublattice lattice);

  const Sublattice& lattice() const { return lattice_; }
  std::int64_t size() const { return size_; }
  int dim() const { return lattice_.dim(); }

  /// Box representative of a cell.
  std::vector<std::int64_t> representative(std::int64_t cell) const;

  /// Cell containing an arbitrary vector of Z^d.
  std::int64_t cell_of(std::span<const std::int64_t> v) const;

  /// Cell of (representative(cell) + representative(by)).
  std::int64_t translate(std::int64_t cell, std::int64_t by) const;

  /// Cell of representative(cell) + e_axis.
  std::int64_t step(std::int64_t cell, int axis) const {
    return steps_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(cell)];
  }

 private:
  Sublattice lattice_;
  std::int64_t size_;
  std::vector<std::int64_t> strides_;
  std::vector<std::vector<std::int64_t>> steps_;
};

}  // namespace orbitzeta
