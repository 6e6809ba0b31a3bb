#include "orbitzeta/algebraic.hpp"

#include "orbitzeta/torus.hpp"

#include <bit>

namespace orbitzeta {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return ((bits_[r * words_ + c / 64] >> (c % 64)) & 1U) != 0;
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

std::size_t Gf2Matrix::rank() const {
  std::vector<std::uint64_t> m = bits_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && (m[pivot * words_ + w] & mask) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < words_; ++k) std::swap(m[pivot * words_ + k], m[rank * words_ + k]);
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if ((m[r * words_ + w] & mask) == 0) continue;
      // Columns left of w are already zero in both rows.
      for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
    }
    ++rank;
  }
  return rank;
}

LedrappierFixReport ledrappier_fix(const Sublattice& l) {
  if (l.dim() != 2) throw DomainError("Ledrappier's action is a Z^2-action");
  const Torus torus(l);
  const auto cells = static_cast<std::size_t>(torus.size());
  Gf2Matrix relations(cells, cells);
  for (std::size_t h = 0; h < cells; ++h) {
    const auto cell = static_cast<std::int64_t>(h);
    relations.flip(h, h);
    relations.flip(h, static_cast<std::size_t>(torus.step(cell, 0)));
    relations.flip(h, static_cast<std::size_t>(torus.step(cell, 1)));
  }
  const auto kernel = static_cast<std::int64_t>(relations.kernel_dimension());
  return {l, kernel, pow(2, static_cast<std::uint64_t>(kernel))};
}

SolenoidFamily parse_solenoid_family(std::string_view text) {
  if (text == "horizontal") return SolenoidFamily::Horizontal;
  if (text == "vertical") return SolenoidFamily::Vertical;
  throw DomainError("solenoid family must be 'horizontal' or 'vertical'");
}

Sublattice solenoid_lattice(SolenoidFamily family, std::int64_t n) {
  if (n < 1) throw DomainError("solenoid parameter must be at least 1");
  return family == SolenoidFamily::Horizontal ? Sublattice::diagonal({n, 1}) : Sublattice::diagonal({1, n});
}

BigInt solenoid_fix(SolenoidFamily family, std::int64_t n) {
  if (n < 1) throw DomainError("solenoid parameter must be at least 1");
  if (family == SolenoidFamily::Horizontal) return pow(2, static_cast<std::uint64_t>(n)) - 1;
  return 1;
}

BigInt solenoid_fix(const Sublattice& l) {
  if (l.dim() == 2 && l.at(0, 1) == 0) {
    if (l.at(1, 1) == 1) return solenoid_fix(SolenoidFamily::Horizontal, l.at(0, 0));
    if (l.at(0, 0) == 1) return solenoid_fix(SolenoidFamily::Vertical, l.at(1, 1));
  }
  throw UnsupportedOperation("solenoid fixed points are only known on (n,0),(0,1) and (1,0),(0,n); got [" +
                             l.to_string() + "]");
}

}  // namespace orbitzeta
