#include "orbitzeta/torus.hpp"

namespace orbitzeta {

Torus::Torus(Sublattice lattice) : lattice_(std::move(lattice)), size_(lattice_.index_value()) {
  const int d = lattice_.dim();
  std::int64_t stride = 1;
  for (int i = 0; i < d; ++i) {
    strides_.push_back(stride);
    stride *= lattice_.at(i, i);
  }
  steps_.assign(static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(size_)));
  for (std::int64_t cell = 0; cell < size_; ++cell) {
    auto v = representative(cell);
    for (int axis = 0; axis < d; ++axis) {
      v[static_cast<std::size_t>(axis)] += 1;
      steps_[static_cast<std::size_t>(axis)][static_cast<std::size_t>(cell)] = cell_of(v);
      v[static_cast<std::size_t>(axis)] -= 1;
    }
  }
}

std::vector<std::int64_t> Torus::representative(std::int64_t cell) const {
  const int d = lattice_.dim();
  std::vector<std::int64_t> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    v[static_cast<std::size_t>(i)] = cell % lattice_.at(i, i);
    cell /= lattice_.at(i, i);
  }
  return v;
}

std::int64_t Torus::cell_of(std::span<const std::int64_t> v) const {
  const int d = lattice_.dim();
  std::vector<std::int64_t> w(v.begin(), v.end());
  std::int64_t cell = 0;
  for (int i = 0; i < d; ++i) {
    const std::int64_t q = floor_div(w[static_cast<std::size_t>(i)], lattice_.at(i, i));
    if (q != 0) {
      for (int j = i; j < d; ++j) w[static_cast<std::size_t>(j)] -= q * lattice_.at(i, j);
    }
    cell += w[static_cast<std::size_t>(i)] * strides_[static_cast<std::size_t>(i)];
  }
  return cell;
}

std::int64_t Torus::translate(std::int64_t cell, std::int64_t by) const {
  auto v = representative(cell);
  const auto g = representative(by);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += g[i];
  return cell_of(v);
}

}  // namespace orbitzeta
