#include "orbitzeta/normal_form.hpp"

#include "orbitzeta/numeric.hpp"

#include <cstdlib>
#include <utility>

namespace orbitzeta {
namespace {

void axpy_row(std::vector<std::int64_t>& target,
              const std::vector<std::int64_t>& source, std::int64_t factor) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    target[j] = checked_add(target[j], checked_mul(-factor, source[j]));
  }
}

}  // namespace

IntRows hermite_form(IntRows rows, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  for (const auto& r : rows) {
    if (r.size() != d) throw DomainError("generator has wrong dimension");
  }
  if (rows.size() < d) throw DomainError("too few generators for a full-rank lattice");

  for (std::size_t col = 0; col < d; ++col) {
    // Euclid on column `col` among rows col..end until only the pivot is nonzero.
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t r = col; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (pivot == rows.size() ||
            std::llabs(rows[r][col]) < std::llabs(rows[pivot][col])) {
          pivot = r;
        }
      }
      if (pivot == rows.size()) throw DomainError("generators do not span a full-rank lattice");
      std::swap(rows[col], rows[pivot]);

      bool cleared = true;
      for (std::size_t r = col + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        axpy_row(rows[r], rows[col], rows[r][col] / rows[col][col]);
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (rows[col][col] < 0) {
      for (auto& x : rows[col]) x = -x;
    }
  }
  rows.resize(d);

  for (std::size_t col = 1; col < d; ++col) {
    for (std::size_t r = 0; r < col; ++r) {
      const std::int64_t q = floor_div(rows[r][col], rows[col][col]);
      if (q != 0) axpy_row(rows[r], rows[col], q);
    }
  }
  return rows;
}

std::vector<std::int64_t> smith_invariants(IntRows a) {
  const std::size_t n = a.size();
  for (const auto& r : a) {
    if (r.size() != n) throw DomainError("smith_invariants needs a square matrix");
  }

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] == 0) continue;
          if (pi == n || std::llabs(a[i][j]) < std::llabs(a[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) throw DomainError("smith_invariants needs a nonsingular matrix");
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool done = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        axpy_row(a[i], a[t], a[i][t] / a[t][t]);
        if (a[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = 0; i < n; ++i) {
          a[i][j] = checked_add(a[i][j], checked_mul(-q, a[i][t]));
        }
        if (a[t][j] != 0) done = false;
      }
      if (!done) continue;

      // Divisibility: fold an offending row into the pivot row and repeat.
      for (std::size_t i = t + 1; i < n && done; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            axpy_row(a[t], a[i], -1);
            done = false;
            break;
          }
        }
      }
      if (done) break;
    }
  }

  std::vector<std::int64_t> factors;
  for (std::size_t t = 0; t < n; ++t) {
    const std::int64_t f = std::llabs(a[t][t]);
    if (f != 1) factors.push_back(f);
  }
  return factors;
}

}  // namespace orbitzeta
