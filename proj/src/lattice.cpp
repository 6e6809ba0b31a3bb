#include "orbitzeta/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace orbitzeta {

Sublattice::Sublattice(int dim, std::vector<std::int64_t> entries)
    : dim_(dim), h_(std::move(entries)) {
  for (int i = 0; i < dim_; ++i) index_ = checked_mul(index_, at(i, i));
}

Sublattice Sublattice::full(int dim) {
  if (dim < 1) throw DomainError("dimension must be at least 1");
  std::vector<std::int64_t> h(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i) h[static_cast<std::size_t>(i * dim + i)] = 1;
  return Sublattice(dim, std::move(h));
}

Sublattice Sublattice::diagonal(std::span<const std::int64_t> entries) {
  const int dim = static_cast<int>(entries.size());
  if (dim < 1) throw DomainError("dimension must be at least 1");
  std::vector<std::int64_t> h(static_cast<std::size_t>(dim * dim), 0);
  for (int i = 0; i < dim; ++i) {
    if (entries[static_cast<std::size_t>(i)] < 1) throw DomainError("diagonal entries must be positive");
    h[static_cast<std::size_t>(i * dim + i)] = entries[static_cast<std::size_t>(i)];
  }
  return Sublattice(dim, std::move(h));
}

Sublattice Sublattice::diagonal(std::initializer_list<std::int64_t> entries) {
  return diagonal(std::span<const std::int64_t>(entries.begin(), entries.size()));
}

Sublattice Sublattice::from_canonical(IntRows rows) {
  const int dim = static_cast<int>(rows.size());
  if (dim < 1) throw DomainError("dimension must be at least 1");
  std::vector<std::int64_t> h;
  h.reserve(static_cast<std::size_t>(dim * dim));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw DomainError("lattice matrix must be square");
    h.insert(h.end(), r.begin(), r.end());
  }
  auto entry = [&](int i, int j) { return h[static_cast<std::size_t>(i * dim + j)]; };
  for (int i = 0; i < dim; ++i) {
    if (entry(i, i) < 1) throw DomainError("diagonal entries must be positive");
    for (int j = 0; j < dim; ++j) {
      if (i > j && entry(i, j) != 0) throw DomainError("matrix is not upper triangular");
      if (i < j && (entry(i, j) < 0 || entry(i, j) >= entry(j, j))) {
        throw DomainError("off-diagonal entry not reduced modulo its column's diagonal");
      }
    }
  }
  return Sublattice(dim, std::move(h));
}

Sublattice Sublattice::from_generators(IntRows generators, int dim) {
  return from_canonical(hermite_form(std::move(generators), dim));
}

IntRows Sublattice::rows() const {
  IntRows out;
  for (int i = 0; i < dim_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

std::string Sublattice::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    if (i != 0) os << "; ";
    for (int j = 0; j < dim_; ++j) {
      if (j != 0) os << ' ';
      os << at(i, j);
    }
  }
  return os.str();
}

std::size_t SublatticeHash::operator()(const Sublattice& l) const noexcept {
  std::size_t seed = static_cast<std::size_t>(l.dim());
  for (int i = 0; i < l.dim(); ++i) {
    for (const std::int64_t x : l.row(i)) {
      seed ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
  }
  return seed;
}

Sublattice parse_sublattice(std::string_view text, bool canonicalize) {
  IntRows rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(';', start), text.size());
    std::istringstream in{std::string(text.substr(start, stop - start))};
    std::vector<std::int64_t> row;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw DomainError("not an integer: '" + token + "'");
      }
      if (used != token.size()) throw DomainError("not an integer: '" + token + "'");
      row.push_back(value);
    }
    if (row.empty()) throw DomainError("empty row in lattice text");
    rows.push_back(std::move(row));
    start = stop + 1;
  }
  const int dim = static_cast<int>(rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw DomainError("ragged lattice rows");
  }
  if (canonicalize) return Sublattice::from_generators(std::move(rows), dim);
  return Sublattice::from_canonical(std::move(rows));
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small;
  std::vector<std::int64_t> large;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Sublattice> enumerate_sublattices(int dim, std::int64_t n) {
  if (dim < 1) throw DomainError("dimension must be at least 1");
  if (n < 1) throw DomainError("index must be at least 1");

  const auto d = static_cast<std::size_t>(dim);
  std::vector<Sublattice> out;
  std::vector<std::int64_t> h(d * d, 0);

  // Off-diagonal slots (i, j), i < j, each ranging over [0, H[j][j]).
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  }

  std::function<void(std::size_t)> fill_offsets = [&](std::size_t s) {
    if (s == slots.size()) {
      out.push_back(Sublattice::from_canonical([&] {
        IntRows rows(d);
        for (std::size_t i = 0; i < d; ++i) rows[i].assign(h.begin() + static_cast<std::ptrdiff_t>(i * d),
                                                         h.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
        return rows;
      }()));
      return;
    }
    const auto [i, j] = slots[s];
    for (std::int64_t v = 0; v < h[j * d + j]; ++v) {
      h[i * d + j] = v;
      fill_offsets(s + 1);
    }
    h[i * d + j] = 0;
  };

  std::function<void(std::size_t, std::int64_t)> fill_diagonal = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == d) {
      h[i * d + i] = rest;
      fill_offsets(0);
      return;
    }
    for (const std::int64_t k : divisors(rest)) {
      h[i * d + i] = k;
      fill_diagonal(i + 1, rest / k);
    }
  };
  fill_diagonal(0, n);

  std::sort(out.begin(), out.end());
  return out;
}

BigInt index(const Sublattice& l) { return BigInt(l.index_value()); }

std::optional<IntRows> coordinates_in(const Sublattice& m, const Sublattice& l) {
  if (m.dim() != l.dim()) throw DomainError("dimension mismatch");
  const int d = m.dim();
  IntRows coords;
  coords.reserve(static_cast<std::size_t>(d));
  std::vector<std::int64_t> v(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    const auto src = l.row(r);
    v.assign(src.begin(), src.end());
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
      const std::int64_t pivot = m.at(i, i);
      if (v[static_cast<std::size_t>(i)] % pivot != 0) return std::nullopt;
      const std::int64_t q = v[static_cast<std::size_t>(i)] / pivot;
      c[static_cast<std::size_t>(i)] = q;
      if (q == 0) continue;
      for (int j = i; j < d; ++j) {
        v[static_cast<std::size_t>(j)] =
            checked_add(v[static_cast<std::size_t>(j)], checked_mul(-q, m.at(i, j)));
      }
    }
    coords.push_back(std::move(c));
  }
  return coords;
}

bool contains(const Sublattice& m, const Sublattice& l) {
  if (m.dim() != l.dim()) throw DomainError("dimension mismatch");
  if (l.index_value() % m.index_value() != 0) return false;
  return coordinates_in(m, l).has_value();
}

std::vector<std::int64_t> quotient_invariants(const Sublattice& m, const Sublattice& l) {
  auto coords = coordinates_in(m, l);
  if (!coords) throw DomainError("quotient_invariants: lower lattice is not contained in upper");
  return smith_invariants(std::move(*coords));
}

std::vector<Sublattice> superlattices(const Sublattice& l) {
  return SublatticeCatalog(l.dim()).superlattices(l);
}

SublatticeCatalog::SublatticeCatalog(int dim) : dim_(dim) {
  if (dim < 1) throw DomainError("dimension must be at least 1");
}

const std::vector<Sublattice>& SublatticeCatalog::at_index(std::int64_t n) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = by_index_.find(n); it != by_index_.end()) return it->second;
  }
  auto lattices = enumerate_sublattices(dim_, n);
  std::lock_guard lock(mutex_);
  // std::map nodes are stable, so the returned reference outlives later inserts.
  return by_index_.try_emplace(n, std::move(lattices)).first->second;
}

std::vector<Sublattice> SublatticeCatalog::superlattices(const Sublattice& l) const {
  return interval(l, Sublattice::full(l.dim()));
}

std::vector<Sublattice> SublatticeCatalog::interval(const Sublattice& l, const Sublattice& upper) const {
  if (l.dim() != dim_ || upper.dim() != dim_) throw DomainError("dimension mismatch");
  std::vector<Sublattice> out;
  if (!contains(upper, l)) return out;
  for (const std::int64_t k : divisors(l.index_value())) {
    if (k % upper.index_value() != 0) continue;
    for (const auto& m : at_index(k)) {
      if (contains(m, l) && contains(upper, m)) out.push_back(m);
    }
  }
  return out;
}

}  // namespace orbitzeta
