#include "orbitzeta/oracle.hpp"

namespace orbitzeta {
namespace {

void require_free_abelian(const ShiftSystem& sys, const Sublattice& l) {
  if (!sys.group.is_free_abelian()) throw UnsupportedOperation("the brute-force oracle only handles Z^d");
  if (l.dim() != sys.group.dim) throw DomainError("lattice dimension does not match the group");
}

std::int64_t configuration_count(int b, std::int64_t cells, std::int64_t cap) {
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < cells; ++i) {
    if (total > cap / b) {
      throw CapExceeded("oracle: " + std::to_string(b) + "^" + std::to_string(cells) +
                        " configurations exceed the cap of " + std::to_string(cap));
    }
    total *= b;
  }
  return total;
}

// translations[g][h] = cell of h + g.
std::vector<std::vector<std::int64_t>> translation_table(const Torus& torus) {
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(torus.size()));
  for (std::int64_t g = 0; g < torus.size(); ++g) {
    auto& row = table[static_cast<std::size_t>(g)];
    row.resize(static_cast<std::size_t>(torus.size()));
    for (std::int64_t h = 0; h < torus.size(); ++h) row[static_cast<std::size_t>(h)] = torus.translate(h, g);
  }
  return table;
}

bool fixed_by(std::span<const int> values, std::span<const std::int64_t> shift) {
  for (std::size_t h = 0; h < values.size(); ++h) {
    if (values[static_cast<std::size_t>(shift[h])] != values[h]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::int64_t>> coset_representatives(const Sublattice& l) {
  const Torus torus(l);
  std::vector<std::vector<std::int64_t>> reps;
  reps.reserve(static_cast<std::size_t>(torus.size()));
  for (std::int64_t c = 0; c < torus.size(); ++c) reps.push_back(torus.representative(c));
  return reps;
}

Sublattice stabilizer(const Torus& torus, std::span<const int> values) {
  if (static_cast<std::int64_t>(values.size()) != torus.size()) {
    throw DomainError("configuration length does not match the torus");
  }
  IntRows generators = torus.lattice().rows();
  for (std::int64_t g = 1; g < torus.size(); ++g) {
    bool fixed = true;
    for (std::int64_t h = 0; h < torus.size() && fixed; ++h) {
      fixed = values[static_cast<std::size_t>(torus.translate(h, g))] == values[static_cast<std::size_t>(h)];
    }
    if (fixed) generators.push_back(torus.representative(g));
  }
  return Sublattice::from_generators(std::move(generators), torus.dim());
}

Sublattice stabilizer(const PeriodicConfiguration& cfg) {
  return stabilizer(Torus(cfg.lattice), cfg.values);
}

BigInt orbit_count_oracle(const ShiftSystem& sys, const Sublattice& l, std::int64_t cap) {
  require_free_abelian(sys, l);
  const Torus torus(l);
  const std::int64_t cells = torus.size();
  const std::int64_t configurations = configuration_count(sys.alphabet, cells, cap);
  const auto shifts = translation_table(torus);

  std::vector<int> values(static_cast<std::size_t>(cells), 0);
  std::int64_t exact = 0;
  for (std::int64_t c = 0; c < configurations; ++c) {
    // Stabilizer equals L iff no nonzero torus translation fixes the configuration.
    bool aperiodic = true;
    for (std::int64_t g = 1; g < cells && aperiodic; ++g) {
      aperiodic = !fixed_by(values, shifts[static_cast<std::size_t>(g)]);
    }
    if (aperiodic) ++exact;

    for (auto& v : values) {
      if (++v < sys.alphabet) break;
      v = 0;
    }
  }
  if (exact % cells != 0) {
    throw ConsistencyError("oracle: aperiodic configurations on [" + l.to_string() +
                           "] do not split into orbits of size [L]");
  }
  return BigInt(exact / cells);
}

BigInt pi_oracle(const ShiftSystem& sys, std::int64_t horizon, std::int64_t cap) {
  BigInt total = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    for (const auto& l : enumerate_sublattices(sys.group.dim, n)) total += orbit_count_oracle(sys, l, cap);
  }
  return total;
}

Rational mertens_oracle(const ShiftSystem& sys, std::int64_t horizon, std::int64_t cap) {
  Rational total = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const BigInt weight = pow(sys.alphabet, static_cast<std::uint64_t>(n));
    for (const auto& l : enumerate_sublattices(sys.group.dim, n)) {
      total += Rational(orbit_count_oracle(sys, l, cap), weight);
    }
  }
  return total;
}

}  // namespace orbitzeta
