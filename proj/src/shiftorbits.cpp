#include "orbitzeta/shiftorbits.hpp"

#include "orbitzeta/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace orbitzeta {
namespace {

void require_orbit_level(const ShiftSystem& sys) {
  if (!sys.group.is_free_abelian()) {
    throw UnsupportedOperation("orbit-level statistics need a free abelian group; " + sys.group.name() +
                               " only exposes its growth sequence and Mertens main term");
  }
}

void require_dim(const ShiftSystem& sys, const Sublattice& l) {
  require_orbit_level(sys);
  if (l.dim() != sys.group.dim) throw DomainError("lattice dimension does not match the group");
}

// Evaluates fn(i) for i in [0, count) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
}

}  // namespace

ShiftSystem ShiftSystem::full_shift(GroupDescriptor group, int alphabet) {
  if (alphabet < 2) throw DomainError("alphabet size must be at least 2");
  return {group, alphabet};
}

double ShiftSystem::entropy() const { return std::log(static_cast<double>(alphabet)); }

OrbitCounter::OrbitCounter(ShiftSystem sys) : sys_(sys), catalog_((require_orbit_level(sys), sys.group.dim)) {}

BigInt OrbitCounter::proper_sum(const Sublattice& l) const {
  require_dim(sys_, l);
  BigInt sum = 0;
  for (const auto& m : catalog_.superlattices(l)) {
    if (m == l) continue;
    const MoebiusValue mu = moebius_closed(m, l);
    if (mu != 0) sum += mu * pow(sys_.alphabet, static_cast<std::uint64_t>(m.index_value()));
  }
  return sum;
}

BigInt OrbitCounter::orbit_count(const Sublattice& l) const {
  const BigInt total = fix_count(sys_, l) + proper_sum(l);
  const BigInt idx = l.index_value();
  if (total % idx != 0 || total < 0) {
    throw ConsistencyError("orbit count for [" + l.to_string() + "] is not a nonnegative integer: " +
                           total.str() + "/" + idx.str());
  }
  return total / idx;
}

BigInt fix_count(const ShiftSystem& sys, const Sublattice& l) {
  require_dim(sys, l);
  return pow(sys.alphabet, static_cast<std::uint64_t>(l.index_value()));
}

BigInt orbit_count(const ShiftSystem& sys, const Sublattice& l) { return OrbitCounter(sys).orbit_count(l); }

OrbitTable orbit_table(const ShiftSystem& sys, std::int64_t horizon, const OrbitOptions& options) {
  require_orbit_level(sys);
  if (horizon < 1) throw DomainError("horizon must be at least 1");
  if (horizon > options.horizon_cap) {
    throw CapExceeded("orbit horizon " + std::to_string(horizon) + " exceeds the exact-mode cap " +
                      std::to_string(options.horizon_cap));
  }

  const OrbitCounter counter(sys);
  const BigInt b = sys.alphabet;

  OrbitTable table{sys, horizon, {}};
  BigInt pi_acc = 0;
  Rational mertens_acc = 0;
  Rational main_acc = 0;
  Rational psi_numerator = 0;  // sum a_m b^m / m
  Rational sigma_acc = 0;      // Sigma_N
  Rational delta_acc = 0;

  for (std::int64_t n = 1; n <= horizon; ++n) {
    const auto& lattices = counter.catalog().at_index(n);
    std::vector<BigInt> proper(lattices.size());
    parallel_for(lattices.size(), options.threads,
                 [&](std::size_t i) { proper[i] = counter.proper_sum(lattices[i]); });

    const BigInt bn = pow(b, static_cast<std::uint64_t>(n));
    BigInt orbits = 0;
    BigInt proper_total = 0;
    for (std::size_t i = 0; i < lattices.size(); ++i) {
      const BigInt total = bn + proper[i];
      if (total % n != 0 || total < 0) {
        throw ConsistencyError("orbit count for [" + lattices[i].to_string() + "] is not a nonnegative integer");
      }
      orbits += total / n;
      proper_total += proper[i];
    }

    const BigInt a_n = lattices.size();
    pi_acc += orbits;
    mertens_acc += Rational(orbits, bn);
    main_acc += Rational(a_n, BigInt(n));
    psi_numerator += Rational(a_n * bn, BigInt(n));
    sigma_acc += Rational(proper_total, BigInt(n));
    delta_acc += Rational(proper_total, bn * n);

    // pi_T(N) = sum a_n b^n / n + Sigma_N and M_T(N) = sum a_n / n + Delta_N.
    if (Rational(pi_acc) != psi_numerator + sigma_acc) {
      throw ConsistencyError("pi_T(" + std::to_string(n) + ") disagrees with main term plus Sigma_N");
    }
    if (mertens_acc != main_acc + delta_acc) {
      throw ConsistencyError("M_T(" + std::to_string(n) + ") disagrees with main term plus Delta_N");
    }

    OrbitRow row;
    row.n = n;
    row.a_n = a_n;
    row.orbits = orbits;
    row.pi = pi_acc;
    row.mertens = mertens_acc;
    row.main_term = main_acc;
    row.phi = Rational(pi_acc, bn);
    row.psi = psi_numerator / Rational(bn);
    row.sigma_over_bN = sigma_acc / Rational(bn);
    row.delta = delta_acc;
    table.rows.push_back(std::move(row));
  }
  return table;
}

BigInt pi(const ShiftSystem& sys, std::int64_t horizon) { return orbit_table(sys, horizon).rows.back().pi; }

Rational mertens(const ShiftSystem& sys, std::int64_t horizon) {
  return orbit_table(sys, horizon).rows.back().mertens;
}

ErrorTerms error_terms(const ShiftSystem& sys, std::int64_t horizon) {
  const auto table = orbit_table(sys, horizon);
  const auto& last = table.rows.back();
  return {last.sigma_over_bN, last.delta};
}

std::vector<FigurePoint> figure_series(const ShiftSystem& sys, std::int64_t horizon, const OrbitOptions& options) {
  const auto table = orbit_table(sys, horizon, options);
  std::vector<FigurePoint> points;
  points.reserve(table.rows.size());
  for (const auto& row : table.rows) points.push_back({row.n, row.phi, row.psi});
  return points;
}

}  // namespace orbitzeta
