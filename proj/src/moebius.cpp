#include "orbitzeta/moebius.hpp"

#include <cmath>
#include <map>

namespace orbitzeta {
namespace {

std::atomic<std::uint64_t> g_non_normal_hits{0};

// In an abelian group the conjugate g l g^{-1} is l, so the normal closure of
// L inside M is generated by L's own rows.
bool is_normal_in(const Sublattice& upper, const Sublattice& lower) {
  IntRows conjugates;
  for (int i = 0; i < upper.dim(); ++i) {
    for (int j = 0; j < lower.dim(); ++j) {
      const auto g = upper.row(i);
      const auto l = lower.row(j);
      std::vector<std::int64_t> c(l.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = g[k] + l[k] - g[k];
      conjugates.push_back(std::move(c));
    }
  }
  auto generators = lower.rows();
  generators.insert(generators.end(), conjugates.begin(), conjugates.end());
  return Sublattice::from_generators(std::move(generators), lower.dim()) == lower;
}

}  // namespace

MoebiusValue moebius_from_invariants(std::span<const std::int64_t> factors) {
  std::map<std::int64_t, std::uint64_t> rank_at_prime;
  for (const std::int64_t f : factors) {
    if (!is_squarefree(f)) return 0;
    for (const std::int64_t p : prime_divisors(f)) ++rank_at_prime[p];
  }
  MoebiusValue mu = 1;
  for (const auto& [p, n] : rank_at_prime) {
    mu *= pow(p, n * (n - 1) / 2);
    if (n % 2 == 1) mu = -mu;
  }
  return mu;
}

MoebiusValue moebius_closed(const Sublattice& upper, const Sublattice& lower) {
  const auto factors = quotient_invariants(upper, lower);
  if (!is_normal_in(upper, lower)) {
    ++g_non_normal_hits;
    return 0;
  }
  return moebius_from_invariants(factors);
}

std::uint64_t non_normal_branch_hits() { return g_non_normal_hits.load(); }

MoebiusOracle::MoebiusOracle(int dim, std::int64_t interval_cap)
    : cap_(interval_cap), catalog_(dim) {}

std::size_t MoebiusOracle::PairHash::operator()(const std::pair<Sublattice, Sublattice>& p) const noexcept {
  const SublatticeHash h;
  return h(p.first) * 31 + h(p.second);
}

MoebiusValue MoebiusOracle::operator()(const Sublattice& upper, const Sublattice& lower) {
  if (!contains(upper, lower)) throw DomainError("moebius: lower lattice is not contained in upper");
  const std::int64_t k = lower.index_value() / upper.index_value();
  if (k > cap_) {
    throw CapExceeded("moebius oracle: quotient of order " + std::to_string(k) +
                      " exceeds interval cap " + std::to_string(cap_));
  }
  return evaluate(upper, lower);
}

MoebiusValue MoebiusOracle::evaluate(const Sublattice& upper, const Sublattice& lower) {
  if (upper == lower) return 1;
  auto key = std::make_pair(upper, lower);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  MoebiusValue sum = 0;
  for (const auto& x : catalog_.interval(lower, upper)) {
    if (x != lower) sum += evaluate(upper, x);
  }
  const MoebiusValue mu = -sum;
  std::lock_guard lock(mutex_);
  memo_.insert_or_assign(std::move(key), mu);
  return mu;
}

MoebiusValue moebius_recursive(const Sublattice& upper, const Sublattice& lower, std::int64_t interval_cap) {
  MoebiusOracle oracle(upper.dim(), interval_cap);
  return oracle(upper, lower);
}

BigInt moebius_bound(std::int64_t k) {
  if (k < 1) throw DomainError("moebius_bound: k must be positive");
  const long double lg = std::log2(static_cast<long double>(k));
  const long double envelope = std::pow(static_cast<long double>(k), lg / 2);
  // Powers of two give exact integers; trim pow() noise before rounding up.
  return BigInt(std::ceil(envelope * (1 - 1e-15L)));
}

bool within_moebius_bound(const MoebiusValue& mu, std::int64_t k) {
  if (mu == 0) return true;
  const long double lhs = 2 * std::log2(static_cast<long double>(abs(mu).convert_to<double>()));
  const long double lg = std::log2(static_cast<long double>(k));
  return lhs <= lg * lg * (1 + 1e-12L) + 1e-12L;
}

}  // namespace orbitzeta
