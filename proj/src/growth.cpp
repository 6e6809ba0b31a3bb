#include "orbitzeta/growth.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace orbitzeta {
namespace {

void require_horizon(std::int64_t horizon) {
  if (horizon < 1) throw DomainError("horizon must be at least 1");
}

std::vector<BigInt> partial_sums(const std::vector<BigInt>& a) {
  std::vector<BigInt> s(a.size());
  for (std::size_t n = 1; n < a.size(); ++n) s[n] = s[n - 1] + a[n];
  return s;
}

// Sequence supported on perfect powers m^k (m^k <= N) with value weight(m).
template <class Weight>
std::vector<BigInt> power_supported(std::int64_t horizon, int k, Weight weight) {
  std::vector<BigInt> f(static_cast<std::size_t>(horizon) + 1);
  for (std::int64_t m = 1;; ++m) {
    std::int64_t p = 1;
    bool past = false;
    for (int i = 0; i < k; ++i) {
      p *= m;
      if (p > horizon) {
        past = true;
        break;
      }
    }
    if (past) break;
    f[static_cast<std::size_t>(p)] = weight(m);
  }
  return f;
}

}  // namespace

GroupDescriptor GroupDescriptor::free_abelian(int d) {
  if (d < 1) throw DomainError("Z^d needs d >= 1");
  return {GroupKind::FreeAbelian, d, d, d, d, 0};
}

GroupDescriptor GroupDescriptor::heisenberg() {
  return {GroupKind::Heisenberg, 3, 3, 2, 2, 1};
}

std::string GroupDescriptor::name() const {
  if (kind == GroupKind::Heisenberg) return "heisenberg";
  return "z:" + std::to_string(dim);
}

GroupDescriptor parse_group(std::string_view text) {
  std::string t;
  for (const char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "heisenberg" || t == "h3") return GroupDescriptor::heisenberg();
  std::string_view rest = t;
  if (rest.starts_with('z')) {
    rest.remove_prefix(1);
    if (rest.starts_with(':') || rest.starts_with('^')) rest.remove_prefix(1);
    if (!rest.empty() && rest.find_first_not_of("0123456789") == std::string_view::npos && rest.size() < 4) {
      return GroupDescriptor::free_abelian(std::stoi(std::string(rest)));
    }
  }
  throw DomainError("unknown group '" + std::string(text) + "' (expected z:<d> or heisenberg)");
}

std::vector<BigInt> dirichlet_convolve(std::span<const BigInt> f, std::span<const BigInt> g) {
  const std::size_t n_max = std::min(f.size(), g.size()) - 1;
  std::vector<BigInt> h(n_max + 1);
  BigInt term;
  for (std::size_t k = 1; k <= n_max; ++k) {
    if (f[k] == 0) continue;
    for (std::size_t m = 1; k * m <= n_max; ++m) {
      if (g[m] == 0) continue;
      term = f[k];
      term *= g[m];
      h[k * m] += term;
    }
  }
  return h;
}

std::vector<BigInt> zeta_product_coefficients(int d, std::int64_t horizon) {
  if (d < 1) throw DomainError("zeta product needs d >= 1");
  require_horizon(horizon);
  const auto size = static_cast<std::size_t>(horizon) + 1;
  std::vector<BigInt> acc(size, 1);
  acc[0] = 0;
  for (int shift = 1; shift < d; ++shift) {
    std::vector<BigInt> power(size);
    for (std::size_t n = 1; n < size; ++n) power[n] = pow(static_cast<std::int64_t>(n), static_cast<std::uint64_t>(shift));
    acc = dirichlet_convolve(acc, power);
  }
  return acc;
}

GrowthSequence a_zd_sieve(int d, std::int64_t horizon) {
  if (d < 1) throw DomainError("Z^d needs d >= 1");
  require_horizon(horizon);
  const auto size = static_cast<std::size_t>(horizon) + 1;
  std::vector<BigInt> a(size, 1);
  a[0] = 0;
  BigInt term;
  for (int dim = 2; dim <= d; ++dim) {
    std::vector<BigInt> next(size);
    for (std::size_t k = 1; k < size; ++k) {
      const BigInt weight = pow(static_cast<std::int64_t>(k), static_cast<std::uint64_t>(dim - 1));
      for (std::size_t m = 1; k * m < size; ++m) {
        term = a[m];
        term *= weight;
        next[k * m] += term;
      }
    }
    a = std::move(next);
  }
  GrowthSequence seq{GroupDescriptor::free_abelian(d), horizon, std::move(a), {}, "divisor-sum sieve"};
  seq.s = partial_sums(seq.a);
  return seq;
}

GrowthSequence a_heisenberg_sieve(std::int64_t horizon) {
  require_horizon(horizon);
  const auto size = static_cast<std::size_t>(horizon) + 1;

  // sigma(n): coefficients of zeta(z) zeta(z-1).
  std::vector<BigInt> a(size);
  for (std::size_t k = 1; k < size; ++k) {
    for (std::size_t m = k; m < size; m += k) a[m] += k;
  }

  const auto square_weight = power_supported(horizon, 2, [](std::int64_t m) { return pow(m, 2); });
  const auto square_weight3 = power_supported(horizon, 2, [](std::int64_t m) { return pow(m, 3); });
  const auto inverse_cube = power_supported(horizon, 3, [](std::int64_t m) {
    return BigInt(classical_moebius(m)) * pow(m, 3);
  });
  a = dirichlet_convolve(square_weight, a);
  a = dirichlet_convolve(square_weight3, a);
  a = dirichlet_convolve(inverse_cube, a);

  GrowthSequence seq{GroupDescriptor::heisenberg(), horizon, std::move(a), {}, "euler-product convolution"};
  seq.s = partial_sums(seq.a);
  return seq;
}

GrowthSequence growth_sequence(const GroupDescriptor& group, std::int64_t horizon) {
  if (group.kind == GroupKind::Heisenberg) return a_heisenberg_sieve(horizon);
  return a_zd_sieve(group.dim, horizon);
}

BoundsReport check_bounds(const GrowthSequence& seq) {
  BoundsReport report;
  const auto& g = seq.group;
  for (std::int64_t n = 1; n <= seq.horizon; ++n) {
    const BigInt& an = seq.a[static_cast<std::size_t>(n)];
    auto fail = [&](std::string bound, std::string detail) {
      report.violation = BoundViolation{n, std::move(bound), std::move(detail)};
    };

    const BigInt lower = pow(n, static_cast<std::uint64_t>(g.abelian_rank - 1));
    if (an < lower) {
      fail("lower n^(d(G)-1)", "a_n=" + an.str() + " < " + lower.str());
      return report;
    }
    if (n > 1) {
      const BigInt upper = pow(n, static_cast<std::uint64_t>(g.rank));
      if (an >= upper) {
        fail("upper n^r(G)", "a_n=" + an.str() + " >= " + upper.str());
        return report;
      }
    }
    if (g.is_free_abelian() && n >= 2) {
      const long double ln = std::log(static_cast<long double>(n));
      const long double envelope = std::pow(3.0L, g.dim) * std::pow(static_cast<long double>(n) * ln, g.dim - 1);
      if (an.convert_to<long double>() > envelope) {
        std::ostringstream os;
        os << "a_n=" << an.str() << " > " << static_cast<double>(envelope);
        fail("upper 3^d n^(d-1) (ln n)^(d-1)", os.str());
        return report;
      }
    }
    ++report.checked;
  }
  return report;
}

Rational mertens_main_term_exact(const GrowthSequence& seq, std::int64_t horizon) {
  if (horizon > kExactMainTermCap) {
    throw CapExceeded("exact main term refuses horizons above " + std::to_string(kExactMainTermCap));
  }
  if (horizon > seq.horizon) throw DomainError("horizon exceeds the computed sequence");
  // Accumulate over the common denominator lcm(1..N) to avoid a gcd per step.
  BigInt lcm = 1;
  for (std::int64_t n = 2; n <= horizon; ++n) lcm = boost::multiprecision::lcm(lcm, BigInt(n));
  BigInt numerator = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) numerator += seq.a[static_cast<std::size_t>(n)] * (lcm / n);
  return Rational(numerator, lcm);
}

double mertens_main_term_float(const GrowthSequence& seq, std::int64_t horizon) {
  if (horizon > seq.horizon) throw DomainError("horizon exceeds the computed sequence");
  CompensatedSum sum;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    sum.add(seq.a[static_cast<std::size_t>(n)].convert_to<double>() / static_cast<double>(n));
  }
  return sum.value();
}

double asymptotic_ratio(const GrowthSequence& seq, std::int64_t n) {
  if (n < 2) throw DomainError("asymptotic_ratio needs n >= 2");
  if (n > seq.horizon) throw DomainError("sample point exceeds the computed sequence");
  const long double scale = std::pow(static_cast<long double>(n), seq.group.gamma) *
                            std::pow(std::log(static_cast<long double>(n)), seq.group.delta);
  return static_cast<double>(seq.s[static_cast<std::size_t>(n)].convert_to<long double>() / scale);
}

Rational partial_summation_remainder(int e, int b, std::int64_t horizon) {
  if (b < 2) throw DomainError("partial summation needs b >= 2");
  if (e < 0) throw DomainError("exponent must be nonnegative");
  require_horizon(horizon);
  BigInt lhs = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    lhs += pow(n, static_cast<std::uint64_t>(e)) * pow(b, static_cast<std::uint64_t>(n));
  }
  const Rational main = Rational(BigInt(b), BigInt(b - 1)) *
                        Rational(pow(horizon, static_cast<std::uint64_t>(e)) *
                                 pow(b, static_cast<std::uint64_t>(horizon)));
  return Rational(lhs) - main;
}

}  // namespace orbitzeta
