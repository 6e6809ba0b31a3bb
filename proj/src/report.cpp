#include "orbitzeta/report.hpp"

namespace orbitzeta {

void write_growth_csv(std::ostream& out, const GrowthSequence& seq) {
  out << "n,a_n,s_n\n";
  for (std::int64_t n = 1; n <= seq.horizon; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out << n << ',' << seq.a[i] << ',' << seq.s[i] << '\n';
  }
}

nlohmann::json growth_json(const GrowthSequence& seq) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::int64_t n = 1; n <= seq.horizon; ++n) {
    const auto i = static_cast<std::size_t>(n);
    rows.push_back({{"n", n}, {"a_n", seq.a[i].str()}, {"s_n", seq.s[i].str()}});
  }
  return {{"group", seq.group.name()}, {"method", seq.method}, {"rows", rows}};
}

void write_orbit_csv(std::ostream& out, const OrbitTable& table, int digits) {
  out << "n,a_n,orbits_n,pi,mertens_num,mertens_den,phi,psi\n";
  for (const auto& r : table.rows) {
    out << r.n << ',' << r.a_n << ',' << r.orbits << ',' << r.pi << ','
        << boost::multiprecision::numerator(r.mertens) << ',' << boost::multiprecision::denominator(r.mertens)
        << ',' << to_decimal(r.phi, digits) << ',' << to_decimal(r.psi, digits) << '\n';
  }
}

void write_figure_csv(std::ostream& out, std::span<const FigurePoint> points, int digits) {
  out << "N,phi,psi,phi_exact,psi_exact\n";
  for (const auto& p : points) {
    out << p.n << ',' << to_decimal(p.phi, digits) << ',' << to_decimal(p.psi, digits) << ','
        << to_fraction(p.phi) << ',' << to_fraction(p.psi) << '\n';
  }
}

void write_mertens_csv(std::ostream& out, const OrbitTable& table, int digits) {
  out << "n,main_term_exact,main_term,mertens_exact,mertens,delta_exact,delta\n";
  for (const auto& r : table.rows) {
    out << r.n << ',' << to_fraction(r.main_term) << ',' << to_decimal(r.main_term, digits) << ','
        << to_fraction(r.mertens) << ',' << to_decimal(r.mertens, digits) << ',' << to_fraction(r.delta) << ','
        << to_decimal(r.delta, digits) << '\n';
  }
}

void write_main_term_csv(std::ostream& out, const GrowthSequence& seq, std::int64_t horizon, bool exact,
                         int digits) {
  out << "n,main_term_exact,main_term\n";
  Rational exact_sum = 0;
  CompensatedSum float_sum;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const BigInt& an = seq.a[static_cast<std::size_t>(n)];
    out << n << ',';
    if (exact) {
      exact_sum += Rational(an, BigInt(n));
      out << to_fraction(exact_sum) << ',' << to_decimal(exact_sum, digits);
    } else {
      float_sum.add(an.convert_to<double>() / static_cast<double>(n));
      out << ',' << std::setprecision(digits + 3) << float_sum.value();
    }
    out << '\n';
  }
}

nlohmann::json ledrappier_json(const LedrappierFixReport& report) {
  return {{"lattice", report.lattice.to_string()},
          {"index", report.lattice.index_value()},
          {"fix_count", report.fix_count.str()},
          {"kernel_dim", report.kernel_dim}};
}

nlohmann::json solenoid_json(const Sublattice& lattice, const BigInt& fix) {
  return {{"lattice", lattice.to_string()}, {"index", lattice.index_value()}, {"fix_count", fix.str()}};
}

}  // namespace orbitzeta
