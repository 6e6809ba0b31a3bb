#pragma once

#include "orbitzeta/algebraic.hpp"
#include "orbitzeta/growth.hpp"
#include "orbitzeta/shiftorbits.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <span>

namespace orbitzeta {

inline constexpr int kDefaultDigits = 12;

// CSV writers. Every table carries a header row; exact rationals are written
// as num/den next to their decimal rendering.

/// n,a_n,s_n
void write_growth_csv(std::ostream& out, const GrowthSequence& seq);
nlohmann::json growth_json(const GrowthSequence& seq);

/// n,a_n,orbits_n,pi,mertens_num,mertens_den,phi,psi
void write_orbit_csv(std::ostream& out, const OrbitTable& table, int digits = kDefaultDigits);

/// N,phi,psi,phi_exact,psi_exact
void write_figure_csv(std::ostream& out, std::span<const FigurePoint> points, int digits = kDefaultDigits);

/// n,main_term_exact,main_term, and for Z^d: mertens_exact,mertens,delta_exact,delta
void write_mertens_csv(std::ostream& out, const OrbitTable& table, int digits = kDefaultDigits);
void write_main_term_csv(std::ostream& out, const GrowthSequence& seq, std::int64_t horizon, bool exact,
                         int digits = kDefaultDigits);

nlohmann::json ledrappier_json(const LedrappierFixReport& report);
nlohmann::json solenoid_json(const Sublattice& lattice, const BigInt& fix);

}  // namespace orbitzeta
