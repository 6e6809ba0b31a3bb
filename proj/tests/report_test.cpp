#include "orbitzeta/report.hpp"

#include "orbitzeta/algebraic.hpp"

#include <doctest.h>

#include <sstream>

using namespace orbitzeta;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("to_decimal and to_fraction") {
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(Rational(-3, 4), 1) == "-0.8");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(7), 2) == "7.00");
  CHECK(to_fraction(Rational(7, 4)) == "7/4");
  CHECK(to_fraction(Rational(-6, 8)) == "-3/4");
  CHECK(to_fraction(Rational(5)) == "5/1");
}

TEST_CASE("growth csv and json") {
  const auto seq = a_zd_sieve(2, 4);
  std::ostringstream csv;
  write_growth_csv(csv, seq);
  CHECK(lines(csv.str()) == std::vector<std::string>{"n,a_n,s_n", "1,1,1", "2,3,4", "3,4,8", "4,7,15"});
  const auto json = growth_json(seq);
  CHECK(json["group"] == "z:2");
  CHECK(json["rows"].size() == 4);
  CHECK(json["rows"][3]["a_n"] == "7");
}

TEST_CASE("orbit csv rows") {
  const auto table = orbit_table(ShiftSystem::full_shift_zd(2, 2), 3);
  std::ostringstream csv;
  write_orbit_csv(csv, table, 4);
  const auto rows = lines(csv.str());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "n,a_n,orbits_n,pi,mertens_num,mertens_den,phi,psi");
  CHECK(rows[2].rfind("2,3,3,5,7,4,", 0) == 0);
  CHECK(rows[3].rfind("3,4,8,13,11,4,", 0) == 0);
}

TEST_CASE("figure csv is deterministic across thread counts") {
  const auto sys = ShiftSystem::full_shift_zd(2, 2);
  std::ostringstream serial, threaded;
  write_figure_csv(serial, figure_series(sys, 30));
  write_figure_csv(threaded, figure_series(sys, 30, {kDefaultOrbitHorizonCap, 3}));
  CHECK(serial.str() == threaded.str());
  const auto rows = lines(serial.str());
  CHECK(rows.size() == 31);
  CHECK(rows[0] == "N,phi,psi,phi_exact,psi_exact");
  CHECK(rows[2] == "2,1.250000000000,2.000000000000,5/4,2/1");
}

TEST_CASE("mertens csv carries the exact Delta") {
  std::ostringstream csv;
  write_mertens_csv(csv, orbit_table(ShiftSystem::full_shift_zd(2, 2), 2), 2);
  const auto rows = lines(csv.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "n,main_term_exact,main_term,mertens_exact,mertens,delta_exact,delta");
  CHECK(rows[2] == "2,5/2,2.50,7/4,1.75,-3/4,-0.75");
}

TEST_CASE("main term csv in both modes") {
  const auto seq = a_zd_sieve(2, 3);
  std::ostringstream exact, approx;
  write_main_term_csv(exact, seq, 3, true, 3);
  write_main_term_csv(approx, seq, 3, false, 3);
  CHECK(lines(exact.str())[3] == "3,23/6,3.833");
  CHECK(lines(approx.str())[3].rfind("3,,3.833", 0) == 0);
}

TEST_CASE("ledrappier json") {
  const auto j = ledrappier_json(ledrappier_fix(Sublattice::diagonal({3, 3})));
  CHECK(j.dump() == R"({"fix_count":"4","index":9,"kernel_dim":2,"lattice":"3 0; 0 3"})");
}
