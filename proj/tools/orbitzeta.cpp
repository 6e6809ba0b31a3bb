#include "orbitzeta/acceptance.hpp"
#include "orbitzeta/algebraic.hpp"
#include "orbitzeta/growth.hpp"
#include "orbitzeta/lattice.hpp"
#include "orbitzeta/moebius.hpp"
#include "orbitzeta/oracle.hpp"
#include "orbitzeta/report.hpp"
#include "orbitzeta/shiftorbits.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

namespace {

using namespace orbitzeta;

enum ExitCode : int { kOk = 0, kUsage = 1, kCap = 2, kConsistency = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBITZETA_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

// Runs `body` against --out (or stdout when empty).
void with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  body(file);
  file.close();
  if (!file) throw IoError("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic orbit counting for full shifts over lattices"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (capped by ORBITZETA_THREADS)")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // growth
  auto* growth = app.add_subcommand("growth", "index-n subgroup counts a_n and partial sums s_n");
  std::string growth_group = "z:2";
  std::int64_t growth_max = 100;
  std::string growth_format = "csv";
  std::string growth_out;
  growth->add_option("--group", growth_group, "z:d or heisenberg")->capture_default_str();
  growth->add_option("--max-n", growth_max, "horizon")->capture_default_str();
  growth->add_option("--format", growth_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  growth->add_option("--out", growth_out, "output file (default stdout)");
  growth->callback([&] {
    action = [&] {
      const auto seq = growth_sequence(parse_group(growth_group), growth_max);
      with_output(growth_out, [&](std::ostream& out) {
        if (growth_format == "json") {
          out << growth_json(seq).dump() << '\n';
        } else {
          write_growth_csv(out, seq);
        }
      });
      return kOk;
    };
  });

  // sublattices
  auto* subl = app.add_subcommand("sublattices", "list index-n sublattices of Z^d in Hermite form");
  int subl_d = 2;
  std::int64_t subl_n = 1;
  subl->add_option("--d", subl_d)->required();
  subl->add_option("--n", subl_n)->required();
  subl->callback([&] {
    action = [&] {
      for (const auto& l : enumerate_sublattices(subl_d, subl_n)) std::cout << l.to_string() << '\n';
      return kOk;
    };
  });

  // mobius
  auto* mobius = app.add_subcommand("mobius", "Moebius function of the interval [lower, upper]");
  int mobius_d = 2;
  std::string mobius_upper, mobius_lower;
  bool mobius_canonicalize = false;
  mobius->add_option("--d", mobius_d)->required();
  mobius->add_option("--upper", mobius_upper, "rows of the larger lattice, e.g. \"1 0; 0 1\"")->required();
  mobius->add_option("--lower", mobius_lower, "rows of the smaller lattice")->required();
  mobius->add_flag("--canonicalize", mobius_canonicalize, "accept non-canonical generator rows");
  mobius->callback([&] {
    action = [&] {
      const auto upper = parse_sublattice(mobius_upper, mobius_canonicalize);
      const auto lower = parse_sublattice(mobius_lower, mobius_canonicalize);
      if (upper.dim() != mobius_d || lower.dim() != mobius_d) throw DomainError("lattice dimension does not match --d");
      const auto closed = moebius_closed(upper, lower);
      const auto recursive = moebius_recursive(upper, lower);
      std::cout << closed.str() << '\n' << "oracle-agrees=" << (closed == recursive ? "true" : "false") << '\n';
      if (closed != recursive) throw Mismatch("closed form " + closed.str() + " vs recursion " + recursive.str());
      return kOk;
    };
  });

  // orbits
  auto* orbits = app.add_subcommand("orbits", "orbit counts, pi and Mertens sums for the full shift on Z^d");
  int orbits_d = 2, orbits_b = 2, orbits_digits = kDefaultDigits;
  std::int64_t orbits_max = 20;
  std::string orbits_out;
  orbits->add_option("--d", orbits_d)->capture_default_str();
  orbits->add_option("--b", orbits_b, "alphabet size")->capture_default_str();
  orbits->add_option("--max", orbits_max, "horizon")->capture_default_str();
  orbits->add_option("--digits", orbits_digits)->capture_default_str();
  orbits->add_option("--out", orbits_out);
  orbits->callback([&] {
    action = [&] {
      const auto table = orbit_table(ShiftSystem::full_shift_zd(orbits_d, orbits_b), orbits_max,
                                     {kDefaultOrbitHorizonCap, threads});
      with_output(orbits_out, [&](std::ostream& out) { write_orbit_csv(out, table, orbits_digits); });
      return kOk;
    };
  });

  // figure1
  auto* figure = app.add_subcommand("figure1", "phi(N) and psi(N) for the binary full shift on Z^2");
  std::int64_t figure_max = 100;
  int figure_digits = kDefaultDigits;
  std::string figure_out;
  figure->add_option("--max", figure_max)->capture_default_str();
  figure->add_option("--digits", figure_digits)->capture_default_str();
  figure->add_option("--out", figure_out);
  figure->callback([&] {
    action = [&] {
      const auto points =
          figure_series(ShiftSystem::full_shift_zd(2, 2), figure_max, {kDefaultOrbitHorizonCap, threads});
      with_output(figure_out, [&](std::ostream& out) { write_figure_csv(out, points, figure_digits); });
      return kOk;
    };
  });

  // mertens
  auto* mertens_cmd = app.add_subcommand("mertens", "Mertens main term, or the full Mertens table with --orbits");
  std::string mertens_group = "z:2", mertens_mode = "exact", mertens_out;
  int mertens_b = 2, mertens_digits = kDefaultDigits;
  std::int64_t mertens_max = 20;
  bool mertens_orbits = false;
  mertens_cmd->add_option("--group", mertens_group)->capture_default_str();
  mertens_cmd->add_option("--b", mertens_b, "alphabet size (with --orbits)")->capture_default_str();
  mertens_cmd->add_option("--max", mertens_max)->capture_default_str();
  mertens_cmd->add_option("--mode", mertens_mode)->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  mertens_cmd->add_option("--digits", mertens_digits)->capture_default_str();
  mertens_cmd->add_option("--out", mertens_out);
  mertens_cmd->add_flag("--orbits", mertens_orbits, "include M_T(N) and Delta_N");
  mertens_cmd->callback([&] {
    action = [&] {
      const auto group = parse_group(mertens_group);
      if (mertens_orbits) {
        const auto table =
            orbit_table(ShiftSystem::full_shift(group, mertens_b), mertens_max, {kDefaultOrbitHorizonCap, threads});
        with_output(mertens_out, [&](std::ostream& out) { write_mertens_csv(out, table, mertens_digits); });
      } else {
        const auto seq = growth_sequence(group, mertens_max);
        with_output(mertens_out, [&](std::ostream& out) {
          write_main_term_csv(out, seq, mertens_max, mertens_mode == "exact", mertens_digits);
        });
      }
      return kOk;
    };
  });

  // oracle verify
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  auto* verify = oracle->add_subcommand("verify", "compare inverted orbit counts against torus enumeration");
  int verify_d = 2, verify_b = 2;
  std::int64_t verify_max = 6;
  verify->add_option("--d", verify_d)->capture_default_str();
  verify->add_option("--b", verify_b)->capture_default_str();
  verify->add_option("--max", verify_max)->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const auto sys = ShiftSystem::full_shift_zd(verify_d, verify_b);
      const OrbitCounter counter(sys);
      std::size_t lattices = 0;
      for (std::int64_t n = 1; n <= verify_max; ++n) {
        for (const auto& l : counter.catalog().at_index(n)) {
          const auto brute = orbit_count_oracle(sys, l);
          const auto inverted = counter.orbit_count(l);
          if (brute != inverted) {
            throw Mismatch("O_T(" + l.to_string() + "): inversion " + inverted.str() + ", enumeration " + brute.str());
          }
          ++lattices;
        }
      }
      const auto table = orbit_table(sys, verify_max, {kDefaultOrbitHorizonCap, threads});
      if (pi_oracle(sys, verify_max) != table.rows.back().pi) throw Mismatch("pi disagrees");
      if (mertens_oracle(sys, verify_max) != table.rows.back().mertens) throw Mismatch("Mertens sum disagrees");
      std::cout << "verified " << lattices << " lattices, pi(" << verify_max << ")=" << table.rows.back().pi.str()
                << ", M(" << verify_max << ")=" << to_fraction(table.rows.back().mertens) << '\n';
      return kOk;
    };
  });

  // ledrappier
  auto* ledrappier = app.add_subcommand("ledrappier", "fixed points of the Ledrappier shift on Z^2/L");
  std::string ledrappier_lattice;
  bool ledrappier_canonicalize = false;
  ledrappier->add_option("--lattice", ledrappier_lattice, "Hermite rows, e.g. \"3 2; 0 3\"")->required();
  ledrappier->add_flag("--canonicalize", ledrappier_canonicalize, "accept non-canonical generator rows");
  ledrappier->callback([&] {
    action = [&] {
      const auto l = parse_sublattice(ledrappier_lattice, ledrappier_canonicalize);
      std::cout << ledrappier_json(ledrappier_fix(l)).dump() << '\n';
      return kOk;
    };
  });

  // solenoid
  auto* solenoid = app.add_subcommand("solenoid", "fixed points of the x2 solenoid along one axis");
  std::string solenoid_family = "horizontal";
  std::int64_t solenoid_n = 1;
  solenoid->add_option("--family", solenoid_family, "horizontal or vertical")->capture_default_str();
  solenoid->add_option("--n", solenoid_n)->required();
  solenoid->callback([&] {
    action = [&] {
      const auto family = parse_solenoid_family(solenoid_family);
      std::cout << solenoid_json(solenoid_lattice(family, solenoid_n), solenoid_fix(family, solenoid_n)).dump()
                << '\n';
      return kOk;
    };
  });

  // check-all
  auto* check_all = app.add_subcommand("check-all", "run the acceptance criteria");
  check_all->callback([&] {
    action = [&] {
      bool ok = true;
      run_acceptance({threads}, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.passed;
      });
      return ok ? kOk : kConsistency;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kConsistency;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return kConsistency;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedOperation& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUsage;
  }
}
