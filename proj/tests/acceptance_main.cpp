#include "orbitzeta/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

int main() {
  orbitzeta::AcceptanceOptions options;
  options.threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBITZETA_THREADS")) options.threads = std::max(1, std::atoi(env));

  int failed = 0;
  orbitzeta::run_acceptance(options, [&](const orbitzeta::CriterionResult& r) {
    std::cout << orbitzeta::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
