#pragma once

#include <functional>
#include <string>
#include <vector>

namespace orbitzeta {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  unsigned threads = 1;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(const AcceptanceOptions&)> run;
};

/// The ten exit criteria, in order. Each one times itself and folds its
/// runtime limit into `passed`.
std::vector<Criterion> acceptance_criteria();

/// Runs every criterion; `on_result` sees each result as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 exact anchors (0.01 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace orbitzeta
