#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tetramax {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 7;
  int workers = 0;
  /// Multiplies every sample count (rounded up, at least one). 1 is the
  /// full suite; smaller values give a smoke run.
  double scale = 1.0;
  /// Run only these ids (all when empty).
  std::vector<int> only;
};

/// Runs the acceptance criteria in order, reporting each as it finishes.
/// The Gauss-Bonnet check covers every surface built by the other criteria
/// and is reported last.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  03 star-unfolding  <detail>  (1.23 s)"
std::string format_result(const CriterionResult& r);

}  // namespace tetramax
