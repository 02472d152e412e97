#include <cstdio>
#include <cstdlib>
#include <string>

#include "tetramax/acceptance.hpp"

// Usage: acceptance_test [scale] [id...]
int main(int argc, char** argv) {
  tetramax::AcceptanceOptions options;
  if (argc > 1) options.scale = std::atof(argv[1]);
  for (int i = 2; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  bool ok = true;
  tetramax::run_acceptance(options, [&](const tetramax::CriterionResult& r) {
    ok = ok && r.passed;
    std::printf("%s\n", tetramax::format_result(r).c_str());
    std::fflush(stdout);
  });
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
