#include <cstdio>
#include <cstring>
#include <string>

#include "lacunary/acceptance.hpp"

int main(int argc, char** argv) {
  lacunary::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) options.level = lacunary::AcceptanceLevel::kFast;
    else if (std::strcmp(argv[i], "--perturb-tau") == 0 && i + 1 < argc) options.tau_perturbation = std::stod(argv[++i]);
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) options.only.push_back(std::stoi(argv[++i]));
  }
  int failed = 0;
  lacunary::run_acceptance(options, [&](const lacunary::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::printf("[%s] criterion %d: %s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.measured.dump().c_str());
    std::fflush(stdout);
  });
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
