#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lacunary {

enum class AcceptanceLevel { kFast, kFull };

AcceptanceLevel parse_acceptance_level(const std::string& name);

struct AcceptanceOptions {
  AcceptanceLevel level = AcceptanceLevel::kFull;
  // Added to tau_{-l,-l} before the unitarity checks; for sensitivity runs.
  double tau_perturbation = 0.0;
  // Empty runs everything; otherwise only the listed criterion ids (1..8).
  std::vector<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  nlohmann::json measured;
  double seconds = 0.0;
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

// Runs the acceptance criteria in order. The callback, when set, sees each
// result as soon as it is available.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const CriterionCallback& on_result = {});

}  // namespace lacunary
