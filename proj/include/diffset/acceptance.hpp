#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/serialize.hpp"

namespace diffset {

struct AcceptanceOptions {
  std::int64_t random_trials = 10000;   // criteria 1 and 2
  std::int64_t embed_trials = 200;      // criterion 10, per property
  std::uint64_t seed = 20240611;
  std::vector<std::uint64_t> jin_seeds{1, 2, 3, 4, 5};
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
  Json details;
  double seconds = 0;
};

// Cover-density reports collected from criteria 3, 7 and 8 for criterion 9.
struct AcceptanceContext {
  std::vector<Json> cover_density_reports;
  bool have3 = false, have7 = false, have8 = false;
};

std::vector<std::pair<int, std::string>> criterion_names();

CriterionResult run_criterion(int id, const AcceptanceOptions& opt, AcceptanceContext& ctx);

// Criteria 1..11 in order, sharing one context.
std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt, const std::vector<int>& ids);

// Reruns 1..11 at thread counts 1 and max(hardware, 4) and compares reports modulo timing.
CriterionResult run_determinism(const AcceptanceOptions& opt);

Json to_json(const CriterionResult& r);

// One line per criterion: "criterion <id> PASS|FAIL <name> (<seconds>s)".
std::string summary_line(const CriterionResult& r);

}  // namespace diffset
