// Runs acceptance criteria 1..12 and prints one PASS/FAIL line each.
// Usage: acceptance [--json path] [--only id,id,...]

#include <fstream>
#include <iostream>
#include <sstream>

#include "diffset/acceptance.hpp"

using namespace diffset;

int main(int argc, char** argv) {
  AcceptanceOptions opt;
  std::vector<int> ids{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::string json_path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--json" && i + 1 < argc) {
      json_path = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      ids.clear();
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) ids.push_back(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--json path] [--only 1,2,...]\n";
      return 2;
    }
  }

  std::vector<int> plain;
  bool determinism = false;
  for (int id : ids) {
    if (id == 12) determinism = true;
    else plain.push_back(id);
  }

  Json all = Json::array();
  bool ok = true;
  auto report = [&](const CriterionResult& r) {
    std::cout << summary_line(r) << std::endl;
    all.push_back(to_json(r));
    ok = ok && r.passed;
  };
  AcceptanceContext ctx;
  for (int id : plain) report(run_criterion(id, opt, ctx));
  if (determinism) report(run_determinism(opt));

  if (!json_path.empty()) std::ofstream(json_path) << all.dump(2) << '\n';
  return ok ? 0 : 1;
}
