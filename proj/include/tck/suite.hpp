#pragma once

#include <string>
#include <vector>

#include "tck/serialize.hpp"

namespace tck {

struct CheckResult {
  int id = 0;
  std::string tag;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double limit = 0;  // seconds; exceeding it fails the check
  Json details;
};

struct CheckInfo {
  int id;
  std::string tag;
  std::string name;
  double limit;
};

const std::vector<CheckInfo>& suite_checks();

// Runs every check whose tag contains `filter` (all when empty).
std::vector<CheckResult> run_suite(const std::string& filter = "");
CheckResult run_check(int id);

Json to_json(const CheckResult& r, bool with_timing);

}  // namespace tck
