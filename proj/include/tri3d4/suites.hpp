#pragma once

#include <string>
#include <vector>

#include "tri3d4/json_io.hpp"

namespace tri3d4 {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::uint64_t budget = 100000;  // element samples for the sampled checks
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  Json details;
};

// field, group, cocycle, orbit, partition, table, axioms
const std::vector<std::string>& suite_names();
// Exhaustive scans run whenever |U| <= 2^24, i.e. q = 3.
bool exhaustive_scale(const FieldTower& F);
SuiteResult run_suite(const FieldTower& F, const std::string& name, const SuiteOptions& opt);

}  // namespace tri3d4
