#pragma once

#include <cstdint>

namespace hemiring {

struct Config {
  int grid_denominator = 20;         // D for membership grids
  int subset_bruteforce_cap = 16;    // max order for mask-scan ideal enumeration
  int generator_order_cap = 4;       // max order for exhaustive generation
  std::int64_t fuzzy_family_budget = 200000;  // max enumerated grid fuzzy ideals
  int sample_pairs = 200;            // sampled fuzzy pairs in statement checks
  bool json_lines = false;

  // Reads HEMIRING_GRID_D, HEMIRING_SUBSET_CAP, HEMIRING_ORDER_CAP,
  // HEMIRING_FUZZY_BUDGET, HEMIRING_SAMPLE_PAIRS, HEMIRING_FORMAT.
  static Config from_env();
};

} // namespace hemiring
