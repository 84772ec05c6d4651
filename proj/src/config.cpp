#include "hemiring/config.hpp"

#include <cstdlib>
#include <string>

namespace hemiring {

namespace {

void read_int(const char* var, int& field) {
  if (const char* v = std::getenv(var)) {
    const int parsed = std::atoi(v);
    if (parsed > 0) field = parsed;
  }
}

void read_i64(const char* var, std::int64_t& field) {
  if (const char* v = std::getenv(var)) {
    const long long parsed = std::atoll(v);
    if (parsed > 0) field = parsed;
  }
}

} // namespace

Config Config::from_env() {
  Config cfg;
  read_int("HEMIRING_GRID_D", cfg.grid_denominator);
  read_int("HEMIRING_SUBSET_CAP", cfg.subset_bruteforce_cap);
  read_int("HEMIRING_ORDER_CAP", cfg.generator_order_cap);
  read_i64("HEMIRING_FUZZY_BUDGET", cfg.fuzzy_family_budget);
  read_int("HEMIRING_SAMPLE_PAIRS", cfg.sample_pairs);
  if (const char* v = std::getenv("HEMIRING_FORMAT"))
    cfg.json_lines = std::string(v) == "json-lines" || std::string(v) == "json";
  return cfg;
}

} // namespace hemiring
