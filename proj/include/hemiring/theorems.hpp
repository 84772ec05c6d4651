#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hemiring/config.hpp"
#include "hemiring/hemiring.hpp"

namespace hemiring {

enum class CheckStatus { holds, fails, vacuous, error };
const char* status_name(CheckStatus s);

struct TheoremReport {
  std::string statement;
  std::string structure;
  CheckStatus status = CheckStatus::error;
  nlohmann::ordered_json witness;  // null unless status == fails/error
  nlohmann::ordered_json scope;    // grid denominator, family sizes, samples
  bool quarantined = false;        // source structure failed the axioms
};

struct StatementInfo {
  std::string id;
  std::string summary;
};

// Every catalogued statement, in catalog order. Conditional statements
// report `vacuous` when their hypothesis fails on a structure; existence
// claims are settled by exhaustive search with the searched space recorded.
const std::vector<StatementInfo>& statement_catalog();
bool statement_known(const std::string& id);

TheoremReport run_statement(const Hemiring& H, const std::string& id,
                            const Config& cfg = Config{});

struct SuiteSummary {
  int structures = 0;
  int holds = 0, fails = 0, vacuous = 0, errors = 0;
  int quarantined_reports = 0;  // excluded from the tallies above
};

// Cross product of statements × corpus, statements in catalog order.
// Per-report errors are recorded, never thrown.
std::pair<std::vector<TheoremReport>, SuiteSummary> run_suite(
    const std::vector<Hemiring>& corpus, const std::vector<std::string>& ids,
    const Config& cfg = Config{});

nlohmann::ordered_json report_to_json(const TheoremReport& r);
nlohmann::ordered_json summary_to_json(const SuiteSummary& s);

} // namespace hemiring
