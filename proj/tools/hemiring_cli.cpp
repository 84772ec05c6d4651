#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hemiring/config.hpp"
#include "hemiring/fixtures.hpp"
#include "hemiring/fuzzy.hpp"
#include "hemiring/fuzzy_oracle.hpp"
#include "hemiring/generator.hpp"
#include "hemiring/io.hpp"
#include "hemiring/subsets.hpp"
#include "hemiring/theorems.hpp"

namespace hr = hemiring;
namespace fs = std::filesystem;
using hr::json;

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kInputError = 2;

struct LoadedStructure {
  hr::TableData tables;
  hr::Hemiring ring;
};

// Table-level commands accept quarantined structures with a warning; the
// analysis commands require --allow-quarantined.
LoadedStructure load_structure(const std::string& path, bool allow_quarantined,
                               bool warn_only) {
  hr::TableData t = hr::load_table_file(path);
  const hr::AxiomReport rep = hr::verify_axioms(t);
  if (!rep.valid) {
    if (!allow_quarantined && !warn_only)
      throw hr::input_error(path + " fails the hemiring axioms (" +
                            rep.violations.front().axiom +
                            "); pass --allow-quarantined to analyze it anyway");
    std::cerr << "warning: " << path << " fails the hemiring axioms ("
              << rep.violations.front().axiom << "); results are quarantined\n";
  }
  return {t, hr::Hemiring::from_tables(t, /*quarantine=*/!rep.valid)};
}

void emit(const hr::Config& cfg, const json& machine, const std::string& human) {
  if (cfg.json_lines)
    std::cout << machine.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string classification_text(const hr::Hemiring& H, const hr::Classification& c) {
  std::string out;
  out += "proper:        " + std::string(c.is_proper ? "yes" : "no");
  if (!c.is_proper) out += " (" + c.not_proper_reason + ")";
  out += "\nprime:         " + std::string(c.is_prime ? "yes" : "no");
  if (c.prime_witness)
    out += "  (witness A=" + hr::mask_to_names(H, c.prime_witness->first) +
           " B=" + hr::mask_to_names(H, c.prime_witness->second) + ")";
  if (!c.prime_tests_agree) out += "  [element test disagrees]";
  out += "\nsemiprime:     " + std::string(c.is_semiprime ? "yes" : "no");
  if (c.semiprime_witness)
    out += "  (witness B=" + hr::mask_to_names(H, *c.semiprime_witness) + ")";
  if (!c.semiprime_tests_agree) out += "  [element test disagrees]";
  out += "\nirreducible:   " + std::string(c.is_irreducible ? "yes" : "no");
  if (c.irreducible_witness)
    out += "  (witness A=" + hr::mask_to_names(H, c.irreducible_witness->first) +
           " B=" + hr::mask_to_names(H, c.irreducible_witness->second) + ")";
  out += "\nh-idempotent:  " + std::string(c.is_h_idempotent ? "yes" : "no");
  return out;
}

json classification_json(const hr::Hemiring& H, const hr::Classification& c) {
  json j;
  j["proper"] = c.is_proper;
  if (!c.is_proper) j["reason"] = c.not_proper_reason;
  j["prime"] = c.is_prime;
  j["prime_elementwise"] = c.prime_elementwise;
  j["prime_tests_agree"] = c.prime_tests_agree;
  if (c.prime_witness)
    j["prime_witness"] = {{"A", hr::mask_to_names(H, c.prime_witness->first)},
                          {"B", hr::mask_to_names(H, c.prime_witness->second)}};
  j["semiprime"] = c.is_semiprime;
  j["semiprime_elementwise"] = c.semiprime_elementwise;
  j["semiprime_tests_agree"] = c.semiprime_tests_agree;
  if (c.semiprime_witness)
    j["semiprime_witness"] = hr::mask_to_names(H, *c.semiprime_witness);
  j["irreducible"] = c.is_irreducible;
  if (c.irreducible_witness)
    j["irreducible_witness"] = {{"A", hr::mask_to_names(H, c.irreducible_witness->first)},
                                {"B", hr::mask_to_names(H, c.irreducible_witness->second)}};
  j["h_idempotent"] = c.is_h_idempotent;
  return j;
}

} // namespace

int main(int argc, char** argv) {
  hr::Config cfg = hr::Config::from_env();

  CLI::App app{"finite hemiring workbench: h-ideals, fuzzy h-ideals, "
               "small-order corpora and statement checking"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json_lines, "machine-readable json-lines output");

  std::string file, set_arg, ideal_arg, lhs_path, rhs_path, op_name, out_dir = ".";
  std::string statements_arg = "all", corpus_dir, kind_arg = "h";
  bool exhaustive = false, use_oracle = false, allow_quarantined = false;
  int order = 0;
  int grid_d = 0;

  auto* verify = app.add_subcommand("verify", "check the hemiring axioms of a table file");
  verify->add_option("file", file)->required();
  verify->add_flag("--exhaustive", exhaustive, "list every violating instance");

  auto* ideals = app.add_subcommand("ideals", "enumerate all ideals of a kind");
  ideals->add_option("file", file)->required();
  ideals->add_option("--kind", kind_arg, "left|right|two-sided|k|h")->capture_default_str();
  ideals->add_flag("--allow-quarantined", allow_quarantined);

  auto* closure = app.add_subcommand("closure", "h-closure of a subset");
  closure->add_option("file", file)->required();
  closure->add_option("--set", set_arg, "comma-separated element names")->required();

  auto* classify = app.add_subcommand("classify", "classify an h-ideal");
  classify->add_option("file", file)->required();
  classify->add_option("--ideal", ideal_arg, "comma-separated element names")->required();
  classify->add_flag("--allow-quarantined", allow_quarantined);

  auto* fuzzy = app.add_subcommand("fuzzy", "combine two fuzzy subsets");
  fuzzy->add_option("file", file)->required();
  fuzzy->add_option("--op", op_name, "product|intrinsic|sum|meet|join")->required();
  fuzzy->add_option("--lhs", lhs_path)->required();
  fuzzy->add_option("--rhs", rhs_path)->required();
  fuzzy->add_flag("--oracle", use_oracle, "cross-check against the definition-level oracle");
  fuzzy->add_option("-D,--grid", grid_d, "grid denominator")->check(CLI::PositiveNumber);

  auto* fideals = app.add_subcommand("fuzzy-ideals", "enumerate grid fuzzy h-ideals");
  fideals->add_option("file", file)->required();
  fideals->add_option("-D,--grid", grid_d, "grid denominator")->check(CLI::PositiveNumber);
  fideals->add_flag("--allow-quarantined", allow_quarantined);

  auto* check = app.add_subcommand("check", "run catalogued statements");
  check->add_option("file", file, "structure file (or use --corpus)");
  check->add_option("--corpus", corpus_dir, "directory of structure files");
  check->add_option("--statements", statements_arg, "comma-separated ids or 'all'")
      ->capture_default_str();
  check->add_option("-D,--grid", grid_d, "grid denominator")->check(CLI::PositiveNumber);
  check->add_flag("--allow-quarantined", allow_quarantined);

  auto* generate = app.add_subcommand("generate", "enumerate all hemirings of an order");
  generate->add_option("--order", order)->required();
  generate->add_option("--out", out_dir)->capture_default_str();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "write the built-in fixture files");
  fixtures_cmd->add_option("--out", out_dir)->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("statements", "list the statement catalog");

  // let global flags like --json appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (grid_d > 0) cfg.grid_denominator = grid_d;

    if (*verify) {
      const hr::TableData t = hr::load_table_file(file);
      const hr::AxiomReport rep = hr::verify_axioms(t, exhaustive);
      const json j = hr::axiom_report_to_json(rep, t);
      if (cfg.json_lines) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << t.name << ": " << (rep.valid ? "valid hemiring" : "NOT a hemiring") << "\n";
        if (rep.identity)
          std::cout << "identity: " << t.elements[static_cast<std::size_t>(*rep.identity)] << "\n";
        std::cout << "commutative multiplication: " << (rep.commutative_mul ? "yes" : "no") << "\n";
        for (const auto& v : rep.violations)
          std::cout << "violation [" << v.axiom << "]: " << v.detail << "\n";
      }
      return rep.valid ? kOk : kCounterexample;
    }

    if (*ideals) {
      const auto kind = hr::parse_kind(kind_arg);
      if (!kind) throw hr::input_error("unknown ideal kind: " + kind_arg);
      const auto ls = load_structure(file, allow_quarantined, false);
      const hr::IdealFamily fam = hr::enumerate_ideals(ls.ring, *kind, cfg);
      json family = json::array();
      for (hr::Mask m : fam.members) {
        family.push_back(hr::mask_to_names(ls.ring, m));
        if (!cfg.json_lines) std::cout << hr::mask_to_names(ls.ring, m) << "\n";
      }
      emit(cfg,
           json{{"count", fam.members.size()}, {"complete", fam.complete}, {"family", family}},
           std::to_string(fam.members.size()) + " ideal(s) of kind " + kind_arg);
      return kOk;
    }

    if (*closure) {
      const auto ls = load_structure(file, true, true);
      const hr::Mask m = hr::parse_subset(ls.ring, set_arg);
      const hr::Mask cl = hr::h_closure(ls.ring, m);
      emit(cfg, json{{"set", hr::mask_to_names(ls.ring, m)},
                     {"h_closure", hr::mask_to_names(ls.ring, cl)}},
           hr::mask_to_names(ls.ring, cl));
      return kOk;
    }

    if (*classify) {
      const auto ls = load_structure(file, allow_quarantined, false);
      const hr::Mask m = hr::parse_subset(ls.ring, ideal_arg);
      const hr::IdealFamily fam = hr::enumerate_h_ideals(ls.ring, cfg);
      const hr::Classification c = hr::classify_h_ideal(ls.ring, m, fam);
      emit(cfg, classification_json(ls.ring, c), classification_text(ls.ring, c));
      return kOk;
    }

    if (*fuzzy) {
      const auto ls = load_structure(file, true, true);
      const hr::FuzzySubset l = hr::load_fuzzy_file(lhs_path, ls.ring, cfg.grid_denominator);
      const hr::FuzzySubset r = hr::load_fuzzy_file(rhs_path, ls.ring, cfg.grid_denominator);
      hr::FuzzySubset result{&ls.ring, {}};
      bool oracle_applies = false;
      hr::FuzzyOp op{};
      if (op_name == "product") { op = hr::FuzzyOp::h_product; oracle_applies = true; }
      else if (op_name == "intrinsic") { op = hr::FuzzyOp::h_intrinsic; oracle_applies = true; }
      else if (op_name == "sum") { op = hr::FuzzyOp::h_sum; oracle_applies = true; }
      else if (op_name == "meet") result = hr::pointwise_meet(l, r);
      else if (op_name == "join") result = hr::pointwise_join(l, r);
      else throw hr::input_error("unknown fuzzy op: " + op_name);
      if (oracle_applies) result = hr::apply_fuzzy_op(l, r, op);

      if (use_oracle && oracle_applies) {
        const hr::FuzzySubset check_result = hr::oracle_product(l, r, op);
        if (!(check_result == result)) {
          std::cerr << "oracle mismatch:\n  level-cut: " << hr::fuzzy_to_json(result).dump()
                    << "\n  oracle:    " << hr::fuzzy_to_json(check_result).dump() << "\n";
          return kCounterexample;
        }
      }
      emit(cfg, hr::fuzzy_to_json(result), hr::fuzzy_to_json(result)["values"].dump());
      return kOk;
    }

    if (*fideals) {
      const auto ls = load_structure(file, allow_quarantined, false);
      const auto fam = hr::enumerate_grid_fuzzy_ideals(ls.ring, cfg.grid_denominator,
                                                       hr::IdealKind::h, cfg);
      for (const auto& f : fam)
        emit(cfg, hr::fuzzy_to_json(f), hr::fuzzy_to_json(f)["values"].dump());
      emit(cfg, json{{"count", fam.size()}, {"grid_D", cfg.grid_denominator}},
           std::to_string(fam.size()) + " grid fuzzy h-ideal(s) at D=" +
               std::to_string(cfg.grid_denominator));
      return kOk;
    }

    if (*check) {
      std::vector<hr::Hemiring> corpus;
      if (!corpus_dir.empty()) {
        for (const auto& name : hr::manifest_files(corpus_dir)) {
          const auto ls = load_structure((fs::path(corpus_dir) / name).string(),
                                         allow_quarantined, false);
          corpus.push_back(ls.ring);
        }
        if (corpus.empty()) throw hr::input_error("no structures found in " + corpus_dir);
      } else if (!file.empty()) {
        corpus.push_back(load_structure(file, allow_quarantined, false).ring);
      } else {
        throw hr::input_error("check needs a structure file or --corpus");
      }

      std::vector<std::string> ids;
      if (statements_arg == "all") {
        for (const auto& s : hr::statement_catalog()) ids.push_back(s.id);
      } else {
        std::size_t pos = 0;
        while (pos <= statements_arg.size()) {
          const auto comma = statements_arg.find(',', pos);
          const std::string part = statements_arg.substr(
              pos, comma == std::string::npos ? std::string::npos : comma - pos);
          if (!part.empty()) ids.push_back(part);
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }

      const auto [reports, summary] = hr::run_suite(corpus, ids, cfg);
      for (const auto& r : reports) {
        if (cfg.json_lines) {
          std::cout << hr::report_to_json(r).dump() << "\n";
        } else {
          std::cout << r.statement << " on " << r.structure << ": "
                    << hr::status_name(r.status)
                    << (r.quarantined ? " [quarantined]" : "") << "\n";
          if (!r.witness.is_null()) std::cout << "  witness: " << r.witness.dump() << "\n";
        }
      }
      if (cfg.json_lines)
        std::cout << hr::summary_to_json(summary).dump() << "\n";
      else
        std::cout << "holds " << summary.holds << ", fails " << summary.fails
                  << ", vacuous " << summary.vacuous << ", errors " << summary.errors
                  << ", quarantined reports " << summary.quarantined_reports << "\n";
      if (summary.fails > 0) return kCounterexample;
      if (summary.errors > 0) return kInputError;
      return kOk;
    }

    if (*generate) {
      const auto rings = hr::enumerate_hemirings(order, cfg);
      fs::create_directories(out_dir);
      std::vector<std::string> files;
      for (const auto& ring : rings) {
        const std::string fname = ring.name() + ".json";
        hr::write_json_file(fs::path(out_dir) / fname, hr::table_to_json(ring.table_data()));
        files.push_back(fname);
      }
      hr::update_manifest(out_dir, order, files);
      emit(cfg, json{{"order", order}, {"count", rings.size()}, {"out", out_dir}},
           std::to_string(rings.size()) + " hemiring(s) of order " + std::to_string(order) +
               " written to " + out_dir);
      return kOk;
    }

    if (*fixtures_cmd) {
      const auto written = hr::fixtures::write_fixtures(out_dir);
      for (const auto& p : written)
        emit(cfg, json{{"written", p.string()}}, "wrote " + p.string());
      return kOk;
    }

    if (*catalog_cmd) {
      for (const auto& s : hr::statement_catalog())
        emit(cfg, json{{"id", s.id}, {"summary", s.summary}}, s.id + "  " + s.summary);
      return kOk;
    }
  } catch (const hr::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hr::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const hr::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
