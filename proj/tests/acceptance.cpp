// Acceptance suite: runs the six gate criteria end to end and prints one
// pass/fail line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hemiring/fixtures.hpp"
#include "hemiring/fuzzy.hpp"
#include "hemiring/fuzzy_oracle.hpp"
#include "hemiring/generator.hpp"
#include "hemiring/io.hpp"
#include "hemiring/subsets.hpp"
#include "hemiring/theorems.hpp"

using namespace hemiring;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Criterion {
  std::ostringstream log;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    FAILED: " << what << "\n";
    }
  }
};

void report(int number, const std::string& label, const Criterion& c, double seconds) {
  std::printf("criterion %d: %s  [%s, %.2fs]\n", number, c.ok ? "PASS" : "FAIL",
              label.c_str(), seconds);
  if (!c.ok) {
    std::fputs(c.log.str().c_str(), stdout);
    ++failures;
  }
}

template <typename F>
void run(int number, const std::string& label, F&& body) {
  Criterion c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, label, c, secs);
}

std::vector<Hemiring> corpus_up_to_3() {
  std::vector<Hemiring> out;
  for (int n = 1; n <= 3; ++n)
    for (auto& h : enumerate_hemirings(n)) out.push_back(h);
  return out;
}

FuzzySubset named_values(const Hemiring& H,
                         const std::vector<std::pair<std::string, Rat>>& vals) {
  FuzzySubset f = constant_fuzzy(H, Rat::zero());
  for (const auto& [name, r] : vals)
    f.values[static_cast<std::size_t>(*H.element_index(name))] = r;
  return f;
}

void criterion_1(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const Hemiring H = fixtures::three_chain();

  const AxiomReport rep = verify_axioms(H.table_data());
  c.require(rep.valid, "fixture verifies as a hemiring");
  c.require(rep.commutative_mul, "multiplication is commutative");
  c.require(rep.identity && H.element_name(*rep.identity) == "1", "identity detected as 1");

  const Mask ideal = parse_subset(H, "0,a");
  c.require(is_ideal_of_kind(H, ideal, IdealKind::two_sided).ok, "{0,a} is an ideal");
  const IdealCheck hchk = is_ideal_of_kind(H, ideal, IdealKind::h);
  c.require(!hchk.ok && hchk.condition == "h_condition", "{0,a} fails the h-condition");
  if (!hchk.ok && hchk.witness.size() == 4) {
    const int x = hchk.witness[0], a = hchk.witness[1], b = hchk.witness[2],
              y = hchk.witness[3];
    c.require(!mask_contains(ideal, x) && mask_contains(ideal, a) && mask_contains(ideal, b) &&
                  H.add(H.add(x, a), y) == H.add(b, y),
              "h-condition witness replays");
  }

  Config cfg;
  const IdealFamily fam = enumerate_h_ideals(H, cfg);
  c.require(fam.complete && fam.members == std::vector<Mask>{H.full_mask()},
            "the only h-ideal is the whole carrier");

  const auto fuzzy = enumerate_grid_fuzzy_ideals(H, 10, IdealKind::h, cfg);
  c.require(fuzzy.size() == 11, "exactly 11 grid fuzzy h-ideals at D=10");
  for (const auto& f : fuzzy)
    c.require(is_constant(f), "every grid fuzzy h-ideal is constant");

  const HemiregularityReport hr = is_h_hemiregular(H);
  c.require(hr.ok, "the fixture is h-hemiregular");
  for (int a = 0; a < H.order(); ++a) {
    c.require(hr.witnesses[static_cast<std::size_t>(a)].has_value(),
              "per-element witness present");
    if (hr.witnesses[static_cast<std::size_t>(a)]) {
      const auto w = *hr.witnesses[static_cast<std::size_t>(a)];
      c.require(H.add(H.add(a, H.mul(H.mul(a, w.x), a)), w.z) ==
                    H.add(H.mul(H.mul(a, w.y), a), w.z),
                "hemiregularity witness replays");
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 1.0, "fixture suite finishes under a second");
}

void criterion_2(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const Hemiring H = fixtures::four_cyclic();
  const TableData t = H.table_data();

  const AxiomReport rep = verify_axioms(t);
  c.require(!rep.valid, "the printed tables are rejected");
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.axiom == "left_distributivity" && v.where.size() == 3 &&
        t.elements[static_cast<std::size_t>(v.where[0])] == "b" &&
        t.elements[static_cast<std::size_t>(v.where[1])] == "a" &&
        t.elements[static_cast<std::size_t>(v.where[2])] == "a") {
      const int lhs = t.mul_at(v.where[0], t.add_at(v.where[1], v.where[2]));
      const int rhs = t.add_at(t.mul_at(v.where[0], v.where[1]), t.mul_at(v.where[0], v.where[2]));
      found = t.elements[static_cast<std::size_t>(lhs)] == "b" &&
              t.elements[static_cast<std::size_t>(rhs)] == "a";
    }
  c.require(found, "distributivity witness b*(a+a)=b vs b*a+b*a=a reported");

  const FuzzySubset lambda = named_values(H, fixtures::four_cyclic_lambda());
  const FuzzyCheck fc = is_fuzzy_ideal_of_kind(lambda, IdealKind::two_sided);
  c.require(!fc.ok, "the published membership function is rejected as a fuzzy ideal");
  c.require(fc.axiom == "mul_right" && fc.elems.size() == 2 &&
                H.element_name(fc.elems[0]) == "c" && H.element_name(fc.elems[1]) == "b",
            "rejection witness is lambda(c*b) < lambda(c)");
  if (fc.elems.size() == 2)
    c.require(lambda.at(H.mul(fc.elems[0], fc.elems[1])) < lambda.at(fc.elems[0]),
              "fuzzy witness replays");

  const fs::path dir = fs::temp_directory_path() / "hw_acceptance_fixtures";
  fs::remove_all(dir);
  fixtures::write_fixtures(dir);
  const json ann = read_json_file(dir / "four_cyclic_annotation.json");
  c.require(ann["published"]["lambda_intrinsic_mu"] ==
                json({{"0", "3/5"}, {"a", "2/5"}, {"b", "2/5"}, {"c", "3/5"}}),
            "published product values recorded verbatim");
  const FuzzySubset mu = named_values(H, fixtures::four_cyclic_mu());
  const json live = fuzzy_to_json(h_intrinsic_product(lambda, mu))["values"];
  c.require(ann["computed"]["lambda_intrinsic_mu"] == live,
            "annotation carries this tool's own computation alongside");
  c.require(live != ann["published"]["lambda_intrinsic_mu"],
            "direct computation disagrees with the published values");
  fs::remove_all(dir);

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 1.0, "quarantine suite finishes under a second");
}

void criterion_3(Criterion& c) {
  // independent full-table-scan oracle at order 2
  std::set<CanonicalForm> oracle;
  for (int bits = 0; bits < 256; ++bits) {
    TableData t;
    t.name = "scan";
    t.elements = {"0", "e"};
    for (int cell = 0; cell < 4; ++cell) t.add.push_back((bits >> cell) & 1);
    for (int cell = 0; cell < 4; ++cell) t.mul.push_back((bits >> (4 + cell)) & 1);
    if (verify_axioms(t).valid) oracle.insert(canonical_form(Hemiring::from_tables(t)));
  }
  const auto order2 = enumerate_hemirings(2);
  std::set<CanonicalForm> generated;
  for (const auto& r : order2) generated.insert(canonical_form(r));
  c.require(order2.size() == 4, "order-2 enumeration yields 4 structures");
  c.require(generated == oracle, "order-2 enumeration matches the full-scan oracle");

  const auto t0 = std::chrono::steady_clock::now();
  const auto order3 = enumerate_hemirings(3);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 60.0, "order-3 enumeration completes under 60s");
  c.require(order3.size() == 22, "order-3 count matches the frozen constant 22");
  for (const auto& r : order3)
    c.require(verify_axioms(r.table_data()).valid, "order-3 output verifies");
}

void criterion_4(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x5eed);
  long checked = 0;
  for (const Hemiring& H : corpus_up_to_3()) {
    for (int s = 0; s < 500; ++s) {
      FuzzySubset l = constant_fuzzy(H, Rat::zero());
      FuzzySubset r = constant_fuzzy(H, Rat::zero());
      for (auto& v : l.values) v = Rat(static_cast<std::int64_t>(rng() % 5), 4);
      for (auto& v : r.values) v = Rat(static_cast<std::int64_t>(rng() % 5), 4);
      for (FuzzyOp op : {FuzzyOp::h_product, FuzzyOp::h_intrinsic, FuzzyOp::h_sum}) {
        ++checked;
        if (!(apply_fuzzy_op(l, r, op) == oracle_product(l, r, op))) {
          c.require(false, "sampled pair disagrees with the oracle on " + H.name());
          return;
        }
      }
    }
    for (Mask a = 1; a <= H.full_mask(); ++a)
      for (Mask b = 1; b <= H.full_mask(); ++b) {
        const FuzzySubset ca = characteristic(H, a);
        const FuzzySubset cb = characteristic(H, b);
        for (FuzzyOp op : {FuzzyOp::h_product, FuzzyOp::h_intrinsic, FuzzyOp::h_sum}) {
          ++checked;
          if (!(apply_fuzzy_op(ca, cb, op) == oracle_product(ca, cb, op))) {
            c.require(false, "characteristic pair disagrees with the oracle on " + H.name());
            return;
          }
        }
      }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.log << "    " << checked << " product comparisons, all exact\n";
  c.require(secs < 300.0, "oracle equivalence finishes under 5 minutes");
}

void criterion_5(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Config cfg;
  cfg.grid_denominator = 4;
  const std::vector<std::string> ids{
      "L2.1", "L2.2", "L2.3", "L2.5", "Transfer", "P2.8", "P2.9", "P3.2",
      "T3.3", "T4.7", "T5.1", "T5.5", "T6.2", "T6.9", "C5.7", "C6.10",
      "P4.1", "T6.4", "T4.5", "T2.11", "T3.4", "P4.3", "T6.5", "T5.10",
      "T5.13", "C4.9", "T4.8"};
  const auto corpus = corpus_up_to_3();
  const auto [reports, summary] = run_suite(corpus, ids, cfg);
  c.log << "    " << summary.holds << " holds, " << summary.fails << " fails, "
        << summary.vacuous << " vacuous, " << summary.errors << " errors over "
        << corpus.size() << " structures\n";
  for (const auto& r : reports)
    if (r.status == CheckStatus::fails)
      c.log << "    fails: " << r.statement << " on " << r.structure << " witness "
            << r.witness.dump() << "\n";
  c.require(summary.fails == 0, "no statement fails on the order<=3 corpus at D=4");
  c.require(summary.errors == 0, "no statement errors");
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 600.0, "statement suite finishes under 10 minutes");
}

void criterion_6(Criterion& c) {
  Config cfg;
  cfg.grid_denominator = 4;
  for (const Hemiring& H : corpus_up_to_3()) {
    const IdealFamily F = enumerate_h_ideals(H, cfg);
    for (Mask p : F.members) {
      if (p == H.full_mask()) continue;
      const Classification cls = classify_h_ideal(H, p, F);
      if (cls.is_prime)
        c.require(cls.is_semiprime, "prime implies semiprime on " + H.name());
      c.require(cls.prime_tests_agree,
                "element-wise and family-wise prime tests agree on " + H.name());
      c.require(cls.semiprime_tests_agree,
                "element-wise and family-wise semiprime tests agree on " + H.name());
    }

    const auto family = enumerate_grid_fuzzy_ideals(H, 4, IdealKind::h, cfg);
    for (const FuzzySubset& d : family) {
      if (is_constant(d)) continue;
      if (h_prime_condition(d, family)) {
        const FuzzyClassification fc = classify_fuzzy(d, family, cfg);
        c.require(fc.prime2.value_or(false),
                  "grid h-prime implies second-sense prime on " + H.name());
      }
    }
  }
}

} // namespace

int main() {
  run(1, "valid fixture: verification, ideals, fuzzy family, hemiregularity", criterion_1);
  run(2, "quarantined fixture: axiom witness, fuzzy rejection, annotation", criterion_2);
  run(3, "generator: order-2 oracle match, order-3 frozen count", criterion_3);
  run(4, "level-cut products equal the definition-level oracle", criterion_4);
  run(5, "statement suite over the order<=3 corpus", criterion_5);
  run(6, "prime/semiprime implications and test agreement", criterion_6);
  if (failures == 0) std::printf("all acceptance criteria pass\n");
  return failures;
}
