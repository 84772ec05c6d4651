#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hemiring/config.hpp"
#include "hemiring/rational.hpp"
#include "hemiring/subsets.hpp"

namespace hemiring {

// Membership function on a hemiring carrier, values exact rationals in [0,1].
struct FuzzySubset {
  const Hemiring* parent = nullptr;
  std::vector<Rat> values;

  int order() const { return static_cast<int>(values.size()); }
  const Rat& at(int e) const { return values[static_cast<std::size_t>(e)]; }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;
};

FuzzySubset constant_fuzzy(const Hemiring& H, const Rat& value);

// Distinct values, ascending.
std::vector<Rat> image(const FuzzySubset& f);

bool is_constant(const FuzzySubset& f);

// U(f;t) = {x : f(x) >= t}
Mask level_set(const FuzzySubset& f, const Rat& t);

// t on the subset, s elsewhere; requires 0 <= s < t <= 1.
FuzzySubset two_valued_indicator(const Hemiring& H, Mask subset,
                                 const Rat& t, const Rat& s);

FuzzySubset characteristic(const Hemiring& H, Mask subset);  // t=1, s=0

FuzzySubset pointwise_meet(const FuzzySubset& a, const FuzzySubset& b);
FuzzySubset pointwise_join(const FuzzySubset& a, const FuzzySubset& b);
bool pointwise_leq(const FuzzySubset& a, const FuzzySubset& b);

// Level-cut view of a fuzzy subset: thresholds strictly decreasing, level
// sets nested upward as the threshold drops. Decomposition and
// reconstruction are mutually inverse.
struct LevelChain {
  const Hemiring* parent = nullptr;
  std::vector<std::pair<Rat, Mask>> levels;
};

LevelChain level_chain(const FuzzySubset& f);
FuzzySubset from_level_chain(const LevelChain& chain);

enum class FuzzyMethod { direct, levels };

struct FuzzyCheck {
  bool ok = false;
  // axiom in {"add", "mul_left", "mul_right", "k_condition", "h_condition"}
  // for the direct method; "level" for the levels method with `level` set and
  // the crisp witness appended to elems.
  std::string axiom;
  std::vector<int> elems;
  Rat level;
};

FuzzyCheck is_fuzzy_ideal_of_kind(const FuzzySubset& f, IdealKind kind,
                                  FuzzyMethod method = FuzzyMethod::direct);

enum class FuzzyOp { h_product, h_intrinsic, h_sum };

// Level-cut implementations of the three fuzzy operations. Thresholds range
// over Im(lhs) ∪ Im(rhs) ∪ {0}; representability is monotone in the
// threshold, so the sup in each definition is the largest admitting one.
FuzzySubset h_product(const FuzzySubset& lhs, const FuzzySubset& rhs);
FuzzySubset h_intrinsic_product(const FuzzySubset& lhs, const FuzzySubset& rhs);
FuzzySubset h_sum(const FuzzySubset& lhs, const FuzzySubset& rhs);
FuzzySubset apply_fuzzy_op(const FuzzySubset& lhs, const FuzzySubset& rhs, FuzzyOp op);

// All fuzzy subsets with values on the grid {0, 1/D, ..., 1} whose non-empty
// level sets are all ideals of the given kind — equivalently, descending
// chains over the crisp ideal family. Throws capacity_error past the budget.
std::vector<FuzzySubset> enumerate_grid_fuzzy_ideals(
    const Hemiring& H, int grid_denominator, IdealKind kind = IdealKind::h,
    const Config& cfg = Config{});

// First-sense quantifier conditions relative to a family. These are the raw
// conditions; FuzzyClassification applies the non-constant precondition on
// top of them.
bool h_prime_condition(const FuzzySubset& d, const std::vector<FuzzySubset>& family);
bool h_semiprime_condition(const FuzzySubset& d, const std::vector<FuzzySubset>& family);
bool irreducible_condition(const FuzzySubset& d, const std::vector<FuzzySubset>& family);

struct FuzzyClassification {
  bool is_constant = false;
  std::string precondition_note;  // "non-constant required" when constant

  // Second sense, absolute. Two routes: the direct quantifier over
  // thresholds, and element-wise classification of every proper level set.
  std::optional<bool> prime2, prime2_levels;
  bool prime2_agree = true;
  std::optional<bool> semiprime2, semiprime2_levels;  // a·x·a form
  bool semiprime2_agree = true;
  std::optional<std::pair<int, int>> prime2_witness;   // a, b
  std::optional<int> semiprime2_witness;               // a

  // First sense, quantified over the supplied grid family only.
  bool grid_relative = true;
  std::optional<bool> h_prime, h_semiprime, irreducible;

  bool idempotent = false;  // d ⊙ d == d

  // Shortcuts for commutative hemirings with identity, cross-checked
  // against the second-sense results.
  std::optional<bool> product_identity_prime;     // d(ab) == d(a) ∨ d(b)
  std::optional<bool> square_identity_semiprime;  // d(a²) == d(a)
  bool identity_shortcuts_agree = true;
};

// Requires d to be a fuzzy h-ideal; family is an enumerated grid fuzzy
// h-ideal family whose grid covers Im(d).
FuzzyClassification classify_fuzzy(const FuzzySubset& d,
                                   const std::vector<FuzzySubset>& family,
                                   const Config& cfg = Config{});

} // namespace hemiring
