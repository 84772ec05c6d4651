#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hemiring/config.hpp"
#include "hemiring/hemiring.hpp"

namespace hemiring {

// Subsets of a carrier are membership masks; bit i is the element at index i.
using Mask = std::uint32_t;

inline bool mask_contains(Mask m, int e) { return (m >> e) & 1u; }
inline Mask mask_of(int e) { return Mask{1} << e; }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

enum class IdealKind {
  left,
  right,
  two_sided,
  k,        // two-sided + k-condition
  h,        // two-sided + h-condition
  left_k,
  right_k,
  left_h,
  right_h,
};

const char* kind_name(IdealKind k);
std::optional<IdealKind> parse_kind(const std::string& s);

struct IdealCheck {
  bool ok = false;
  // On failure: which condition broke and the witness tuple. Witness layout:
  //   add_closed        {a, b}
  //   left_absorption   {r, a}        r*a escapes
  //   right_absorption  {a, r}        a*r escapes
  //   k_condition       {x, a, b}     x+a = b with a,b inside, x outside
  //   h_condition       {x, a, b, y}  x+a+y = b+y with a,b inside, x outside
  std::string condition;
  std::vector<int> witness;
};

// h-closure of a non-empty subset: every x with x+a+y = b+y for some
// a,b in the subset and y anywhere in R (including 0).
Mask h_closure(const Hemiring& H, Mask subset);

// All values of non-empty finite sums drawn from the subset.
Mask additive_closure(const Hemiring& H, Mask subset);

// {a+b : a in A, b in B}, no additive closure.
Mask sum_set(const Hemiring& H, Mask a, Mask b);

// Ideal product: additive closure of the pairwise products.
Mask product_set(const Hemiring& H, Mask a, Mask b);

IdealCheck is_ideal_of_kind(const Hemiring& H, Mask subset, IdealKind kind);

// Smallest h-ideal containing the subset; the empty subset yields the
// h-closure of {0}.
Mask generated_h_ideal(const Hemiring& H, Mask subset);

struct IdealFamily {
  const Hemiring* parent = nullptr;
  std::vector<Mask> members;  // sorted ascending by mask value
  bool complete = false;
};

// All ideals of the given kind. Mask scan up to the brute-force cap; for
// kind == h a closure-system construction from principal h-ideals covers
// larger orders (every h-ideal is the join of its principal h-ideals).
IdealFamily enumerate_ideals(const Hemiring& H, IdealKind kind,
                             const Config& cfg = Config{});
IdealFamily enumerate_h_ideals(const Hemiring& H, const Config& cfg = Config{});

struct HemiregularityReport {
  bool ok = false;
  struct Triple { int x, y, z; };
  std::vector<std::optional<Triple>> witnesses;  // per element a: a+axa+z = aya+z
  std::optional<int> failing_element;
};

HemiregularityReport is_h_hemiregular(const Hemiring& H);

// Lattice operations over a complete h-ideal family.
Mask family_join(const Hemiring& H, Mask a, Mask b);   // h-closure of {x+y}
Mask family_meet(Mask a, Mask b);                      // intersection
std::optional<Mask> family_residual(const Hemiring& H, const IdealFamily& F,
                                    Mask a, Mask b);   // greatest I with a&I <= b
bool family_is_distributive(const Hemiring& H, const IdealFamily& F);
bool family_is_brouwerian(const Hemiring& H, const IdealFamily& F);

struct Classification {
  bool is_proper = false;
  bool is_prime = false;
  bool is_semiprime = false;
  bool is_irreducible = false;
  bool is_h_idempotent = false;
  std::string not_proper_reason;  // "not proper" when the subset is all of R

  // Both routes are recorded; is_prime/is_semiprime report the pairwise
  // family definition.
  bool prime_pairwise = false, prime_elementwise = false, prime_tests_agree = true;
  bool semiprime_pairwise = false, semiprime_elementwise = false, semiprime_tests_agree = true;

  std::optional<std::pair<Mask, Mask>> prime_witness;      // ideals A, B
  std::optional<std::pair<int, int>> prime_element_witness; // a, b
  std::optional<Mask> semiprime_witness;                   // ideal B
  std::optional<int> semiprime_element_witness;            // a
  std::optional<std::pair<Mask, Mask>> irreducible_witness;
};

// Requires `subset` to be an h-ideal and F to be the complete h-ideal family.
Classification classify_h_ideal(const Hemiring& H, Mask subset, const IdealFamily& F);

// {a*x*b : x in R} — element-wise prime test helper.
Mask sandwich_set(const Hemiring& H, int a, int b);

// Diagnostic search: proper h-ideals that are semiprime but not prime.
// The reverse implication (prime implies semiprime) is a checked property;
// this direction is only surveyed, never asserted.
std::vector<Mask> semiprime_not_prime_witnesses(const Hemiring& H, const IdealFamily& F);

std::string mask_to_names(const Hemiring& H, Mask m);

} // namespace hemiring
