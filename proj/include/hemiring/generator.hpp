#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hemiring/config.hpp"
#include "hemiring/hemiring.hpp"

namespace hemiring {

// Lexicographically minimal concatenated (add, mul) tables over the
// permutations fixing index 0. The zero is preserved by every isomorphism
// (it is the unique additive identity), so this is a complete invariant.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint8_t> tables;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Hemiring& H);
bool are_isomorphic(const Hemiring& a, const Hemiring& b);

// Every hemiring of the given order, exactly once up to isomorphism, in
// canonical-form order. Additions (commutative monoids with the zero at
// index 0) are generated first; multiplications are filled cell by cell with
// associativity/distributivity pruning against the fixed addition.
std::vector<Hemiring> enumerate_hemirings(int order, const Config& cfg = Config{});

} // namespace hemiring
