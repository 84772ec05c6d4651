#include "hemiring/fuzzy_oracle.hpp"

#include <optional>
#include <vector>

namespace hemiring {

namespace {

// best[s] = the largest achievable "running minimum of term memberships"
// over all admissible decompositions of s, or nullopt when s has none.
using Best = std::vector<std::optional<Rat>>;

Best seed_products(const Hemiring& H, const FuzzySubset& l, const FuzzySubset& r) {
  const int n = H.order();
  Best best(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int p = H.mul(a, b);
      const Rat v = rat_min(l.at(a), r.at(b));
      auto& slot = best[static_cast<std::size_t>(p)];
      if (!slot || *slot < v) slot = v;
    }
  return best;
}

Best seed_sums(const Hemiring& H, const FuzzySubset& l, const FuzzySubset& r) {
  const int n = H.order();
  Best best(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int s = H.add(a, b);
      const Rat v = rat_min(l.at(a), r.at(b));
      auto& slot = best[static_cast<std::size_t>(s)];
      if (!slot || *slot < v) slot = v;
    }
  return best;
}

// Extends single-term states by one more product term until nothing improves;
// this is the sums-of-length >= 1 fixpoint.
void relax_sums_of_terms(const Hemiring& H, const Best& terms, Best& best) {
  const int n = H.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      const auto& cur = best[static_cast<std::size_t>(s)];
      if (!cur) continue;
      for (int p = 0; p < n; ++p) {
        const auto& term = terms[static_cast<std::size_t>(p)];
        if (!term) continue;
        const Rat v = rat_min(*cur, *term);
        auto& slot = best[static_cast<std::size_t>(H.add(s, p))];
        if (!slot || *slot < v) {
          slot = v;
          changed = true;
        }
      }
    }
  }
}

} // namespace

FuzzySubset oracle_product(const FuzzySubset& lhs, const FuzzySubset& rhs, FuzzyOp op) {
  if (lhs.parent != rhs.parent)
    throw domain_error("fuzzy operands have different parent hemirings");
  if (!lhs.parent) throw domain_error("fuzzy subset has no parent hemiring");
  const Hemiring& H = *lhs.parent;
  const int n = H.order();

  Best best;
  switch (op) {
    case FuzzyOp::h_product:
      best = seed_products(H, lhs, rhs);
      break;
    case FuzzyOp::h_intrinsic: {
      const Best terms = seed_products(H, lhs, rhs);
      best = terms;
      relax_sums_of_terms(H, terms, best);
      break;
    }
    case FuzzyOp::h_sum:
      best = seed_sums(H, lhs, rhs);
      break;
  }

  FuzzySubset out = constant_fuzzy(H, Rat::zero());
  for (int x = 0; x < n; ++x) {
    std::optional<Rat> value;
    for (int s1 = 0; s1 < n; ++s1) {
      const auto& b1 = best[static_cast<std::size_t>(s1)];
      if (!b1) continue;
      const int xs1 = H.add(x, s1);
      for (int s2 = 0; s2 < n; ++s2) {
        const auto& b2 = best[static_cast<std::size_t>(s2)];
        if (!b2) continue;
        for (int y = 0; y < n; ++y)
          if (H.add(xs1, y) == H.add(s2, y)) {
            const Rat v = rat_min(*b1, *b2);
            if (!value || *value < v) value = v;
            break;
          }
      }
    }
    if (value) out.values[static_cast<std::size_t>(x)] = *value;
  }
  return out;
}

} // namespace hemiring
