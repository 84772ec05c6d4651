#pragma once

#include "hemiring/fuzzy.hpp"

namespace hemiring {

// Computes the three fuzzy operations straight from their sup-of-min
// definitions: a fixpoint over (partial-sum element, best running minimum)
// states followed by a scan of the defining equations. Deliberately shares
// no code with the level-cut implementations so the two can cross-check
// each other.
FuzzySubset oracle_product(const FuzzySubset& lhs, const FuzzySubset& rhs, FuzzyOp op);

} // namespace hemiring
