#pragma once

#include <filesystem>

#include "hemiring/hemiring.hpp"
#include "hemiring/rational.hpp"

namespace hemiring::fixtures {

// Three-element commutative hemiring with identity; addition is the join of
// the chain 0 < 1 < a. Its only h-ideal is the whole carrier, every grid
// fuzzy h-ideal over it is constant, and it is h-hemiregular.
Hemiring three_chain();

// Four-element table pair whose addition is fine but whose multiplication
// breaks both distributive laws; kept quarantined for table-level analysis
// and for regression-testing the axiom checker. `published_*` return the
// membership values that circulate with these tables so they can be recorded
// next to what direct computation actually gives.
Hemiring four_cyclic();
std::vector<std::pair<std::string, Rat>> four_cyclic_lambda();   // 0.8 / 0.4
std::vector<std::pair<std::string, Rat>> four_cyclic_mu();       // 0.6 / 0.5
std::vector<std::pair<std::string, Rat>> four_cyclic_delta();    // 0.7 / 0.45
std::vector<std::pair<std::string, Rat>> four_cyclic_published_odot();  // 0.6 / 0.4

// The four order-2 hemirings, named by their addition/multiplication shape.
Hemiring two_bool();        // e+e=e, e*e=e
Hemiring two_field();       // e+e=0, e*e=e
Hemiring two_bool_null();   // e+e=e, e*e=0
Hemiring two_field_null();  // e+e=0, e*e=0

Hemiring trivial();         // one element

// Writes three_chain.json, four_cyclic.json and four_cyclic_annotation.json
// into `dir`. The annotation pairs the published values with this library's
// own computation over the printed tables. Returns the written paths.
std::vector<std::filesystem::path> write_fixtures(const std::filesystem::path& dir);

} // namespace hemiring::fixtures
