#include "hemiring/fixtures.hpp"

#include "hemiring/fuzzy.hpp"
#include "hemiring/fuzzy_oracle.hpp"
#include "hemiring/io.hpp"

namespace hemiring::fixtures {

namespace {

TableData tables(std::string name, std::vector<std::string> elements,
                 std::vector<int> add, std::vector<int> mul) {
  TableData t;
  t.name = std::move(name);
  t.elements = std::move(elements);
  t.add = std::move(add);
  t.mul = std::move(mul);
  return t;
}

FuzzySubset named_values(const Hemiring& H,
                         const std::vector<std::pair<std::string, Rat>>& vals) {
  FuzzySubset f = constant_fuzzy(H, Rat::zero());
  for (const auto& [name, r] : vals)
    f.values[static_cast<std::size_t>(*H.element_index(name))] = r;
  return f;
}

json values_json(const std::vector<std::pair<std::string, Rat>>& vals) {
  json j;
  for (const auto& [name, r] : vals) j[name] = r.str();
  return j;
}

} // namespace

Hemiring three_chain() {
  return Hemiring::from_tables(tables(
      "three_chain", {"0", "a", "1"},
      {0, 1, 2,
       1, 1, 1,
       2, 1, 2},
      {0, 0, 0,
       0, 1, 1,
       0, 1, 2}));
}

Hemiring four_cyclic() {
  return Hemiring::from_tables(tables(
      "four_cyclic", {"0", "a", "b", "c"},
      {0, 1, 2, 3,
       1, 2, 3, 1,
       2, 3, 1, 2,
       3, 1, 2, 3},
      {0, 0, 0, 0,
       0, 1, 2, 3,
       0, 2, 2, 3,
       0, 3, 2, 3}),
      /*quarantine=*/true);
}

std::vector<std::pair<std::string, Rat>> four_cyclic_lambda() {
  return {{"0", {4, 5}}, {"a", {2, 5}}, {"b", {2, 5}}, {"c", {4, 5}}};
}
std::vector<std::pair<std::string, Rat>> four_cyclic_mu() {
  return {{"0", {3, 5}}, {"a", {1, 2}}, {"b", {1, 2}}, {"c", {3, 5}}};
}
std::vector<std::pair<std::string, Rat>> four_cyclic_delta() {
  return {{"0", {7, 10}}, {"a", {9, 20}}, {"b", {9, 20}}, {"c", {7, 10}}};
}
std::vector<std::pair<std::string, Rat>> four_cyclic_published_odot() {
  return {{"0", {3, 5}}, {"a", {2, 5}}, {"b", {2, 5}}, {"c", {3, 5}}};
}

Hemiring two_bool() {
  return Hemiring::from_tables(tables("two_bool", {"0", "e"}, {0, 1, 1, 1}, {0, 0, 0, 1}));
}
Hemiring two_field() {
  return Hemiring::from_tables(tables("two_field", {"0", "e"}, {0, 1, 1, 0}, {0, 0, 0, 1}));
}
Hemiring two_bool_null() {
  return Hemiring::from_tables(tables("two_bool_null", {"0", "e"}, {0, 1, 1, 1}, {0, 0, 0, 0}));
}
Hemiring two_field_null() {
  return Hemiring::from_tables(tables("two_field_null", {"0", "e"}, {0, 1, 1, 0}, {0, 0, 0, 0}));
}

Hemiring trivial() {
  return Hemiring::from_tables(tables("trivial", {"0"}, {0}, {0}));
}

std::vector<std::filesystem::path> write_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  const Hemiring valid = three_chain();
  const auto valid_path = dir / "three_chain.json";
  write_json_file(valid_path, table_to_json(valid.table_data()));
  written.push_back(valid_path);

  const Hemiring quarantined = four_cyclic();
  const auto q_path = dir / "four_cyclic.json";
  write_json_file(q_path, table_to_json(quarantined.table_data()));
  written.push_back(q_path);

  const TableData qt = quarantined.table_data();
  const AxiomReport rep = verify_axioms(qt);

  const FuzzySubset lambda = named_values(quarantined, four_cyclic_lambda());
  const FuzzySubset mu = named_values(quarantined, four_cyclic_mu());
  const FuzzySubset computed = h_intrinsic_product(lambda, mu);
  const FuzzySubset computed_oracle = oracle_product(lambda, mu, FuzzyOp::h_intrinsic);

  json ann;
  ann["structure"] = quarantined.name();
  ann["status"] = "quarantined";
  ann["axiom_report"] = axiom_report_to_json(rep, qt);
  json pub;
  pub["lambda"] = values_json(four_cyclic_lambda());
  pub["mu"] = values_json(four_cyclic_mu());
  pub["delta"] = values_json(four_cyclic_delta());
  pub["lambda_intrinsic_mu"] = values_json(four_cyclic_published_odot());
  pub["note"] =
      "values published alongside these tables; the tables fail the "
      "distributive laws, so these are recorded as text, not as expectations";
  ann["published"] = std::move(pub);
  json comp;
  comp["lambda_intrinsic_mu"] = fuzzy_to_json(computed)["values"];
  comp["lambda_intrinsic_mu_oracle"] = fuzzy_to_json(computed_oracle)["values"];
  comp["note"] = "direct computation over the printed tables, for the record";
  ann["computed"] = std::move(comp);

  const auto ann_path = dir / "four_cyclic_annotation.json";
  write_json_file(ann_path, ann);
  written.push_back(ann_path);
  return written;
}

} // namespace hemiring::fixtures
