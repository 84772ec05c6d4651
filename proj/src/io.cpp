#include "hemiring/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace hemiring {

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::set<std::string>& required, const char* what) {
  if (!j.is_object()) throw input_error(std::string(what) + ": expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key))
      throw input_error(std::string(what) + ": unknown key \"" + key + "\"");
  for (const auto& key : required)
    if (!j.contains(key))
      throw input_error(std::string(what) + ": missing key \"" + key + "\"");
}

std::vector<int> parse_table(const json& arr, const std::vector<std::string>& elements,
                             const char* what) {
  const std::size_t n = elements.size();
  if (!arr.is_array() || arr.size() != n)
    throw input_error(std::string(what) + " table is not " + std::to_string(n) + " rows");
  std::vector<int> out;
  out.reserve(n * n);
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != n)
      throw input_error(std::string(what) + " table row is not " + std::to_string(n) + " wide");
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw input_error(std::string(what) + " table entries must be element names");
      const auto it = std::find(elements.begin(), elements.end(), cell.get<std::string>());
      if (it == elements.end())
        throw input_error(std::string(what) + " table mentions unknown element \"" +
                          cell.get<std::string>() + "\"");
      out.push_back(static_cast<int>(it - elements.begin()));
    }
  }
  return out;
}

json table_names(const TableData& t, const std::vector<int>& table) {
  const int n = t.order();
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j)
      row.push_back(t.elements[static_cast<std::size_t>(table[static_cast<std::size_t>(i) * n + j])]);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

TableData parse_table_json(const json& j) {
  require_keys(j, {"name", "elements", "add", "mul"}, {"name", "elements", "add", "mul"},
               "hemiring file");
  TableData t;
  if (!j["name"].is_string()) throw input_error("hemiring file: \"name\" must be a string");
  t.name = j["name"].get<std::string>();
  if (!j["elements"].is_array() || j["elements"].empty())
    throw input_error("hemiring file: \"elements\" must be a non-empty array");
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw input_error("hemiring file: element names must be strings");
    t.elements.push_back(e.get<std::string>());
  }
  t.add = parse_table(j["add"], t.elements, "add");
  t.mul = parse_table(j["mul"], t.elements, "mul");
  return t;
}

TableData load_table_file(const std::filesystem::path& path) {
  return parse_table_json(read_json_file(path));
}

json table_to_json(const TableData& t) {
  json j;
  j["name"] = t.name;
  j["elements"] = t.elements;
  j["add"] = table_names(t, t.add);
  j["mul"] = table_names(t, t.mul);
  return j;
}

FuzzySubset parse_fuzzy_json(const json& j, const Hemiring& H, int grid_denominator) {
  require_keys(j, {"hemiring", "values"}, {"hemiring", "values"}, "fuzzy subset file");
  if (!j["hemiring"].is_string() || j["hemiring"].get<std::string>() != H.name())
    throw input_error("fuzzy subset file: \"hemiring\" does not name the loaded structure \"" +
                      H.name() + "\"");
  if (!j["values"].is_object())
    throw input_error("fuzzy subset file: \"values\" must be an object");

  FuzzySubset f = constant_fuzzy(H, Rat::zero());
  std::vector<bool> seen(static_cast<std::size_t>(H.order()), false);
  for (const auto& [key, val] : j["values"].items()) {
    const auto idx = H.element_index(key);
    if (!idx) throw input_error("fuzzy subset file: unknown element \"" + key + "\"");
    if (!val.is_string())
      throw input_error("fuzzy subset file: values must be strings like \"3/4\"");
    const auto r = Rat::parse(val.get<std::string>());
    if (!r) throw input_error("fuzzy subset file: cannot parse value \"" +
                              val.get<std::string>() + "\"");
    if (*r < Rat::zero() || Rat::one() < *r)
      throw input_error("fuzzy subset file: value for \"" + key + "\" is outside [0,1]");
    if (grid_denominator % r->den != 0)
      throw input_error("fuzzy subset file: denominator of " + r->str() +
                        " does not divide the grid denominator " +
                        std::to_string(grid_denominator));
    f.values[static_cast<std::size_t>(*idx)] = *r;
    seen[static_cast<std::size_t>(*idx)] = true;
  }
  for (int e = 0; e < H.order(); ++e)
    if (!seen[static_cast<std::size_t>(e)])
      throw input_error("fuzzy subset file: missing value for element \"" +
                        H.element_name(e) + "\"");
  return f;
}

FuzzySubset load_fuzzy_file(const std::filesystem::path& path, const Hemiring& H,
                            int grid_denominator) {
  return parse_fuzzy_json(read_json_file(path), H, grid_denominator);
}

json fuzzy_to_json(const FuzzySubset& f) {
  json values;
  for (int e = 0; e < f.order(); ++e)
    values[f.parent->element_name(e)] = f.at(e).str();
  json j;
  j["hemiring"] = f.parent->name();
  j["values"] = std::move(values);
  return j;
}

Mask parse_subset(const Hemiring& H, const std::string& names) {
  Mask out = 0;
  std::size_t pos = 0;
  while (pos <= names.size()) {
    const std::size_t comma = names.find(',', pos);
    const std::string part =
        names.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!part.empty()) {
      const auto idx = H.element_index(part);
      if (!idx) throw input_error("unknown element \"" + part + "\"");
      out |= mask_of(*idx);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json axiom_report_to_json(const AxiomReport& rep, const TableData& t) {
  json j;
  j["valid"] = rep.valid;
  j["commutative_mul"] = rep.commutative_mul;
  j["identity"] = rep.identity ? json(t.elements[static_cast<std::size_t>(*rep.identity)])
                               : json(nullptr);
  json vs = json::array();
  for (const auto& v : rep.violations) {
    json e;
    e["axiom"] = v.axiom;
    json w = json::array();
    for (int idx : v.where) w.push_back(t.elements[static_cast<std::size_t>(idx)]);
    e["witness"] = std::move(w);
    e["detail"] = v.detail;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(path.string() + ": " + e.what());
  }
  return j;
}

void update_manifest(const std::filesystem::path& dir, int order,
                     const std::vector<std::string>& files) {
  const auto path = dir / "manifest.json";
  json m;
  if (std::filesystem::exists(path)) m = read_json_file(path);
  if (!m.is_object()) m = json::object();
  if (!m.contains("counts") || !m["counts"].is_object()) m["counts"] = json::object();
  if (!m.contains("files") || !m["files"].is_object()) m["files"] = json::object();
  m["counts"][std::to_string(order)] = files.size();
  m["files"][std::to_string(order)] = files;
  write_json_file(path, m);
}

std::vector<std::string> manifest_files(const std::filesystem::path& dir) {
  const auto path = dir / "manifest.json";
  std::vector<std::string> out;
  if (std::filesystem::exists(path)) {
    const json m = read_json_file(path);
    if (m.contains("files"))
      for (const auto& [_, list] : m["files"].items())
        for (const auto& f : list) out.push_back(f.get<std::string>());
  } else {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      const auto name = entry.path().filename().string();
      if (entry.path().extension() == ".json" && name != "manifest.json" &&
          name.find("annotation") == std::string::npos)
        out.push_back(name);
    }
    std::sort(out.begin(), out.end());
  }
  return out;
}

} // namespace hemiring
