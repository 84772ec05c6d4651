#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hemiring/fuzzy.hpp"
#include "hemiring/hemiring.hpp"
#include "hemiring/subsets.hpp"

namespace hemiring {

using json = nlohmann::ordered_json;

// Hemiring files: {"name", "elements", "add", "mul"} with tables written in
// element names and the zero at index 0. Parsing is strict: unknown keys are
// rejected.
TableData parse_table_json(const json& j);
TableData load_table_file(const std::filesystem::path& path);
json table_to_json(const TableData& t);

// Fuzzy subset files: {"hemiring": <name>, "values": {<element>: "p/q"}}.
// Every denominator must divide the grid denominator.
FuzzySubset parse_fuzzy_json(const json& j, const Hemiring& H, int grid_denominator);
FuzzySubset load_fuzzy_file(const std::filesystem::path& path, const Hemiring& H,
                            int grid_denominator);
json fuzzy_to_json(const FuzzySubset& f);

// Comma-separated element names, e.g. "0,a".
Mask parse_subset(const Hemiring& H, const std::string& names);

json axiom_report_to_json(const AxiomReport& rep, const TableData& t);

void write_json_file(const std::filesystem::path& path, const json& j);
json read_json_file(const std::filesystem::path& path);

// Corpus manifest: counts per order plus the file list. `update_manifest`
// merges one order's files into an existing manifest if present.
void update_manifest(const std::filesystem::path& dir, int order,
                     const std::vector<std::string>& files);
std::vector<std::string> manifest_files(const std::filesystem::path& dir);

} // namespace hemiring
