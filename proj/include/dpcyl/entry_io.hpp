#pragma once

// JSON entry files. Rationals are written as "p/q" strings (bare integers are
// also accepted); decimal literals are rejected. Errors are InvalidInput and
// carry either "line:column" for syntax errors or the JSON pointer of the
// offending field.
//
// Entry file:
//   { "name", "degree", "expected_type",
//     "seed": {"form", "coefficients": {id: "p/q"}},
//     "curves": [{"id", "kind": "line"|"conic"}],
//     "points": [{"id": 1, "parent": "E<j>" (optional), "on": [ids]}],
//     "tiger": {id: "p/q"}, "contraction": [ids], "complement" }
// A missing parent is read as the latest exceptional curve in "on", if any.
//
// Configuration file (for classification): "curves", "points" and optionally
// "name" and "contraction". Entry files are valid configuration files.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dpcyl/constructions.hpp"

namespace dpcyl {

using Json = nlohmann::ordered_json;

ConstructionEntry parse_entry(std::string_view text, const std::string& source = "<input>");
ConstructionEntry load_entry(const std::filesystem::path& path);
Json entry_to_json(const ConstructionEntry& entry);
// Pretty-printed, deterministic.
std::string serialize_entry(const ConstructionEntry& entry);

struct ConfigFile {
  std::string name;
  std::vector<CurveDecl> curves;
  std::vector<PointDecl> points;
  std::vector<std::string> contraction;
};

ConfigFile parse_config(std::string_view text, const std::string& source = "<input>");
ConfigFile load_config(const std::filesystem::path& path);

// Every *.json file directly inside `dir`, parsed, ordered by file name.
std::vector<ConstructionEntry> load_fixture_dir(const std::filesystem::path& dir);

Json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace dpcyl
