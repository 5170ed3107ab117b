#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "kbar/zlinalg.hpp"

namespace kbar {

// Carrier of one CLI result. JSON schema, version 1:
//   { "schema_version": 1, "command": str,
//     "group": { "rank": int, "torsion": [int...] },
//     "certificate": { "u": [[..]], "s": [[..]], "v": [[..]] },   (optional)
//     ...command-specific keys merged from `details`... }
// Integers that do not fit 64 bits are emitted as decimal strings.
struct Report {
  std::string command;
  std::optional<AbelianGroup> group;
  std::optional<SnfResult> certificate;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json json_int(const Int& x);
nlohmann::json json_group(const AbelianGroup& g);
nlohmann::json json_matrix(const IntMatrix& m);
nlohmann::json to_json(const Report& r);

}  // namespace kbar
