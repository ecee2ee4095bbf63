#pragma once

// JSON model files:
//   {"name": "...", "generators": ["x", ...],
//    "d": {"h": [{"coeff": "-1", "indices": [1, 2]}], ...},
//    "omega": [{"coeff": "1", "indices": [4, 1]}, ...],
//    "vol": "1"}
// Indices are 1-based generator positions in any order (the sign of the
// sorting permutation is applied). "d" entries may be omitted for closed
// generators; "vol" is optional.

#include <filesystem>
#include <string>
#include <string_view>

#include "symcoh/ce_model.hpp"

namespace symcoh {

/// Throws ParseError on malformed documents and InvariantError when the model
/// fails validate().
CEModel parse_model(std::string_view json_text);
CEModel load_model_file(const std::filesystem::path& path);

/// Canonical pretty-printed document; parse_model(serialize_model(m)) reproduces m.
std::string serialize_model(const CEModel& model);

}  // namespace symcoh
