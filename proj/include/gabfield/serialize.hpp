#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gabfield/code.hpp"

namespace gabfield {

/// {"rows": r, "cols": c, "entries": [[canonical strings]]}
nlohmann::json matrix_to_json(const KMatrix& m);

/// JSON array of canonical element strings.
nlohmann::json lvector_to_json(std::span<const LElement> v);

/// Column-aligned plain-text grid, one matrix row per line.
std::string to_text_grid(const std::vector<std::vector<std::string>>& cells);
std::string to_text_grid(const KMatrix& m);
std::string generator_grid(const GabCode& code);

}  // namespace gabfield
