#pragma once

#include <string>

#include <json.hpp>

#include "gabfield/code.hpp"

namespace gabfield {

/// A built code plus the owning handles of its field tower.
struct BuiltCode {
    std::shared_ptr<const FqContext> ctx;
    std::shared_ptr<const CyclicExtension> ext;
    GabCode code;
};

/// Construct the full pipeline from a config document:
/// {
///   "field":     {"p": 2, "m": 4, "modulus": [1,1,0,0,1], "symbol": "β"},
///   "extension": {"kind": "kummer"|"artin-schreier", "u": "x", "n": 5, "alpha": "β^3"},
///   "code":      {"k": 3, "g": ["1","y","y^2","y^3","y^4"]}
/// }
/// "modulus" lists coefficients lowest degree first. "n" and "alpha" apply to
/// Kummer extensions only ("alpha" optional); "g" is optional and defaults to
/// the integral basis.
BuiltCode build_from_config(const nlohmann::json& doc);

/// Read and parse a JSON config file; throws ValidationError on IO failure.
nlohmann::json load_config_file(const std::string& path);

}  // namespace gabfield
