#pragma once

#include <stdexcept>
#include <string>

namespace gabfield {

/// Input failed a mathematical validity check (bad modulus, invalid Kummer
/// element, dependent evaluation points, ...). Maps to CLI exit code 3.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed element/config text. Maps to CLI exit code 3.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gabfield
