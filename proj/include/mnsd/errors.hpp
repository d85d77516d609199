#pragma once

#include <stdexcept>
#include <string>

namespace mnsd {

// Violated precondition or malformed value supplied by the caller.
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed type string; the message names the offending token.
struct ParseError : InvalidInput {
    explicit ParseError(const std::string& what) : InvalidInput(what) {}
};

// Unknown filter id, bad configuration key, and similar setup mistakes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Lookup of a record that is not part of the shipped reference data.
struct NotFound : std::runtime_error {
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mnsd
