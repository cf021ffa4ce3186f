#pragma once

#include <stdexcept>
#include <string>

namespace ovc {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input: formula strings, JSON documents, sets files.
struct ParseError : Error {
    using Error::Error;
};

// A structural invariant of an election or control instance is violated.
struct ValidationError : Error {
    ValidationError(std::string violation_code, const std::string& message)
        : Error(message), code(std::move(violation_code)) {}
    std::string code;
};

// A configured resource cap (candidate count for universal branching) was hit.
struct CapError : Error {
    using Error::Error;
};

}  // namespace ovc
