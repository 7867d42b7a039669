#pragma once
#include <stdexcept>
#include <string>

namespace vartop {

// One exception type for the whole library; `code` is the stable
// machine-readable tag (AllZero, LengthMismatch, ...) that the CLI and the
// tests match on, `what()` carries the human text.
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
    explicit Error(std::string c) : std::runtime_error(c), code(std::move(c)) {}
};

} // namespace vartop
