#pragma once

#include <stdexcept>
#include <string>

namespace emoscan {

// File could not be opened/read/written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// File opened fine but its contents are invalid (bad line, duplicate entry,
// unknown token, corrupt or truncated model, version mismatch...).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace emoscan
