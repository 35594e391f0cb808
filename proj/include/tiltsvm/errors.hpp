#pragma once

#include <stdexcept>
#include <string>

namespace tiltsvm {

// Bad data fed to an operation (dimension mismatch, non-finite value, ...).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad configuration (out-of-range parameter, empty grid, ...).
struct InvalidConfig : std::invalid_argument {
  explicit InvalidConfig(const std::string& msg) : std::invalid_argument(msg) {}
};

// Filesystem / serialization failure.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// No usable result (e.g. selection over a sweep where every point failed).
struct NoResult : std::runtime_error {
  explicit NoResult(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tiltsvm
