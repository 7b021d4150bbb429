#pragma once

#include <stdexcept>
#include <string>

namespace finalg {

/// Bad user-supplied data: malformed documents, non-prime moduli, shape
/// mismatches, unsupported requests. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource ceiling was hit (truncation bound, search budget).
/// CLI maps this to exit code 3.
struct limit_error : std::runtime_error {
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finalg
