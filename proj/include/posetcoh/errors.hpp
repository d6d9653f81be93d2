#pragma once

#include <stdexcept>
#include <string>

namespace posetcoh {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag (e.g. "CycleDetected"), `what()` the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Malformed or inconsistent input data (bad JSON, invalid poset, shape
// mismatches). CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

inline InputError input_error(const std::string& kind, const std::string& message) {
  return InputError(kind, message);
}

inline Error internal_error(const std::string& message) {
  return Error("Internal", message);
}

}  // namespace posetcoh
