#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rps {

/// Raised when an input document or distribution breaks a structural
/// invariant. Carries the itemized violation list when one is available.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}

  ValidationError(const std::string& msg, std::vector<std::string> violations)
      : std::runtime_error(msg), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Raised when an operation would materialize a space larger than its
/// configured cap (permutation event spaces grow like e*n!).
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rps
