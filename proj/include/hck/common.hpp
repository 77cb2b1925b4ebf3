#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hck {

/// Base class of every error the toolkit raises for bad input or a failed precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input refers to something that does not exist or has the wrong shape.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured search budget was exhausted before an answer was certified.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string kind;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// A list of violated laws; empty means the checked structure is valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string detail) {
    violations.push_back({std::move(kind), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool mentions(const std::string& kind) const {
    for (const auto& v : violations)
      if (v.kind == kind) return true;
    return false;
  }
};

}  // namespace hck
