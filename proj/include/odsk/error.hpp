#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace odsk {

/// Malformed input file or document.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates an operation's precondition
/// (unknown names, empty sets, missing scale specs, ...).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The closure of a relation has nontrivial strongly connected classes.
class antisymmetry_violation : public validation_error {
 public:
  explicit antisymmetry_violation(std::vector<std::vector<std::string>> classes)
      : validation_error(describe(classes)), classes_(std::move(classes)) {}

  const std::vector<std::vector<std::string>>& classes() const { return classes_; }

 private:
  static std::string describe(const std::vector<std::vector<std::string>>& classes) {
    std::string msg = "relation is not antisymmetric; equivalent classes:";
    for (const auto& c : classes) {
      msg += " {";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) msg += ",";
        msg += c[i];
      }
      msg += "}";
    }
    return msg;
  }

  std::vector<std::vector<std::string>> classes_;
};

struct dimension_bounds_t {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// A configured size, count or time budget was exceeded. Dimension search
/// attaches the certified bounds it had when it gave up.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what,
                           std::optional<dimension_bounds_t> bounds = std::nullopt)
      : std::runtime_error(what), bounds_(bounds) {}

  const std::optional<dimension_bounds_t>& bounds() const { return bounds_; }

 private:
  std::optional<dimension_bounds_t> bounds_;
};

}  // namespace odsk
