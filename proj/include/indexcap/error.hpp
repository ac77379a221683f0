#pragma once

#include <stdexcept>
#include <string>

namespace indexcap {

/// Malformed or out-of-range user input (files, flags, arguments).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap (vertex budget, independent-set cap, column pool,
/// generator count) would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact solver ran out of wall-clock time. Never signals a wrong answer.
class TimeoutError : public std::runtime_error {
 public:
  explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace indexcap
