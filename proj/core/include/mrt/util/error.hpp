#pragma once

#include <stdexcept>
#include <string>

namespace mrt {

// Bad user input: unreadable files, malformed formats, missing references.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically inconsistent request or data: dimension mismatches,
// violated preconditions, contradictory fixture data.
class math_error : public std::runtime_error {
 public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// A search or iteration budget was exhausted before reaching a conclusion.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mrt
