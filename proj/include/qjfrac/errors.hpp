#pragma once

#include <stdexcept>
#include <string>

namespace qjfrac {

/// Division by an exact zero (scalar, polynomial or rational function).
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// A rational function in q was asked for its Maclaurin expansion but has a
/// pole at q = 0.
class PoleAtZero : public std::domain_error {
 public:
  explicit PoleAtZero(const std::string& what) : std::domain_error(what) {}
};

/// Malformed expression or serialized value.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qjfrac
