#pragma once

#include <stdexcept>
#include <string>

namespace fanodelta {

/// Input lies outside the range where a formula is defined.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (rationals, delta knowledge, JSON).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two independent computations of the same quantity disagree.
class OracleDisagreement : public std::runtime_error {
 public:
  explicit OracleDisagreement(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fanodelta
