#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace psmt {

// Malformed model/path file. Message carries file and field context.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The model failed structural validation; message lists the violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when requirements exist but none of them can be embedded in a valid
// test path for the given length range. Carries the infeasible requirement
// descriptions so the caller can report what to change.
class NoPathsPossibleError : public std::runtime_error {
 public:
  NoPathsPossibleError(const std::string& what, std::vector<std::string> infeasible)
      : std::runtime_error(what), infeasible_requirements(std::move(infeasible)) {}
  std::vector<std::string> infeasible_requirements;
};

// Bounded-length path enumeration exceeded its cap; raise the cap or shrink
// the length range.
class EnumerationOverflowError : public std::runtime_error {
 public:
  explicit EnumerationOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Requested defect counts exceed what the graph can host.
class InsufficientCandidatesError : public std::runtime_error {
 public:
  explicit InsufficientCandidatesError(const std::string& what) : std::runtime_error(what) {}
};

// Instance generator cannot realize the requested exact-match properties.
class SpecUnsatisfiableError : public std::runtime_error {
 public:
  explicit SpecUnsatisfiableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace psmt
