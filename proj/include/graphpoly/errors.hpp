#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphpoly {

/// Precondition or argument violation (invalid vertex, missing binding, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoSuchEdgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input outside what a text format can express (e.g. loops in graph6).
class UnsupportedFormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A stored occurrence or certificate no longer matches the graph it refers to.
class ConsistencyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Interpolation nodes that do not form a full grid of distinct points.
class NumericRankError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested operation has no implementation for this input class.
class NotSupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DomainError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Requested computation exceeds a configured exponential budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphpoly
