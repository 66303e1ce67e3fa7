#pragma once

#include <stdexcept>
#include <string>

namespace rtspan {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally bad input: out-of-range vertex ids, unparseable files.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An edge weight below 1.
class WeightDomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid algorithm parameter (k, edge probability, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A spanner references an edge that is not part of the graph.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// A proven algorithmic invariant failed at runtime (for example h > k-1).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rtspan
