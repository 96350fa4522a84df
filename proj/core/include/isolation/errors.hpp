#pragma once

#include <stdexcept>
#include <string>

namespace isolab {

/// Base of every error this library throws.
class IsolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph exceeded a size cap (64 vertices overall, 9 for isomorphism and the
/// builtin enumerator).
class SizeCapError : public IsolationError {
 public:
  using IsolationError::IsolationError;
};

/// Arguments outside an operation's domain.
class PreconditionError : public IsolationError {
 public:
  using IsolationError::IsolationError;
};

class Graph6Error : public IsolationError {
 public:
  explicit Graph6Error(const std::string& what, long line = 0)
      : IsolationError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// The input is one of the graphs a theorem excludes.
class ExceptionGraphError : public IsolationError {
 public:
  using IsolationError::IsolationError;
};

/// A prover case produced a set that failed verification. Signals a bug.
class InternalConsistencyError : public IsolationError {
 public:
  using IsolationError::IsolationError;
};

}  // namespace isolab
