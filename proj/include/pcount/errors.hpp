#pragma once

#include <stdexcept>
#include <string>

namespace pcount {

// Base of every error raised by the library. `code()` is a short stable token
// that the command-line tool prints so failures can be parsed by scripts.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// An enumeration bound (vertex count, label count, sweep size) was exceeded.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message) : Error("capacity", message) {}
};

// Malformed input text: graph files, colouring files, property specs, flags.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse", message) {}
};

class InvalidTupleError : public Error {
 public:
  explicit InvalidTupleError(const std::string& message) : Error("invalid-tuple", message) {}
};

// Arguments are well formed but outside the operation's domain, e.g. a
// colouring whose palette does not match the pattern size.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain", message) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message) : Error("precondition", message) {}
};

class InfeasibleInstanceError : public Error {
 public:
  explicit InfeasibleInstanceError(const std::string& message)
      : Error("infeasible-instance", message) {}
};

class WitnessNotFoundError : public Error {
 public:
  explicit WitnessNotFoundError(const std::string& message)
      : Error("witness-not-found", message) {}
};

// Raised when an identity that must hold by construction fails. Always a bug.
class InternalConsistencyError : public Error {
 public:
  explicit InternalConsistencyError(const std::string& message)
      : Error("internal-consistency", message) {}
};

}  // namespace pcount
