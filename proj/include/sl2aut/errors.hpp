#pragma once

#include <stdexcept>
#include <string>

namespace sl2aut {

/// Mathematically invalid input: wrong field, zero where nonzero needed, m < 2, ...
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NoSuchRootError : DomainError {
  explicit NoSuchRootError(const std::string& msg) : DomainError(msg) {}
};

struct NotIsomorphicError : DomainError {
  explicit NotIsomorphicError(const std::string& msg) : DomainError(msg) {}
};

struct NotRealizableError : DomainError {
  explicit NotRealizableError(const std::string& msg) : DomainError(msg) {}
};

/// Requested an infinite enumeration (order-2 classes over Q form one class
/// per square class of Q*, of which there are infinitely many).
struct UnboundedResultError : DomainError {
  explicit UnboundedResultError(const std::string& msg) : DomainError(msg) {}
};

/// Malformed literal (matrix, field spec, entry syntax).
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A post-condition that is supposed to be unreachable failed; indicates a bug.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace sl2aut
