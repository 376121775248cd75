#pragma once

#include <stdexcept>
#include <string>

namespace bk {

// Malformed textual input (ASCII literal or JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a precondition, e.g. a block mismatch or a
// matching whose local picture does not fit.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Seeing one of these means a bug or a
// counterexample to a structural property, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void invariant_failed(const std::string& what) { throw InvariantViolation(what); }

inline void check_invariant(bool ok, const char* what) {
  if (!ok) invariant_failed(what);
}

}  // namespace bk
