#pragma once

#include <stdexcept>
#include <string>

namespace hofc {

// Malformed textual or JSON input. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that parses but violates a documented precondition. Exit code 3.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A lookup into a finite table outside the range it was computed for.
class MissingValue : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace hofc
