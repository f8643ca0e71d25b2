#pragma once

#include <stdexcept>
#include <string>

namespace fano {

// Input data violates a precondition the caller could have checked.
struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : UserError {
  using UserError::UserError;
};

// Origin is not strictly interior to the hull.
struct InteriorityError : UserError {
  using UserError::UserError;
};

struct RankError : UserError {
  using UserError::UserError;
};

struct DegeneracyError : UserError {
  using UserError::UserError;
};

struct ReflexivityError : UserError {
  using UserError::UserError;
};

struct DomainError : UserError {
  using UserError::UserError;
};

struct ParseError : UserError {
  using UserError::UserError;
};

struct ValidationError : UserError {
  using UserError::UserError;
};

// A postcondition that should hold by theorem failed: a bug, not bad input.
// The CLI maps this to exit code 2.
struct InternalInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fano
