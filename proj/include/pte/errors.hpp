#pragma once

#include <stdexcept>
#include <string>

namespace pte {

/// Base for all solver precondition violations. Callers that need to map
/// failures to process exit codes can catch this one type.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSymmetricError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DiagonalTiesError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class GeneralPositionViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptySurvivorSetError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Symmetry checking enumerates all player permutations; beyond the
/// documented player cap the check is refused rather than approximated.
class UnsupportedPlayerCount : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace pte
