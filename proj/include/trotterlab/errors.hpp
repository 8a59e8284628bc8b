#pragma once

#include <stdexcept>
#include <string>

namespace trotterlab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shape mismatch (non-square input, incompatible sizes, empty grid).
struct DimensionError : Error {
  using Error::Error;
};

// Non-finite entries, malformed parameters, values outside their documented range.
struct InvalidInputError : Error {
  using Error::Error;
};

// Linear solve rejected; carries the condition estimate that tripped the guard.
struct SingularityError : Error {
  SingularityError(const std::string& what, double cond)
      : Error(what), condition(cond) {}
  double condition;
};

// Input outside the admissible parameter domain (e.g. mu <= 0, alpha out of range).
struct DomainError : Error {
  using Error::Error;
};

// Structurally valid input the algorithm cannot handle (defective matrix,
// spectrum in the wrong half-plane, non-serializable potential).
struct UnsupportedInputError : Error {
  using Error::Error;
};

// Iterative routine exhausted its budget; carries the accuracy actually reached.
struct AccuracyError : Error {
  AccuracyError(const std::string& what, double reached)
      : Error(what), achieved(reached) {}
  double achieved;
};

// Caller violated a stated precondition that is cheap to detect.
struct PreconditionError : Error {
  using Error::Error;
};

// Grid alignment requirement violated (bridge step not a multiple of 1/m).
struct AlignmentError : Error {
  using Error::Error;
};

// Request finer than the representable resolution (window level too deep).
struct ResolutionError : Error {
  using Error::Error;
};

// A constructed object failed its own validation; names the offending level.
struct ConstructionError : Error {
  ConstructionError(const std::string& what, int bad_level)
      : Error(what), level(bad_level) {}
  int level;
};

// Rate fit attempted on too few usable points.
struct DegenerateFitError : Error {
  using Error::Error;
};

// CLI/config usage problem (unknown key, bad experiment name, unreadable file).
struct UsageError : Error {
  using Error::Error;
};

}  // namespace trotterlab
