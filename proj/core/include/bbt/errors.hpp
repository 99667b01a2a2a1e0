#pragma once

#include <stdexcept>
#include <string>

namespace bbt {

/// Base class for all workbench errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model construction.
struct CycleDetected : Error {
  using Error::Error;
};
struct BoundViolation : Error {
  using Error::Error;
};
struct UnknownElement : Error {
  using Error::Error;
};
struct ModelMismatch : Error {
  using Error::Error;
};
struct ModelTooLarge : Error {
  using Error::Error;
};

// Test setups.
struct NotOrderPreserving : Error {
  using Error::Error;
};
struct UnknownObservation : Error {
  using Error::Error;
};
struct ObservationSpaceTooLarge : Error {
  using Error::Error;
};

// EIO universe.
struct BoundTooLarge : Error {
  using Error::Error;
};
struct UnknownRequirementName : Error {
  using Error::Error;
};
struct BoundTooSmallForChain : Error {
  using Error::Error;
};

// Temporal universe.
struct UniverseTooLarge : Error {
  using Error::Error;
};

// Subprocess harness.
struct SpawnFailure : Error {
  using Error::Error;
};
struct ProtocolViolation : Error {
  using Error::Error;
};

// Workbench files.
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace bbt
