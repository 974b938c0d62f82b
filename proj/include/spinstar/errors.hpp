#pragma once

#include <stdexcept>
#include <string>

namespace spinstar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix shape violations (non-square input, incompatible dimensions).
struct ShapeError : Error {
  using Error::Error;
};

struct NonHermitianError : Error {
  using Error::Error;
};

// A matrix claimed to be a density operator fails Hermiticity, trace or
// positivity checks.
struct InvalidStateError : Error {
  using Error::Error;
};

struct InvalidSectorError : Error {
  using Error::Error;
};

struct ScenarioMismatchError : Error {
  using Error::Error;
};

// Requested problem size exceeds the documented caps.
struct CapExceededError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// An evolved state dipped below the tolerated negative-eigenvalue floor.
struct PositivityViolationError : Error {
  using Error::Error;
};

struct NonPositiveTemperatureError : Error {
  using Error::Error;
};

}  // namespace spinstar
