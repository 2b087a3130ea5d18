#pragma once

#include <stdexcept>
#include <string>

namespace matsec {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad caller input: out-of-range ids, overlapping sets, loops where a
// loopless matroid is required, malformed configs.
struct InputError : Error {
  using Error::Error;
};

// An exhaustive routine was asked to run above its enumeration bound.
struct BoundError : Error {
  using Error::Error;
};

// Matroid/instance file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// An online algorithm tried to accept a set that is not independent.
// This is an algorithm bug, not a model event; the trial aborts.
struct ContractViolation : Error {
  using Error::Error;
};

// Requested computation is not available in the requested mode
// (e.g. continuous randomness under exact enumeration).
struct UnsupportedError : Error {
  using Error::Error;
};

// Exact enumeration requires a rational probability but got an
// irrational one; rerun in high-precision mode.
struct NeedsRealMode : UnsupportedError {
  using UnsupportedError::UnsupportedError;
};

// A post-hoc self-check failed; indicates a bug in this library.
struct InternalCheckError : Error {
  using Error::Error;
};

}  // namespace matsec
