#pragma once

#include <stdexcept>
#include <string>

namespace alexdimer {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input (bad JSON, missing fields, wrong dart counts).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that is not a valid oriented link diagram.
struct ValidationError : Error {
  using Error::Error;
};

// The two regions adjacent to the distinguished segment coincide, so the
// truncation cannot delete two distinct white vertices.
struct DegenerateError : Error {
  using Error::Error;
};

// Enumeration exceeded the configured matching or crossing cap.
struct ResourceCapError : Error {
  using Error::Error;
};

// A crossing on the splitting circle has exactly two adjacent regions on each
// side, so it belongs to neither side unambiguously.
struct AmbiguityError : Error {
  using Error::Error;
};

// A splitting operation was asked for a circle whose length is out of range.
struct LengthError : Error {
  using Error::Error;
};
struct LengthZeroError : LengthError {
  using LengthError::LengthError;
};

// A verification entry point was called on input outside its hypotheses
// (e.g. certification of a diagram with a circle of length >= 3).
struct HypothesisError : Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace alexdimer
