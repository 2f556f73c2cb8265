#pragma once

#include <stdexcept>
#include <string>

namespace gforge {

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input does not match a documented schema or grammar.
struct SchemaError : Error {
  using Error::Error;
};

// Paths, words or groupoid elements that cannot be composed.
struct CompositionError : Error {
  using Error::Error;
};

// Argument outside the domain of a (partial) map.
struct DomainError : Error {
  using Error::Error;
};

// A hypothesis of an operation is not satisfied by the input.
struct PreconditionError : Error {
  using Error::Error;
};

// Brute-force search would exceed its configured cap.
struct SizeError : Error {
  using Error::Error;
};

// A group element is not of the shape an algorithm needs.
struct FormError : Error {
  using Error::Error;
};

}  // namespace gforge
