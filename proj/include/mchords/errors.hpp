#pragma once

#include <stdexcept>
#include <string>

namespace mchords {

// Base of every error raised by the library. The CLI maps all of them to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent unit-disk / body description.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Point off a boundary, empty intersection and similar.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for the given representation (e.g. bisectors of
// polygonal norms).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mchords
