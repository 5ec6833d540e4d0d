#pragma once

#include <stdexcept>
#include <string>

namespace hypoly {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad or inconsistent input data (files, catalog names, malformed words).
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A quantity left the field Q(sqrt2) where an exact representative is required.
struct NotRepresentableError : Error {
  explicit NotRepresentableError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
};

/// A dihedral angle whose cosine is not in the recognized table.
struct UnrecognizedAngleError : Error {
  explicit UnrecognizedAngleError(const std::string& gamma)
      : Error("unrecognized dihedral angle, cos = " + gamma), cos_value(gamma) {}
  std::string cos_value;
};

/// The face lattice of a polyhedron is inconsistent (bad input data).
struct LatticeError : Error {
  explicit LatticeError(const std::string& what) : Error(what) {}
};

/// A pairing map sent a face to something that is not a face.
struct PairingError : Error {
  explicit PairingError(const std::string& what) : Error(what) {}
};

/// A solid-angle cone whose carrier graph has a component of size >= 3.
struct UnsupportedConeError : Error {
  explicit UnsupportedConeError(const std::string& what) : Error(what) {}
};

}  // namespace hypoly
