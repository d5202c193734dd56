#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toric {

/// Bad argument values (zero vectors, zero parameters, empty inputs).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structurally malformed fan or complex, e.g. an out-of-range ray index.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation not defined for this fan (e.g. rays do not span the lattice).
struct UnsupportedFan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A quantity that is undefined for the input (e.g. r_min of a fan without non-faces).
struct UndefinedValue : std::domain_error {
  using std::domain_error::domain_error;
};

/// Length or degree mismatch between related inputs.
struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An enumeration cap was exceeded.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact computation produced a result its own mathematics rules out.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace toric

#endif  // TORIC_ERRORS_HPP
