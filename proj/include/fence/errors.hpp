#pragma once

#include <stdexcept>

namespace fence {

/// An enumeration would exceed its configured node or ideal bound.
struct BoundExceeded : std::length_error {
  using std::length_error::length_error;
};

/// A closed form left residual half-integer exponents or non-integral terms.
struct FormulaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tiling is syntactically valid but matches no orbit.
struct InvalidTiling : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant, e.g. an encoded orbit failing the tiling axioms.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fence
