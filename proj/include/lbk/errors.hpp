#pragma once

#include <stdexcept>
#include <string>

namespace lbk {

/// Input that does not describe a valid object: rank mismatches, bad
/// literals, out-of-range indices, unparsable model files.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural guarantee of the theory was violated by the model at hand
/// (e.g. no chart holds both a point and a germ when one must exist).
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An axiom fails at the queried configuration (e.g. two points with no
/// common chart).
class AxiomFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lbk
