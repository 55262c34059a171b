#pragma once

#include <stdexcept>
#include <string>

namespace runiv {

/// A descriptor omits an optional invariant that the requested computation
/// needs (e.g. the even Clifford class of a quaternionic Hermitian form).
struct MissingInvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested datum is not modeled for this input (e.g. local invariants
/// of an opaque E7 Tits algebra marker).
struct UnsupportedQueryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bounded search exhausted its budget without a hit.
struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace runiv
