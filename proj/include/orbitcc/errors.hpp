#pragma once

#include <stdexcept>
#include <string>

namespace orbitcc {

/// Bad arguments: dimension mismatches, unknown ids, out-of-range values.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation called in a state its precondition excludes (unsolved table,
/// unresolved operator, singular scenario where a regular one is required).
struct StateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario or instance data that contradicts a structural law the engine
/// relies on; such data is rejected rather than processed.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace orbitcc
