#ifndef GBASIC_ERRORS_HPP
#define GBASIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbasic {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic between values of different fields (Q vs F_p, or distinct p).
struct field_mismatch : error {
  using error::error;
};

/// Shape errors: vector lengths, variable counts, matrix dimensions.
struct dimension_mismatch : error {
  using error::error;
};

/// Malformed textual or JSON input.
struct parse_error : error {
  using error::error;
};

/// Structurally invalid domain object (bad twists, degree mismatch, ...).
struct validation_error : error {
  using error::error;
};

/// F_p has too few elements for the requested deterministic choice.
struct field_too_small : error {
  using error::error;
};

/// A shrinking operation was invoked on inputs violating its hypothesis.
/// Records which point failed and the width actually measured there.
struct hypothesis_error : error {
  hypothesis_error(const std::string& msg, int point, int actual, int required)
      : error(msg), point_index(point), actual_width(actual),
        required_width(required) {}
  int point_index;
  int actual_width;
  int required_width;
};

}  // namespace gbasic

#endif
