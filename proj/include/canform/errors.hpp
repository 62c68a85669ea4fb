#ifndef CANFORM_ERRORS_HPP
#define CANFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace canform {

// Input violates a geometric precondition (degenerate, unbounded, empty...).
// The CLI maps these to exit status 2.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DimensionError : InputError {
  explicit DimensionError(const std::string& msg) : InputError(msg) {}
};

struct UnboundedError : InputError {
  explicit UnboundedError(const std::string& msg) : InputError(msg) {}
};

// Internal inconsistency; indicates a bug rather than bad input.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric sample landed on a degenerate configuration (branch point,
// vanishing leading coefficient); the caller should redraw the sample.
struct ResampleNeeded : std::runtime_error {
  explicit ResampleNeeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace canform

#endif
