#pragma once

#include <stdexcept>

namespace xifeq {

// A pole of an analytic function was hit exactly (gamma at nonpositive
// integers, zeta at 1).
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// The result magnitude exceeds the representable double range.
struct overflow_error : std::range_error {
  using std::range_error::range_error;
};

// A series hit its hard truncation cap before the tail bound reached the
// requested target.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xifeq
