#pragma once

#include <functional>

#include "xifeq/special_functions.hpp"

namespace xifeq {

struct quadrature_spec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_levels = 12;            // refinement depth cap
  double line_halfheight = 40.0;  // contour truncation T (vertical-line only)
};

struct quadrature_result {
  cplx value{0.0, 0.0};
  double error_estimate = 0.0;  // inter-level difference plus rounding floor
                                // (plus the fitted tail bound on the line
                                // engine)
  long evaluations = 0;
  bool converged = false;
  double tail_estimate = 0.0;  // vertical-line engine: fitted bound on the
                               // |tau| > T remainder
};

// Integral of f over (0, inf) via the double-exponential substitution
// t = exp((pi/2) sinh u) and trapezoidal sums with level doubling. The error
// estimate is the last inter-level difference; nodes where the transformed
// abscissa leaves the double range, or where f is not finite, contribute
// zero. Within one call the node evaluations may run in parallel; the
// reduction order is fixed, so results do not depend on thread count.
quadrature_result integrate_semi_infinite(const std::function<cplx(double)>& f,
                                          const quadrature_spec& spec);

// (1/(2 pi)) Integral of f(a + i tau) dtau over [-T, T], T =
// spec.line_halfheight. This equals (1/(2 pi i)) Int f(s) ds along the
// vertical line Re(s) = a truncated at height T. Trapezoidal refinement as
// above; the remainder beyond T is bounded by an exponential fit
// C exp(-kappa |tau|) to the outermost samples and added to error_estimate.
quadrature_result integrate_vertical_line(const std::function<cplx(cplx)>& f,
                                          double abscissa,
                                          const quadrature_spec& spec);

}  // namespace xifeq
