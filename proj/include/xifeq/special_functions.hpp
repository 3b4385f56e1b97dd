#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace xifeq {

using cplx = std::complex<double>;

// Gamma function for complex argument, Lanczos rational approximation with
// reflection for Re(s) < 1/2. Good to at least 12 significant digits for
// |s| <= 50. Throws pole_error at nonpositive integers and overflow_error
// when the result leaves the double range.
cplx complex_gamma(cplx s);

// Riemann zeta for complex s != 1. Euler-Maclaurin summation with a
// remainder-bounded correction tail for Re(s) >= -1; arguments left of that
// strip are routed through the xi symmetry. Throws pole_error at s = 1.
cplx riemann_zeta(cplx s);

// Completed zeta: xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s),
// evaluated as (s-1) pi^{-s/2} Gamma(s/2+1) zeta(s) so the s = 0 pole of
// Gamma cancels analytically. Entire; satisfies xi(s) = xi(1-s).
cplx xi(cplx s);

// Real-valued restriction Xi(t) = xi(1/2 + i t). The imaginary part of the
// underlying complex evaluation is checked against a 1e-10 relative bound
// and discarded.
double xi_critical_line(double t);

// sin(pi z) with argument reduction on the real part, exact at integers.
cplx sin_pi(cplx z);

struct zeta_zero {
  double gamma = 0.0;        // ordinate of the zero 1/2 + i*gamma
  double bracket_lo = 0.0;   // sign-changing bracket around gamma
  double bracket_hi = 0.0;
  double xi_residual = 0.0;  // |Xi(gamma)| after bisection
};

struct zero_scan_options {
  double ordinate_tol = 1e-10;   // bisection stops below this bracket width
  double residual_tol = 1e-9;    // refined zero must satisfy |Xi| below this
  double pair_dip_factor = 0.1;  // same-sign cell is suspicious when its
                                 // midpoint magnitude dips this far below
                                 // both endpoints
};

struct bracketed_root {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
};

struct root_scan_result {
  std::vector<bracketed_root> roots;                    // ascending
  std::vector<std::pair<double, double>> suspected;     // same-sign intervals
                                                        // that may hide a pair
};

// Sign-change scan with bisection refinement. The grid is evaluated at half
// the requested step so near-misses of the caller's step still register;
// same-sign cells whose midpoint magnitude collapses are reported as
// suspected pairs instead of being dropped.
root_scan_result scan_sign_changes(const std::function<double(double)>& f,
                                   double t_lo, double t_hi, double step,
                                   const zero_scan_options& opt = {});

struct zero_scan_result {
  std::vector<zeta_zero> zeros;                      // ascending ordinates
  std::vector<std::pair<double, double>> suspected;  // possible close pairs
};

// Locate zeros of Xi on [t_lo, t_hi] by sign-change scan plus bisection.
zero_scan_result find_zeta_zeros(double t_lo, double t_hi, double step,
                                 const zero_scan_options& opt = {});

}  // namespace xifeq
