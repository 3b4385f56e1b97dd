#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xifeq/quadrature.hpp"
#include "xifeq/special_functions.hpp"

namespace xifeq {

// Parameter bundle for one evaluation of the solution f(z, y).
//
// z must stay off the cut (-inf, 0] so 1 + z t never vanishes on the
// integration path; x is the step of the difference equation; a is the
// contour abscissa, restricted to the pole-free strip (-1, 0).
struct solver_params {
  cplx z{1.0, 0.0};
  cplx y{2.0, 0.0};
  double x = 0.5;
  double a = -0.5;
};

// Throws std::invalid_argument when the invariants above are violated.
void validate(const solver_params& p);

// Empirical envelope |xi(s)| <= A exp((r + delta) |s|) fitted over circles
// |s| = R. Diagnostic only: xi grows faster than any exponential along the
// real axis, and max_violation_radius records where the fitted line first
// fails.
struct growth_envelope {
  double A = 0.0;
  double r = 0.0;
  double delta = 0.0;
  std::vector<double> radii_sampled;
  std::optional<double> max_violation_radius;
};

struct residual_report {
  std::string identity_name;
  solver_params params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // always residual <= tolerance
  long evaluations = 0;
};

residual_report make_report(std::string identity_name, const solver_params& p,
                            double residual, double tolerance,
                            long evaluations);

using kernel_fn = std::function<double(double)>;

// Real-axis representation of the solution, evaluated in the substituted
// form Int_0^inf (z u^x / (1 + z u^x)) u^{-y} H(u) du, which is the
// u = t^{1/x} change of variables of the raw form and avoids extreme
// exponents for small x. The default kernel is hbar.
quadrature_result f_real_rep(const solver_params& p,
                             const quadrature_spec& quad);
quadrature_result f_real_rep(const solver_params& p,
                             const quadrature_spec& quad,
                             const kernel_fn& kernel);

// Unsubstituted form (1/x) Int_0^inf (z t / (z t + 1)) t^{-y/x + 1/x - 1}
// H(t^{1/x}) dt, kept as a cross-check of the change of variables.
quadrature_result f_real_rep_raw(const solver_params& p,
                                 const quadrature_spec& quad);
quadrature_result f_real_rep_raw(const solver_params& p,
                                 const quadrature_spec& quad,
                                 const kernel_fn& kernel);

// Contour representation
//   f(z, y) = -(1/(2 pi i)) Int_{(a)} xi(y + x s) (pi / sin(pi s)) z^{-s} ds
// on the vertical line Re(s) = a in (-1, 0). z^{-s} uses the principal
// branch of log z.
quadrature_result f_contour_rep(const solver_params& p,
                                const quadrature_spec& quad);

// (1/(2 pi i)) ( I_{a+1} - I_a ) where I_c is the line integral of
// xi(y + x s) (pi / sin(pi s)) z^{-s} along Re(s) = c. The lines straddle
// only the s = 0 pole, whose residue is xi(y).
quadrature_result contour_shift_estimate(const solver_params& p,
                                         const quadrature_spec& quad);

// Residual of the functional equation f(z, y+x) + z f(z, y) = z xi(y), with
// both f evaluated through the real-axis representation and xi(y) from the
// independent special-function path.
residual_report feq_residual(const solver_params& p,
                             const quadrature_spec& quad);

// Residual |contour_shift_estimate - xi(y)|; numerically replays the
// residue-at-zero derivation of the functional equation from the contour
// representation.
residual_report contour_shift_residue_check(const solver_params& p,
                                            const quadrature_spec& quad);

// Residual |f(z, rho + x) + z f(z, rho)| at rho = 1/2 + i gamma for a
// located zero. The tolerance folds in the zero-location error propagated
// through a finite-difference sensitivity estimate of f in y.
residual_report rh_residual(cplx z, const zeta_zero& zero, double x,
                            const quadrature_spec& quad);

// Max of |xi(s)| over samples_per_circle points of the circle |s| = radius.
// The attaining sample is written through argmax when non-null.
double xi_circle_max(double radius, int samples_per_circle,
                     cplx* argmax = nullptr);

// Least-squares fit of log max_{|s|=R} |xi(s)| against log A + r R over the
// given radii. max_violation_radius is the smallest given radius whose
// sampled maximum exceeds the slack envelope A exp((r + delta) R).
growth_envelope fit_growth_envelope(const std::vector<double>& radii,
                                    int samples_per_circle);

// End-to-end checks of the solution machinery against the synthetic
// self-reciprocal kernel H0(t) = t^{-1/2} exp(-(t + 1/t)), whose Mellin
// transform g0 is computed numerically. Isolates the solver from any
// xi-specific machinery.
double synthetic_kernel(double t);
std::vector<residual_report> synthetic_kernel_suite(
    const quadrature_spec& quad);

}  // namespace xifeq
