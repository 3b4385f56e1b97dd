#pragma once

#include "xifeq/quadrature.hpp"
#include "xifeq/special_functions.hpp"

namespace xifeq {

struct kernel_series_params {
  double abs_tol = 1e-16;  // series tail bound target
  int n_max = 64;          // hard truncation cap
};

// Self-reciprocal theta kernel
//   hbar(t) = 2 t^2 sum_{n>=1} (2 pi^2 n^4 t^2 - 3 pi n^2) exp(-pi n^2 t^2),
// summed until the analytic tail bound drops below params.abs_tol. For
// t < 1 the value is obtained through the reflection
// hbar(t) = t^{-1} hbar(1/t), which keeps the summation in its
// fast-converging regime. Throws std::invalid_argument for t <= 0 and
// truncation_error when n_max terms cannot meet abs_tol.
double hbar(double t, const kernel_series_params& params = {});

// Rigorous upper bound on the absolute tail sum_{n > n_terms} of the series
// above, from a geometric-ratio comparison on the dominating series
// 4 pi^2 t^4 n^4 exp(-pi n^2 t^2). The comparison index is advanced until
// the term ratio falls below 1/2; terms skipped over are added explicitly.
double hbar_tail_bound(double t, int n_terms);

// |hbar(t) - t^{-1} hbar(1/t)| with BOTH sides summed directly (no
// reflection shortcut), so this genuinely tests the kernel's
// self-reciprocity.
double selfdual_residual(double t, const kernel_series_params& params = {});

// Mellin transform Int_0^inf t^{s-1} hbar(t) dt, by semi-infinite
// quadrature. Converges for every finite s thanks to the kernel's
// double-sided super-exponential decay; equals xi(s).
cplx mellin_hbar(cplx s, const quadrature_spec& quad);

}  // namespace xifeq
