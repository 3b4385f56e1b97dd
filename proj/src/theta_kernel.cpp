#include "xifeq/theta_kernel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xifeq/errors.hpp"

namespace xifeq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPiSq = 2.0 * kPi * kPi;

// Dominating-series term 4 pi^2 t^4 n^4 exp(-pi n^2 t^2); bounds |term_n|
// once n^2 t^2 >= 3/(4 pi), which the ratio gate below guarantees.
double dominating_term(double t, int n) {
  const double n2 = static_cast<double>(n) * n;
  const double e = std::exp(-kPi * n2 * t * t);
  if (e == 0.0) return 0.0;
  return 4.0 * kPi * kPi * (t * t) * (t * t) * n2 * n2 * e;
}

// Ratio of consecutive dominating terms, ((n+1)/n)^4 exp(-pi (2n+1) t^2).
double term_ratio(double t, int n) {
  const double r = (static_cast<double>(n) + 1.0) / n;
  return r * r * r * r * std::exp(-kPi * (2.0 * n + 1.0) * t * t);
}

// Direct summation; caller guarantees t > 0. Terms use fresh exponentials
// of -pi n^2 t^2, no recurrences.
double hbar_direct(double t, const kernel_series_params& params) {
  // exp(-pi t^2) underflows to zero well before t = 16; every term, and the
  // true value, rounds to zero there.
  if (t >= 16.0) return 0.0;
  if (params.n_max < 1 || !(params.abs_tol > 0.0))
    throw std::invalid_argument("hbar: invalid series params");

  double sum = 0.0;
  for (int n = 1; n <= params.n_max; ++n) {
    const double n2 = static_cast<double>(n) * n;
    const double e = std::exp(-kPi * n2 * t * t);
    if (e != 0.0) sum += 2.0 * t * t * (kTwoPiSq * n2 * n2 * t * t - 3.0 * kPi * n2) * e;
    if (hbar_tail_bound(t, n) < params.abs_tol) return sum;
  }
  std::ostringstream msg;
  msg << "hbar: tail bound did not reach abs_tol = " << params.abs_tol
      << " within n_max = " << params.n_max << " terms at t = " << t;
  throw truncation_error(msg.str());
}

}  // namespace

double hbar_tail_bound(double t, int n_terms) {
  if (!(t > 0.0)) throw std::invalid_argument("hbar_tail_bound: t must be positive");
  if (n_terms < 1) throw std::invalid_argument("hbar_tail_bound: n_terms must be >= 1");

  // Walk the comparison index up until the geometric ratio clears 1/2;
  // everything skipped over is added explicitly, keeping the bound valid
  // for the tail past n_terms.
  double bound = 0.0;
  int m = n_terms + 1;
  while (term_ratio(t, m) >= 0.5) {
    bound += dominating_term(t, m);
    ++m;
    if (m > 1'000'000)
      throw std::invalid_argument("hbar_tail_bound: t too small to bound");
  }
  return bound + dominating_term(t, m) / (1.0 - term_ratio(t, m));
}

double hbar(double t, const kernel_series_params& params) {
  if (!(t > 0.0)) throw std::invalid_argument("hbar: t must be positive");
  // Reflection for t < 1 keeps the summation at argument 1/t > 1, where the
  // exponentials collapse fastest.
  if (t < 1.0) return hbar_direct(1.0 / t, params) / t;
  return hbar_direct(t, params);
}

double selfdual_residual(double t, const kernel_series_params& params) {
  if (!(t > 0.0)) throw std::invalid_argument("selfdual_residual: t must be positive");
  // Both sides summed directly; no reflection shortcut anywhere.
  return std::fabs(hbar_direct(t, params) - hbar_direct(1.0 / t, params) / t);
}

cplx mellin_hbar(cplx s, const quadrature_spec& quad) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw std::invalid_argument("mellin_hbar: nonfinite s");
  const cplx s_minus_1 = s - 1.0;
  return integrate_semi_infinite(
             [s_minus_1](double t) -> cplx {
               const double k = hbar(t);
               if (k == 0.0) return {0.0, 0.0};
               return std::exp(s_minus_1 * std::log(t)) * k;
             },
             quad)
      .value;
}

}  // namespace xifeq
