#include "xifeq/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "xifeq/errors.hpp"
#include "xifeq/parallel.hpp"

namespace xifeq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Lanczos coefficients for g = 607/128 (Godfrey's 15-term set), accurate to
// roughly 1e-15 relative over the right half-plane.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kSqrtTwoPi = 2.506628274631000502415765284811045253;

// Gamma on Re(s) >= 1/2 via the Lanczos sum.
cplx gamma_right_halfplane(cplx s) {
  cplx w = s - 1.0;
  cplx a = kLanczosC[0];
  for (int k = 1; k < 15; ++k) a += kLanczosC[k] / (w + static_cast<double>(k));
  cplx t = w + kLanczosG + 0.5;
  return kSqrtTwoPi * std::exp((w + 0.5) * std::log(t) - t) * a;
}

// B_{2k}/(2k)! for k = 0..30; Euler-Maclaurin correction weights.
constexpr double kBernoulliOverFactorial[31] = {
    1.000000000000000000000,     0.08333333333333333333333,
    -0.001388888888888888888889, 0.00003306878306878306878307,
    -8.267195767195767195767e-7, 2.087675698786809897921e-8,
    -5.284190138687493184848e-10, 1.338253653068467883283e-11,
    -3.389680296322582866830e-13, 8.586062056277844564136e-15,
    -2.174868698558061873042e-16, 5.509002828360229515203e-18,
    -1.395446468581252334071e-19, 3.534707039629467471693e-21,
    -8.953517427037546850403e-23, 2.267952452337683060311e-24,
    -5.744790668872202445264e-26, 1.455172475614864901866e-27,
    -3.685994940665310178182e-29, 9.336734257095044672033e-31,
    -2.365022415700629934560e-32, 5.990671762482134304660e-34,
    -1.517454884468290261711e-35, 3.843758125454188232229e-37,
    -9.736353072646691035268e-39, 2.466247044200680957106e-40,
    -6.247076741820743693149e-42, 1.582403024464491429751e-43,
    -4.008273685948935968530e-45, 1.015307585556955631163e-46,
    -2.571804158241871749925e-48,
};

// Euler-Maclaurin summation, valid on Re(s) >= -1 for moderate |Im(s)|;
// the correction tail stops once Cohen's remainder bound clears the target.
cplx zeta_euler_maclaurin(cplx s) {
  int n_cut = std::max(10, static_cast<int>(std::ceil(std::abs(s.imag()))) + 2);
  for (int attempt = 0;; ++attempt) {
    const double big_n = static_cast<double>(n_cut);
    cplx acc{0.0, 0.0};
    for (int n = 1; n < n_cut; ++n)
      acc += std::exp(-s * std::log(static_cast<double>(n)));
    const cplx n_pow = std::exp(-s * std::log(big_n));  // N^{-s}
    acc += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

    cplx poch = s;                  // s (s+1) ... (s+2k-2)
    cplx p = n_pow / big_n;         // N^{-s-2k+1}
    const double inv_n2 = 1.0 / (big_n * big_n);
    double bound = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 31; ++k) {
      const cplx term = kBernoulliOverFactorial[k] * poch * p;
      acc += term;
      // remainder bound in terms of the first omitted term
      const cplx poch_next = poch * (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
      const cplx next = kBernoulliOverFactorial[std::min(k + 1, 30)] *
                        poch_next * (p * inv_n2);
      const double sigma = s.real();
      bound = std::abs(next) * std::abs(s + (2.0 * k + 1.0)) /
              (sigma + 2.0 * k + 1.0);
      if (bound <= 1e-18 + 1e-16 * std::abs(acc)) return acc;
      poch = poch_next;
      p *= inv_n2;
    }
    if (attempt >= 2) return acc;  // best effort; not hit in the supported range
    n_cut *= 2;
  }
}

cplx xi_direct(cplx s);

// Functional-equation route for Re(s) < -1, expressed through the xi
// symmetry: zeta(s) = -xi(1-s) pi^{s/2} sin(pi s/2) Gamma(-s/2) / (pi (s-1)).
// The sin factor makes the trivial zeros exact.
cplx zeta_reflected(cplx s) {
  const cplx xi_val = xi_direct(1.0 - s);  // Re(1-s) > 2, direct path
  const cplx sin_term = sin_pi(s / 2.0);
  if (sin_term == cplx{0.0, 0.0}) return {0.0, 0.0};
  return -xi_val * std::exp((s / 2.0) * std::log(kPi)) * sin_term *
         complex_gamma(-s / 2.0) / (kPi * (s - 1.0));
}

// xi through its defining product; requires zeta's direct strip,
// Re(s) >= -1, and s away from 1.
cplx xi_direct(cplx s) {
  return (s - 1.0) * std::exp(-(s / 2.0) * std::log(kPi)) *
         complex_gamma(s / 2.0 + 1.0) * riemann_zeta(s);
}

}  // namespace

cplx sin_pi(cplx z) {
  // Pull the real part into [-1/2, 1/2]; sin(pi(x+n)) = (-1)^n sin(pi x).
  double n = std::round(z.real());
  cplx r{z.real() - n, z.imag()};
  cplx v = std::sin(kPi * r);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -v : v;
}

cplx complex_gamma(cplx s) {
  if (!is_finite(s)) throw std::invalid_argument("complex_gamma: nonfinite argument");
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) {
    std::ostringstream msg;
    msg << "complex_gamma: pole at s = " << s.real();
    throw pole_error(msg.str());
  }
  cplx result;
  if (s.real() >= 0.5) {
    result = gamma_right_halfplane(s);
  } else {
    // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1 - s))
    result = kPi / (sin_pi(s) * gamma_right_halfplane(1.0 - s));
  }
  if (!is_finite(result))
    throw overflow_error("complex_gamma: result outside double range");
  return result;
}

cplx riemann_zeta(cplx s) {
  if (!is_finite(s)) throw std::invalid_argument("riemann_zeta: nonfinite argument");
  if (s == cplx{1.0, 0.0}) throw pole_error("riemann_zeta: pole at s = 1");
  cplx result =
      (s.real() >= -1.0) ? zeta_euler_maclaurin(s) : zeta_reflected(s);
  if (!is_finite(result))
    throw overflow_error("riemann_zeta: result outside double range");
  return result;
}

cplx xi(cplx s) {
  if (!is_finite(s)) throw std::invalid_argument("xi: nonfinite argument");
  // Inside a small disc around s = 1 evaluate through the symmetry, which
  // lands next to s = 0 where the product form is regular. Left of the
  // Euler-Maclaurin strip reflect as well.
  if (std::abs(s - cplx{1.0, 0.0}) < 1e-3 || s.real() < -1.0) s = 1.0 - s;
  cplx result = xi_direct(s);
  if (!is_finite(result)) throw overflow_error("xi: result outside double range");
  return result;
}

double xi_critical_line(double t) {
  const cplx v = xi(cplx{0.5, t});
  if (std::fabs(v.imag()) > 1e-10 * (1.0 + std::abs(v)))
    throw std::runtime_error("xi_critical_line: nonreal value off tolerance");
  return v.real();
}

root_scan_result scan_sign_changes(const std::function<double(double)>& f,
                                   double t_lo, double t_hi, double step,
                                   const zero_scan_options& opt) {
  if (!(t_lo >= 0.0) || !(t_hi > t_lo) || !(step > 0.0))
    throw std::invalid_argument("scan_sign_changes: need 0 <= t_lo < t_hi, step > 0");

  // Half the requested step; cells the caller's grid would straddle still
  // show up as sign changes here.
  const double h = step / 2.0;
  const std::size_t cells = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / h));
  std::vector<double> grid(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i)
    grid[i] = std::min(t_lo + static_cast<double>(i) * h, t_hi);

  std::vector<double> vals =
      map_indexed(grid.size(), [&](std::size_t i) { return f(grid[i]); });
  // A grid node landing exactly on a root still has to register as one sign
  // change; nudge it to the smallest positive value.
  for (double& v : vals)
    if (v == 0.0) v = std::numeric_limits<double>::min();

  root_scan_result out;
  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grid[i] == grid[i + 1]) continue;
    if (vals[i] * vals[i + 1] < 0.0) brackets.emplace_back(grid[i], grid[i + 1]);
  }

  // Same-sign triples with a collapsing midpoint magnitude hint at a pair of
  // roots the grid stepped over; report them rather than dropping them.
  for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
    if (vals[i - 1] * vals[i] <= 0.0 || vals[i] * vals[i + 1] <= 0.0) continue;
    const double neighbor =
        std::min(std::fabs(vals[i - 1]), std::fabs(vals[i + 1]));
    if (std::fabs(vals[i]) < opt.pair_dip_factor * neighbor)
      out.suspected.emplace_back(grid[i - 1], grid[i + 1]);
  }

  out.roots = map_indexed(brackets.size(), [&](std::size_t i) {
    double lo = brackets[i].first, hi = brackets[i].second;
    double flo = f(lo);
    for (int iter = 0; iter < 200 && (hi - lo) > opt.ordinate_tol; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if (flo * fm < 0.0)
        hi = mid;
      else
        lo = mid, flo = fm;
    }
    bracketed_root r;
    r.root = 0.5 * (lo + hi);
    r.lo = brackets[i].first;
    r.hi = brackets[i].second;
    r.residual = std::fabs(f(r.root));
    return r;
  });
  return out;
}

zero_scan_result find_zeta_zeros(double t_lo, double t_hi, double step,
                                 const zero_scan_options& opt) {
  const root_scan_result scan = scan_sign_changes(
      [](double t) { return xi_critical_line(t); }, t_lo, t_hi, step, opt);
  zero_scan_result out;
  out.suspected = scan.suspected;
  out.zeros.reserve(scan.roots.size());
  for (const bracketed_root& r : scan.roots) {
    if (r.residual > opt.residual_tol) {
      std::ostringstream msg;
      msg << "find_zeta_zeros: refined zero near t = " << r.root
          << " has |Xi| = " << r.residual << " above the residual tolerance";
      throw std::runtime_error(msg.str());
    }
    out.zeros.push_back(zeta_zero{r.root, r.lo, r.hi, r.residual});
  }
  return out;
}

}  // namespace xifeq
