#include "xifeq/feq_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "xifeq/errors.hpp"
#include "xifeq/parallel.hpp"
#include "xifeq/theta_kernel.hpp"

namespace xifeq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Slack added to the fitted growth rate before violations are counted.
constexpr double kGrowthMargin = 0.05;

bool is_finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// z u^x / (1 + z u^x), written so a huge |z u^x| cannot overflow.
cplx rational_factor(cplx zu) {
  if (std::abs(zu) > 1.0) return 1.0 / (1.0 / zu + 1.0);
  return zu / (1.0 + zu);
}

double default_kernel(double u) { return hbar(u); }

// Composed tolerance: ten times the constituent quadrature error budget,
// floored at the identity's pinned tolerance.
double composed_tolerance(double floor_tol, double error_budget) {
  return std::max(floor_tol, 10.0 * error_budget);
}

cplx xi_of(cplx y) { return xi(y); }

quadrature_result line_integral_of_solution_kernel(const solver_params& p,
                                                   double abscissa,
                                                   const quadrature_spec& quad) {
  const cplx log_z = std::log(p.z);  // principal branch
  const cplx y = p.y;
  const double x = p.x;
  return integrate_vertical_line(
      [y, x, log_z](cplx s) -> cplx {
        const cplx kernel = kPi / sin_pi(s);
        const cplx zp = std::exp(-s * log_z);
        return xi(y + x * s) * kernel * zp;
      },
      abscissa, quad);
}

struct linear_fit {
  double intercept = 0.0;
  double slope = 0.0;
};

linear_fit fit_line(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  linear_fit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

}  // namespace

void validate(const solver_params& p) {
  if (!(p.x > 0.0)) throw std::invalid_argument("solver_params: x must be positive");
  if (!(p.a > -1.0) || !(p.a < 0.0))
    throw std::invalid_argument("solver_params: contour abscissa a must lie in (-1, 0)");
  if (!is_finite(p.z) || !is_finite(p.y))
    throw std::invalid_argument("solver_params: nonfinite z or y");
  if (p.z.imag() == 0.0 && p.z.real() <= 0.0)
    throw std::invalid_argument("solver_params: z must avoid the cut (-inf, 0]");
}

residual_report make_report(std::string identity_name, const solver_params& p,
                            double residual, double tolerance,
                            long evaluations) {
  residual_report r;
  r.identity_name = std::move(identity_name);
  r.params = p;
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.evaluations = evaluations;
  return r;
}

quadrature_result f_real_rep(const solver_params& p,
                             const quadrature_spec& quad,
                             const kernel_fn& kernel) {
  validate(p);
  const cplx z = p.z;
  const cplx y = p.y;
  const double x = p.x;
  return integrate_semi_infinite(
      [&kernel, z, y, x](double u) -> cplx {
        const double k = kernel(u);
        if (k == 0.0) return {0.0, 0.0};
        const double lu = std::log(u);
        const cplx zu = z * std::exp(x * lu);
        return rational_factor(zu) * std::exp(-y * lu) * k;
      },
      quad);
}

quadrature_result f_real_rep(const solver_params& p,
                             const quadrature_spec& quad) {
  return f_real_rep(p, quad, default_kernel);
}

quadrature_result f_real_rep_raw(const solver_params& p,
                                 const quadrature_spec& quad,
                                 const kernel_fn& kernel) {
  validate(p);
  const cplx z = p.z;
  const double x = p.x;
  const cplx exponent = -p.y / x + 1.0 / x - 1.0;
  return integrate_semi_infinite(
      [&kernel, z, x, exponent](double t) -> cplx {
        const double k = kernel(std::pow(t, 1.0 / x));
        if (k == 0.0) return {0.0, 0.0};
        const cplx zt = z * t;
        return rational_factor(zt) * std::exp(exponent * std::log(t)) *
               (k / x);
      },
      quad);
}

quadrature_result f_real_rep_raw(const solver_params& p,
                                 const quadrature_spec& quad) {
  return f_real_rep_raw(p, quad, default_kernel);
}

quadrature_result f_contour_rep(const solver_params& p,
                                const quadrature_spec& quad) {
  validate(p);
  quadrature_result res = line_integral_of_solution_kernel(p, p.a, quad);
  res.value = -res.value;  // the solution carries a leading minus sign
  return res;
}

quadrature_result contour_shift_estimate(const solver_params& p,
                                         const quadrature_spec& quad) {
  validate(p);
  const quadrature_result right =
      line_integral_of_solution_kernel(p, p.a + 1.0, quad);
  const quadrature_result left =
      line_integral_of_solution_kernel(p, p.a, quad);
  quadrature_result res;
  res.value = right.value - left.value;
  res.error_estimate = right.error_estimate + left.error_estimate;
  res.tail_estimate = right.tail_estimate + left.tail_estimate;
  res.evaluations = right.evaluations + left.evaluations;
  res.converged = right.converged && left.converged;
  return res;
}

residual_report feq_residual(const solver_params& p,
                             const quadrature_spec& quad) {
  validate(p);
  solver_params shifted = p;
  shifted.y = p.y + p.x;
  const quadrature_result f_shift = f_real_rep(shifted, quad);
  const quadrature_result f_base = f_real_rep(p, quad);
  const cplx g = xi_of(p.y);
  const double residual = std::abs(f_shift.value + p.z * f_base.value - p.z * g);
  const double budget =
      f_shift.error_estimate + std::abs(p.z) * f_base.error_estimate;
  return make_report("feq-real-rep", p, residual,
                     composed_tolerance(1e-7, budget),
                     f_shift.evaluations + f_base.evaluations);
}

residual_report contour_shift_residue_check(const solver_params& p,
                                            const quadrature_spec& quad) {
  const quadrature_result shift = contour_shift_estimate(p, quad);
  const double residual = std::abs(shift.value - xi_of(p.y));
  return make_report("contour-shift-residue", p, residual,
                     composed_tolerance(1e-7, shift.error_estimate),
                     shift.evaluations);
}

residual_report rh_residual(cplx z, const zeta_zero& zero, double x,
                            const quadrature_spec& quad) {
  const cplx rho{0.5, zero.gamma};
  solver_params base;
  base.z = z;
  base.y = rho;
  base.x = x;
  solver_params shifted = base;
  shifted.y = rho + x;

  const quadrature_result f_shift = f_real_rep(shifted, quad);
  const quadrature_result f_base = f_real_rep(base, quad);
  const double residual = std::abs(f_shift.value + z * f_base.value);

  // Propagate the zero-location error through a central-difference
  // sensitivity of the combination in the ordinate direction.
  const double fd_step = 1e-4;
  const cplx dy{0.0, fd_step};
  auto combo_at = [&](cplx y) {
    solver_params up = base;
    up.y = y + x;
    solver_params lo = base;
    lo.y = y;
    return f_real_rep(up, quad).value + z * f_real_rep(lo, quad).value;
  };
  const double sensitivity =
      std::abs(combo_at(rho + dy) - combo_at(rho - dy)) / (2.0 * fd_step);
  const double gamma_err =
      std::max(zero.bracket_hi - zero.gamma, zero.gamma - zero.bracket_lo);

  const double budget =
      f_shift.error_estimate + std::abs(z) * f_base.error_estimate;
  const double tol =
      std::max(composed_tolerance(1e-6, budget), 10.0 * sensitivity * gamma_err);
  return make_report("rh-zero-criterion", base, residual, tol,
                     f_shift.evaluations + f_base.evaluations);
}

double xi_circle_max(double radius, int samples_per_circle, cplx* argmax) {
  if (!(radius > 0.0))
    throw std::invalid_argument("xi_circle_max: radius must be positive");
  if (samples_per_circle < 8)
    throw std::invalid_argument("xi_circle_max: need at least 8 samples");

  const std::vector<double> mags =
      map_indexed(static_cast<std::size_t>(samples_per_circle),
                  [radius, samples_per_circle](std::size_t k) {
                    const double theta =
                        2.0 * kPi * static_cast<double>(k) / samples_per_circle;
                    const cplx s{radius * std::cos(theta),
                                 radius * std::sin(theta)};
                    return std::abs(xi(s));
                  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < mags.size(); ++k)
    if (mags[k] > mags[best]) best = k;
  if (argmax) {
    const double theta = 2.0 * kPi * static_cast<double>(best) / samples_per_circle;
    *argmax = cplx{radius * std::cos(theta), radius * std::sin(theta)};
  }
  return mags[best];
}

growth_envelope fit_growth_envelope(const std::vector<double>& radii,
                                    int samples_per_circle) {
  if (radii.size() < 2)
    throw std::invalid_argument("fit_growth_envelope: need at least 2 radii");
  if (!std::is_sorted(radii.begin(), radii.end()) || !(radii.front() > 0.0))
    throw std::invalid_argument("fit_growth_envelope: radii must be positive ascending");

  std::vector<double> log_max(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i)
    log_max[i] = std::log(xi_circle_max(radii[i], samples_per_circle));

  const linear_fit fit = fit_line(radii, log_max);

  growth_envelope env;
  env.A = std::exp(fit.intercept);
  env.r = fit.slope;
  env.delta = kGrowthMargin;
  env.radii_sampled = radii;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double envelope_log = fit.intercept + (fit.slope + env.delta) * radii[i];
    if (log_max[i] > envelope_log) {
      env.max_violation_radius = radii[i];
      break;
    }
  }
  return env;
}

double synthetic_kernel(double t) {
  // t^{-1/2} exp(-(t + 1/t)); exactly self-reciprocal.
  const double e = std::exp(-(t + 1.0 / t));
  if (e == 0.0) return 0.0;
  return std::pow(t, -0.5) * e;
}

std::vector<residual_report> synthetic_kernel_suite(
    const quadrature_spec& quad) {
  std::vector<residual_report> reports;

  auto g0 = [&quad](cplx s) {
    const cplx s_minus_1 = s - 1.0;
    return integrate_semi_infinite(
        [s_minus_1](double t) -> cplx {
          const double k = synthetic_kernel(t);
          if (k == 0.0) return {0.0, 0.0};
          return std::exp(s_minus_1 * std::log(t)) * k;
        },
        quad);
  };

  // Self-reciprocity of the kernel itself: an algebraic identity, so only
  // floating-point noise is allowed.
  {
    double worst = 0.0;
    double scale = 0.0;
    for (double t : {0.5, 2.0, 5.0}) {
      worst = std::max(worst,
                       std::fabs(synthetic_kernel(t) - synthetic_kernel(1.0 / t) / t));
      scale = std::max(scale, synthetic_kernel(t));
    }
    reports.push_back(make_report("synthetic-selfdual", solver_params{}, worst,
                                  1e-15 * (1.0 + scale), 3));
  }

  // Mellin symmetry g0(s) = g0(1-s), both sides by quadrature.
  {
    const quadrature_result lhs = g0(cplx{2.0, 0.0});
    const quadrature_result rhs = g0(cplx{-1.0, 0.0});
    const double residual = std::abs(lhs.value - rhs.value);
    reports.push_back(make_report(
        "synthetic-mellin-symmetry", solver_params{}, residual,
        composed_tolerance(1e-10, lhs.error_estimate + rhs.error_estimate),
        lhs.evaluations + rhs.evaluations));
  }

  // Functional equation end to end with the synthetic kernel.
  const std::pair<cplx, double> cells[] = {
      {cplx{1.0, 0.0}, 0.5},
      {cplx{1.0, 1.0}, 1.0},
  };
  for (const auto& [z, x] : cells) {
    solver_params p;
    p.z = z;
    p.y = (x == 0.5) ? cplx{1.0, 0.0} : cplx{0.7, 0.0};
    p.x = x;
    solver_params shifted = p;
    shifted.y = p.y + p.x;
    const quadrature_result f_shift = f_real_rep(shifted, quad, synthetic_kernel);
    const quadrature_result f_base = f_real_rep(p, quad, synthetic_kernel);
    const quadrature_result g_val = g0(p.y);
    const double residual =
        std::abs(f_shift.value + z * f_base.value - z * g_val.value);
    const double budget = f_shift.error_estimate +
                          std::abs(z) * (f_base.error_estimate + g_val.error_estimate);
    std::ostringstream name;
    name << "synthetic-feq@z=" << z.real();
    if (z.imag() != 0.0) name << "+" << z.imag() << "i";
    name << ",x=" << x;
    reports.push_back(make_report(
        name.str(), p, residual, composed_tolerance(1e-8, budget),
        f_shift.evaluations + f_base.evaluations + g_val.evaluations));
  }
  return reports;
}

}  // namespace xifeq
