#include "xifeq/suite.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "xifeq/feq_solver.hpp"
#include "xifeq/theta_kernel.hpp"

namespace xifeq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// First zero ordinate, pinned by high-precision bisection on Xi.
constexpr double kGamma1 = 14.13472514173469379;

std::string cplx_label(cplx v) {
  std::ostringstream os;
  os << v.real();
  if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
  return os.str();
}

suite_check check_at_most(int criterion, std::string name, double observed,
                          double bound) {
  suite_check c;
  c.criterion = criterion;
  c.name = std::move(name);
  c.observed = observed;
  c.bound = bound;
  c.passed = observed <= bound;
  return c;
}

suite_check check_at_least(int criterion, std::string name, double observed,
                           double bound) {
  suite_check c;
  c.criterion = criterion;
  c.name = std::move(name);
  c.observed = observed;
  c.bound = bound;
  c.require_at_least = true;
  c.passed = observed >= bound;
  return c;
}

}  // namespace

std::vector<suite_check> run_acceptance_suite(const quadrature_spec& spec) {
  std::vector<suite_check> checks;

  const std::vector<cplx> z_grid = {
      {0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}};
  const std::vector<cplx> y_grid = {{0.3, 0.0}, {2.0, 0.0}, {0.5, 3.0}};
  const std::vector<double> x_grid = {0.25, 0.5, 1.0};

  // 1. Mellin pair of the rational kernel: Int t^{s-1} t/(1+t) dt equals
  //    -pi/sin(pi s) on -1 < Re(s) < 0.
  {
    const struct {
      cplx s;
      cplx target;
    } cases[] = {
        {{-0.5, 0.0}, {kPi, 0.0}},
        {{-0.5, 1.0}, {kPi / std::cosh(kPi), 0.0}},
    };
    for (const auto& cs : cases) {
      const cplx s_minus_1 = cs.s - 1.0;
      const quadrature_result q = integrate_semi_infinite(
          [s_minus_1](double t) -> cplx {
            return std::exp(s_minus_1 * std::log(t)) * (t / (1.0 + t));
          },
          spec);
      checks.push_back(check_at_most(1, "mellin-pair@s=" + cplx_label(cs.s),
                                     std::abs(q.value - cs.target), 1e-9));
    }
  }

  // 2. Kernel self-reciprocity with both sides summed directly.
  for (double t : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    std::ostringstream name;
    name << "selfdual@t=" << t;
    checks.push_back(check_at_most(2, name.str(), selfdual_residual(t),
                                   1e-12 * (1.0 + hbar(t))));
  }

  // 3. Mellin transform of the kernel equals xi.
  for (cplx s : std::vector<cplx>{{0.0, 0.0},
                                  {1.0, 0.0},
                                  {2.0, 0.0},
                                  {0.5, 0.0},
                                  {0.5, 3.0},
                                  {-1.0, 0.0},
                                  {0.5, 14.134725}}) {
    checks.push_back(check_at_most(3, "mellin-hbar@s=" + cplx_label(s),
                                   std::abs(mellin_hbar(s, spec) - xi(s)),
                                   1e-8));
  }

  // 4/5/6. Representation equivalence, functional-equation residual, and
  // the residue-shift identity over the common grid.
  for (cplx z : z_grid) {
    for (cplx y : y_grid) {
      for (double x : x_grid) {
        solver_params p;
        p.z = z;
        p.y = y;
        p.x = x;
        const std::string cell = "z=" + cplx_label(z) + ",y=" + cplx_label(y) +
                                 ",x=" + cplx_label(cplx{x, 0.0});

        const quadrature_result fr = f_real_rep(p, spec);
        const quadrature_result fc = f_contour_rep(p, spec);
        checks.push_back(check_at_most(
            4, "rep-equivalence@" + cell,
            std::abs(fr.value - fc.value) / (1.0 + std::abs(fr.value)), 1e-7));

        checks.push_back(
            check_at_most(5, "feq@" + cell, feq_residual(p, spec).residual, 1e-7));

        checks.push_back(check_at_most(
            6, "residue@" + cell,
            contour_shift_residue_check(p, spec).residual, 1e-7));
      }
    }
  }
  // 6 (continued): the shift value recovers xi(y) independently of z.
  for (cplx y : y_grid) {
    for (double x : x_grid) {
      solver_params p1;
      p1.y = y;
      p1.x = x;
      p1.z = {1.0, 0.0};
      solver_params p3 = p1;
      p3.z = {3.0, 0.0};
      const cplx shift1 = contour_shift_estimate(p1, spec).value;
      const cplx shift3 = contour_shift_estimate(p3, spec).value;
      checks.push_back(check_at_most(
          6,
          "residue-z-invariance@y=" + cplx_label(y) + ",x=" +
              cplx_label(cplx{x, 0.0}),
          std::abs(shift1 - shift3), 1e-7));
    }
  }

  // 7. Zero criterion: locate the first five zeros, then the combination
  // must vanish there and discriminate away from them.
  {
    const zero_scan_result scan = find_zeta_zeros(0.0, 35.0, 0.05);
    checks.push_back(check_at_most(
        7, "zero-count(0,35)",
        std::fabs(static_cast<double>(scan.zeros.size()) - 5.0), 0.5));
    if (!scan.zeros.empty()) {
      checks.push_back(check_at_most(7, "gamma1-vs-bisection-oracle",
                                     std::fabs(scan.zeros[0].gamma - kGamma1),
                                     1e-5));
    }
    const std::vector<cplx> rh_z = {{1.0, 0.0}, {2.0, 1.0}};
    const std::vector<double> rh_x = {0.25, 0.5};
    for (std::size_t i = 0; i < scan.zeros.size() && i < 5; ++i) {
      for (cplx z : rh_z) {
        for (double x : rh_x) {
          std::ostringstream name;
          name << "rh@gamma=" << scan.zeros[i].gamma << ",z=" << cplx_label(z)
               << ",x=" << x;
          checks.push_back(check_at_most(
              7, name.str(), rh_residual(z, scan.zeros[i], x, spec).residual,
              1e-6));
        }
      }
    }
    // Off-zero control: at y = 1/2 + 15i the combination stays away from 0.
    solver_params control;
    control.z = {1.0, 0.0};
    control.y = {0.5, 15.0};
    control.x = 0.5;
    solver_params control_shift = control;
    control_shift.y = control.y + control.x;
    const cplx combo = f_real_rep(control_shift, spec).value +
                       control.z * f_real_rep(control, spec).value;
    checks.push_back(
        check_at_least(7, "off-zero-control@y=0.5+15i", std::abs(combo), 1e-4));
  }

  // 8. Synthetic-kernel suite, isolated from xi.
  for (const residual_report& r : synthetic_kernel_suite(spec))
    checks.push_back(check_at_most(8, r.identity_name, r.residual, 1e-8));

  // 9. Growth-envelope diagnostic: the fit succeeds and its extrapolation
  // to R = 30 underestimates the sampled maximum.
  {
    const growth_envelope env = fit_growth_envelope({5.0, 10.0, 15.0}, 64);
    checks.push_back(check_at_least(9, "growth-fit-rate-positive", env.r, 1e-6));
    const double sampled = xi_circle_max(30.0, 64);
    const double predicted =
        env.A * std::exp((env.r + env.delta) * 30.0);
    checks.push_back(check_at_least(9, "growth-violation-detected@R=30",
                                    sampled, predicted));
  }

  return checks;
}

}  // namespace xifeq
