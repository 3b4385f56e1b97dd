#include "xifeq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "xifeq/parallel.hpp"

namespace xifeq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kHalfPi = 1.570796326794896619231321691639751442;

// exp((pi/2) sinh u) stays inside the double range for |u| <= 6.8.
constexpr double kUMax = 6.8;

void validate(const quadrature_spec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw std::invalid_argument("quadrature_spec: tolerances must be positive");
  if (spec.max_levels < 3)
    throw std::invalid_argument("quadrature_spec: max_levels must be >= 3");
  if (!(spec.line_halfheight > 0.0))
    throw std::invalid_argument("quadrature_spec: line_halfheight must be positive");
}

bool is_finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Trapezoid-doubling driver shared by both engines. nodes(level, h) lists
// the abscissae new to that level in ascending order; term(x) is the
// weighted integrand there; on_level runs serially after each level with
// that level's nodes and values. Node evaluations may be scheduled in
// parallel, but the accumulation order is fixed, so the result does not
// depend on thread count.
template <class Nodes, class Term, class OnLevel>
quadrature_result refine(const quadrature_spec& spec, double h0, Nodes nodes,
                         Term term, OnLevel on_level) {
  quadrature_result res;
  cplx integral{0.0, 0.0};
  double abs_sum = 0.0;

  for (int level = 0; level <= spec.max_levels; ++level) {
    const double h = h0 / static_cast<double>(1 << level);
    const std::vector<double> xs = nodes(level, h);
    const std::vector<cplx> vals =
        map_indexed(xs.size(), [&](std::size_t i) { return term(xs[i]); });
    res.evaluations += static_cast<long>(xs.size());
    on_level(xs, vals);

    cplx sum{0.0, 0.0};
    double sum_abs = 0.0;
    for (const cplx& v : vals) {
      sum += v;
      sum_abs += std::abs(v);
    }

    if (level == 0) {
      integral = h * sum;
      abs_sum = h * sum_abs;
      res.value = integral;
      continue;
    }
    const cplx refined = 0.5 * integral + h * sum;
    const double err = std::abs(refined - integral);
    integral = refined;
    abs_sum = 0.5 * abs_sum + h * sum_abs;

    res.value = integral;
    res.error_estimate =
        std::max(err, std::numeric_limits<double>::epsilon() * abs_sum);
    const double tol =
        std::max(spec.abs_tol, spec.rel_tol * std::abs(integral));
    if (level >= 2 && res.error_estimate <= tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

struct decay_fit {
  bool ok = false;
  bool has_mass = false;  // any nonzero sample on this side at all
  double log_c = 0.0;     // intercept of log|F| ~ log_c - kappa * tau
  double kappa = 0.0;
};

// Least-squares exponential-decay fit over the outermost nonzero samples of
// one side of the line. The window widens until it holds enough points.
decay_fit fit_decay(const std::vector<std::pair<double, double>>& samples) {
  decay_fit fit;
  double tau_star = 0.0;
  for (const auto& [tau, mag] : samples)
    if (mag > 0.0) {
      fit.has_mass = true;
      tau_star = std::max(tau_star, tau);
    }
  if (!fit.has_mass) return fit;

  for (double frac : {0.10, 0.25, 0.50}) {
    const double lo = (1.0 - frac) * tau_star;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = 0;
    for (const auto& [tau, mag] : samples) {
      if (mag <= 0.0 || tau < lo) continue;
      const double ly = std::log(mag);
      sx += tau;
      sy += ly;
      sxx += tau * tau;
      sxy += tau * ly;
      n += 1;
    }
    if (n < 8) continue;
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) continue;
    const double slope = (n * sxy - sx * sy) / denom;
    fit.ok = true;
    fit.kappa = -slope;
    fit.log_c = (sy - slope * sx) / n;
    return fit;
  }
  return fit;
}

// Integral of C exp(-kappa tau) over (T, inf), evaluated in log space so a
// steep fit cannot overflow the intercept.
double tail_integral(const decay_fit& fit, double t_cut) {
  const double log_tail = fit.log_c - fit.kappa * t_cut - std::log(fit.kappa);
  if (log_tail > 700.0) return std::numeric_limits<double>::infinity();
  return std::exp(log_tail);
}

// Largest odd integer not above n (n >= 1).
int largest_odd(int n) { return (n % 2 == 1) ? n : n - 1; }

}  // namespace

quadrature_result integrate_semi_infinite(const std::function<cplx(double)>& f,
                                          const quadrature_spec& spec) {
  validate(spec);

  auto nodes = [](int level, double h) {
    std::vector<double> xs;
    const int j_max = static_cast<int>(std::floor(kUMax / h));
    if (level == 0) {
      xs.reserve(2 * j_max + 1);
      for (int j = -j_max; j <= j_max; ++j) xs.push_back(j * h);
    } else {
      const int j_odd = largest_odd(j_max);
      xs.reserve(j_odd + 1);
      for (int j = -j_odd; j <= j_odd; j += 2) xs.push_back(j * h);
    }
    return xs;
  };

  auto term = [&f](double u) -> cplx {
    const double t = std::exp(kHalfPi * std::sinh(u));
    const double w = kHalfPi * std::cosh(u) * t;
    if (t <= 0.0 || !std::isfinite(t) || !std::isfinite(w)) return {0.0, 0.0};
    const cplx v = f(t);
    if (!is_finite(v)) return {0.0, 0.0};  // clamp underflowed endpoints
    return w * v;
  };

  return refine(spec, 1.0, nodes, term, [](const auto&, const auto&) {});
}

quadrature_result integrate_vertical_line(const std::function<cplx(cplx)>& f,
                                          double abscissa,
                                          const quadrature_spec& spec) {
  validate(spec);
  const double t_cut = spec.line_halfheight;
  const double h0 = t_cut / 16.0;

  auto nodes = [t_cut](int level, double h) {
    std::vector<double> xs;
    const int j_max = static_cast<int>(std::llround(t_cut / h));
    if (level == 0) {
      xs.reserve(2 * j_max + 1);
      for (int j = -j_max; j <= j_max; ++j) xs.push_back(j * h);
    } else {
      // interior midpoints of the previous level
      const int j_odd = largest_odd(j_max - 1);
      xs.reserve(j_odd + 1);
      for (int j = -j_odd; j <= j_odd; j += 2) xs.push_back(j * h);
    }
    return xs;
  };

  auto term = [&](double tau) -> cplx {
    const cplx v = f(cplx{abscissa, tau});
    if (!is_finite(v)) return {0.0, 0.0};
    return v;
  };

  // (|tau|, |F|) per side, collected serially after each level, for the
  // tail fit below.
  std::vector<std::pair<double, double>> upper, lower;
  auto collect = [&](const std::vector<double>& xs,
                     const std::vector<cplx>& vals) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double mag = std::abs(vals[i]);
      if (xs[i] >= 0.0) upper.emplace_back(xs[i], mag);
      if (xs[i] <= 0.0) lower.emplace_back(-xs[i], mag);
    }
  };

  quadrature_result res = refine(spec, h0, nodes, term, collect);

  // The engine computes (1/(2 pi)) Int_{-T}^{T} F(a + i tau) dtau.
  res.value /= 2.0 * kPi;
  res.error_estimate /= 2.0 * kPi;

  // Heuristic bound on the discarded |tau| > T remainder from an
  // exponential fit C exp(-kappa tau) to each side's outermost samples.
  double tail = 0.0;
  for (const decay_fit& side : {fit_decay(upper), fit_decay(lower)}) {
    if (!side.has_mass) continue;  // integrand dead before T on this side
    if (side.ok && side.kappa > 0.0) {
      tail += tail_integral(side, t_cut);
    } else {
      // no decay detected inside the window; T is too small to say anything
      double worst = 0.0;
      for (const auto& [tau, mag] : upper) worst = std::max(worst, mag);
      for (const auto& [tau, mag] : lower) worst = std::max(worst, mag);
      tail += worst * t_cut;
    }
  }
  res.tail_estimate = tail / (2.0 * kPi);
  res.error_estimate += res.tail_estimate;
  if (res.converged) {
    const double tol =
        std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
    res.converged = res.error_estimate <= tol;
  }
  return res;
}

}  // namespace xifeq
