#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "reference_values.hpp"
#include "xifeq/errors.hpp"
#include "xifeq/special_functions.hpp"

using xifeq::cplx;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("gamma at classic points") {
  CHECK(rel_err(xifeq::complex_gamma({0.5, 0.0}), {std::sqrt(kPi), 0.0}) < 1e-14);
  CHECK(rel_err(xifeq::complex_gamma({5.0, 0.0}), {24.0, 0.0}) < 1e-14);
  CHECK(rel_err(xifeq::complex_gamma({0.5, 3.0}), xifeq::ref::gamma_half_plus_3i) <
        1e-13);
}

TEST_CASE("gamma matches the high-precision table to 12 digits") {
  for (const auto& [s, want] : xifeq::ref::gamma_table) {
    CAPTURE(s.real());
    CAPTURE(s.imag());
    CHECK(rel_err(xifeq::complex_gamma(s), want) < 1e-12);
  }
}

TEST_CASE("gamma poles and overflow") {
  CHECK_THROWS_AS(xifeq::complex_gamma({0.0, 0.0}), xifeq::pole_error);
  CHECK_THROWS_AS(xifeq::complex_gamma({-3.0, 0.0}), xifeq::pole_error);
  CHECK_THROWS_AS(xifeq::complex_gamma({200.0, 0.0}), xifeq::overflow_error);
}

TEST_CASE("gamma follows the vertical-line decay rate") {
  // |Gamma(sigma + it)| behaves like t^{sigma-1/2} exp(-pi t / 2); the ratio
  // staying inside a broad bracket is what the contour convergence rests on.
  for (double sigma : {1.0, 2.0, 3.0}) {
    for (double t : {10.0, 20.0, 40.0}) {
      const double ratio = std::abs(xifeq::complex_gamma({sigma, t})) /
                           (std::pow(t, sigma - 0.5) * std::exp(-kPi * t / 2.0));
      CAPTURE(sigma);
      CAPTURE(t);
      CHECK(ratio > 0.1);
      CHECK(ratio < 10.0);
    }
  }
}

TEST_CASE("zeta at classic points") {
  CHECK(rel_err(xifeq::riemann_zeta({2.0, 0.0}), {kPi * kPi / 6.0, 0.0}) < 1e-13);
  CHECK(std::abs(xifeq::riemann_zeta({0.0, 0.0}) - cplx{-0.5, 0.0}) < 1e-14);
  // trivial zeros are exact through the reflected route
  CHECK(std::abs(xifeq::riemann_zeta({-2.0, 0.0})) == 0.0);
  CHECK(std::abs(xifeq::riemann_zeta({-4.0, 0.0})) == 0.0);
  CHECK(rel_err(xifeq::riemann_zeta({-3.0, 0.0}), {1.0 / 120.0, 0.0}) < 1e-12);
}

TEST_CASE("zeta matches the high-precision table to 10 digits") {
  for (const auto& [s, want] : xifeq::ref::zeta_table) {
    CAPTURE(s.real());
    CAPTURE(s.imag());
    CHECK(rel_err(xifeq::riemann_zeta(s), want) < 1e-10);
  }
}

TEST_CASE("zeta pole") {
  CHECK_THROWS_AS(xifeq::riemann_zeta({1.0, 0.0}), xifeq::pole_error);
}

TEST_CASE("zeta is small at the first zero ordinate") {
  CHECK(std::abs(xifeq::riemann_zeta({0.5, xifeq::ref::zeta_zeros[0]})) < 1e-5);
}

TEST_CASE("xi special values") {
  CHECK(std::abs(xifeq::xi({0.0, 0.0}) - cplx{0.5, 0.0}) < 1e-14);
  CHECK(std::abs(xifeq::xi({1.0, 0.0}) - cplx{0.5, 0.0}) < 1e-14);
  CHECK(rel_err(xifeq::xi({2.0, 0.0}), {kPi / 6.0, 0.0}) < 1e-13);
  CHECK(rel_err(xifeq::xi({0.5, 0.0}), {xifeq::ref::xi_half, 0.0}) < 1e-13);
  for (const auto& [s, want] : xifeq::ref::xi_table) {
    CAPTURE(s.real());
    CAPTURE(s.imag());
    CHECK(rel_err(xifeq::xi(s), want) < 1e-12);
  }
}

TEST_CASE("xi is regular through the removable singularities") {
  for (cplx s : {cplx{1e-4, 0.0}, cplx{0.0, 1e-4}, cplx{1.0 + 1e-4, 0.0},
                 cplx{1.0, 1e-4}}) {
    const cplx v = xifeq::xi(s);
    CHECK(std::isfinite(v.real()));
    CHECK(std::abs(v - cplx{0.5, 0.0}) < 1e-3);
  }
}

TEST_CASE("xi functional and conjugate symmetry on a random disc") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> radius(0.0, 20.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int k = 0; k < 50; ++k) {
    const double r = radius(rng);
    const double th = angle(rng);
    const cplx s{r * std::cos(th), r * std::sin(th)};
    const cplx v = xifeq::xi(s);
    CAPTURE(s.real());
    CAPTURE(s.imag());
    CHECK(std::abs(v - xifeq::xi(1.0 - s)) <= 1e-10 * (1.0 + std::abs(v)));
    CHECK(std::abs(std::conj(v) - xifeq::xi(std::conj(s))) <=
          1e-10 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("xi conjugate pair straddles the critical line") {
  const cplx up = xifeq::xi({0.5, 3.0});
  const cplx down = xifeq::xi({0.5, -3.0});
  CHECK(std::abs(up - std::conj(down)) < 1e-12 * (1.0 + std::abs(up)));
  // reflection s -> 1-s maps one to the other as well
  CHECK(std::abs(up - xifeq::xi({0.5, -3.0})) < 1e-12 * (1.0 + std::abs(up)));
}

TEST_CASE("critical line restriction") {
  CHECK(xifeq::xi_critical_line(0.0) == doctest::Approx(xifeq::ref::xi_half).epsilon(1e-13));
  CHECK(xifeq::xi_critical_line(0.0) > 0.0);
  CHECK(std::fabs(xifeq::xi_critical_line(14.134725)) < 1e-6);
  for (double t : {1.5, 7.25}) {
    CHECK(xifeq::xi_critical_line(t) ==
          doctest::Approx(xifeq::xi_critical_line(-t)).epsilon(1e-12));
  }
}

TEST_CASE("zero scan finds the first zero") {
  const auto scan = xifeq::find_zeta_zeros(14.0, 15.0, 0.1);
  REQUIRE(scan.zeros.size() == 1);
  const xifeq::zeta_zero& z = scan.zeros[0];
  CHECK(std::fabs(z.gamma - xifeq::ref::zeta_zeros[0]) < 1e-5);
  CHECK(z.bracket_lo < z.gamma);
  CHECK(z.gamma < z.bracket_hi);
  CHECK(xifeq::xi_critical_line(z.bracket_lo) *
            xifeq::xi_critical_line(z.bracket_hi) <
        0.0);
  CHECK(z.xi_residual < 1e-9);
}

TEST_CASE("zero scan counts ten zeros below 50") {
  const auto scan = xifeq::find_zeta_zeros(0.0, 50.0, 0.05);
  REQUIRE(scan.zeros.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CAPTURE(i);
    CHECK(std::fabs(scan.zeros[i].gamma - xifeq::ref::zeta_zeros[i]) < 1e-6);
  }
  CHECK(scan.suspected.empty());
}

TEST_CASE("zero scan is empty below the first zero") {
  CHECK(xifeq::find_zeta_zeros(2.0, 10.0, 0.1).zeros.empty());
}

TEST_CASE("zero scan rejects bad ranges") {
  CHECK_THROWS_AS(xifeq::find_zeta_zeros(-1.0, 10.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(xifeq::find_zeta_zeros(5.0, 4.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(xifeq::find_zeta_zeros(1.0, 4.0, 0.0), std::invalid_argument);
}

TEST_CASE("coarse scan flags a close pair instead of dropping it") {
  // Two roots at 5.05 +- 1e-4.5 sit inside one coarse cell; the scan cannot
  // separate them but must report the dip.
  auto f = [](double t) { return (t - 5.05) * (t - 5.05) - 1e-9; };
  const auto scan = xifeq::scan_sign_changes(f, 4.0, 6.0, 0.5);
  CHECK(scan.roots.empty());
  REQUIRE_FALSE(scan.suspected.empty());
  CHECK(scan.suspected[0].first < 5.05);
  CHECK(scan.suspected[0].second > 5.05);
}

TEST_CASE("scan separates the pair once the step resolves it") {
  auto f = [](double t) { return (t - 5.05) * (t - 5.05) - 1e-4; };
  const auto scan = xifeq::scan_sign_changes(f, 4.0, 6.0, 0.01);
  REQUIRE(scan.roots.size() == 2);
  CHECK(scan.roots[0].root == doctest::Approx(5.04).epsilon(1e-6));
  CHECK(scan.roots[1].root == doctest::Approx(5.06).epsilon(1e-6));
}
