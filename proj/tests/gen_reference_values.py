#!/usr/bin/env python3
"""Regenerates tests/reference_values.hpp.

All values are computed with mpmath at 50 decimal digits, independently of the
C++ code under test:

  * gamma values come from mpmath's arbitrary-precision gamma,
  * zeta zero ordinates are located by sign-change bisection on
    Xi(t) = xi(1/2 + i t) and cross-checked against mpmath.zetazero,
  * kernel values sum the theta series directly (no reflection shortcut),
  * xi(1/2) is additionally pinned by mp quadrature of the kernel's Mellin
    integral so the two routes are checked against each other here,
  * the f(z=1, y=2, x=1/2) value is a direct mp quadrature of the
    substituted integrand on a fine interval split.

Run:  python3 tests/gen_reference_values.py > tests/reference_values.hpp
"""

import sys

from mpmath import (mp, mpf, mpc, gamma, zeta, pi, exp, log, sqrt, power,
                    cosh, quad, mpmathify, bernoulli, factorial, zetazero, im, re)

mp.dps = 50


def xi(s):
    s = mpc(s)
    return mpf('0.5') * s * (s - 1) * power(pi, -s / 2) * gamma(s / 2) * zeta(s)


def big_xi(t):
    v = xi(mpc(mpf('0.5'), t))
    assert abs(im(v)) < mpf('1e-40') * (1 + abs(v)), t
    return re(v)


def hbar_series(t, nmax=400):
    """Direct summation of the theta kernel; valid for any t > 0."""
    t = mpf(t)
    total = mpf(0)
    for n in range(1, nmax + 1):
        term = (2 * pi**2 * n**4 * t**2 - 3 * pi * n**2) * exp(-pi * n**2 * t**2)
        total += term
        if abs(term) < mpf('1e-80') and n > 4:
            break
    return 2 * t**2 * total


def bisect_zero(f, lo, hi, tol=mpf('1e-40')):
    flo, fhi = f(lo), f(hi)
    assert flo * fhi < 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return mid
        if flo * fm < 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return (lo + hi) / 2


def cfmt(x, digits=22):
    return mp.nstr(mpf(x), digits, strip_zeros=False)


def cxfmt(z, digits=22):
    z = mpc(z)
    return "{%s, %s}" % (cfmt(re(z), digits), cfmt(im(z), digits))


def main():
    out = []
    w = out.append

    # ---- gamma -----------------------------------------------------------
    gamma_points = [
        mpc('0.5', '3'),
        mpc('0.5', '0'),
        mpc('5', '0'),
        mpc('10', '10'),
        mpc('30', '20'),
        mpc('49', '5'),
        mpc('0.1', '-0.9'),
        mpc('-4.5', '2'),
        mpc('-20.3', '14'),
        mpc('-0.5', '-40'),
        mpc('1', '49'),
    ]
    gamma_vals = [(s, gamma(s)) for s in gamma_points]

    # ---- zeta ------------------------------------------------------------
    zeta_points = [
        mpc('3', '0'),
        mpc('-0.5', '0'),
        mpc('0.5', '10'),
        mpc('2', '30'),
        mpc('-1', '55'),
        mpc('0.25', '40.5'),
        mpc('-3', '0'),
        mpc('-9.5', '2'),
    ]
    zeta_vals = [(s, zeta(s)) for s in zeta_points]

    # ---- xi ---------------------------------------------------------------
    xi_half_formula = re(xi(mpf('0.5')))

    # Independent route: Mellin integral of the kernel at s = 1/2.  The
    # kernel decays double-exponentially at both ends, so a finite split
    # covers it far below the emitted precision.
    def mellin_integrand(t):
        return power(t, mpf('-0.5')) * hbar_series(t)

    xi_half_quad = quad(mellin_integrand, [mpf('0.05'), 1, 3, 12])
    assert abs(xi_half_formula - xi_half_quad) < mpf('1e-35'), \
        (xi_half_formula, xi_half_quad)

    xi_points = [mpc('3', '0'), mpc('0.5', '3'), mpc('2', '0'), mpc('-1', '0'),
                 mpc('0.3', '1'), mpc('1.0001', '0')]
    xi_vals = [(s, xi(s)) for s in xi_points]
    abs_xi_half_15i = abs(xi(mpc('0.5', '15')))

    # ---- zeta zeros via sign-change bisection on Xi ------------------------
    # Scan step 0.05 on (10, 55); refine each bracket by bisection.
    zeros = []
    t = mpf(10)
    step = mpf('0.05')
    prev_t, prev_v = t, big_xi(t)
    while t < 55 and len(zeros) < 11:
        t += step
        v = big_xi(t)
        if prev_v * v < 0:
            zeros.append(bisect_zero(big_xi, prev_t, t))
        prev_t, prev_v = t, v
    assert len(zeros) == 11, len(zeros)
    for k, g in enumerate(zeros, start=1):
        zref = im(zetazero(k))
        assert abs(g - zref) < mpf('1e-30'), (k, g, zref)

    # ---- theta kernel ------------------------------------------------------
    hbar_points = ['0.4', '0.45', '0.5', '0.55', '0.6', '0.7', '1', '2', '3',
                   '4', '8']
    hbar_vals = [(mpf(t), hbar_series(t)) for t in hbar_points]
    # self-reciprocity sanity at mp precision
    for t in (mpf('0.125'), mpf('0.5'), mpf(3)):
        assert abs(hbar_series(t) - hbar_series(1 / t) / t) < mpf('1e-38')

    # ---- solution value at (z=1, y=2, x=1/2) -------------------------------
    def f_integrand(u):
        h = hbar_series(u)
        su = sqrt(u)
        return (su / (1 + su)) * power(u, -2) * h

    f_1_2_half = quad(f_integrand, [mpf('0.05'), mpf('0.3'), 1, 3, 12])

    # ---- misc closed forms -------------------------------------------------
    pi_over_cosh_pi = pi / cosh(pi)

    # ---- Euler-Maclaurin coefficients B_{2k} / (2k)! -----------------------
    em_coeffs = [bernoulli(2 * k) / factorial(2 * k) for k in range(0, 31)]

    # ---- emit --------------------------------------------------------------
    w("#pragma once")
    w("// Generated by gen_reference_values.py (mpmath, 50 decimal digits).")
    w("// Do not edit by hand; rerun the script instead.")
    w("#include <complex>")
    w("")
    w("namespace xifeq::ref {")
    w("")
    w("struct point_value {")
    w("  std::complex<double> s;")
    w("  std::complex<double> value;")
    w("};")
    w("")
    w("inline constexpr point_value gamma_table[] = {")
    for s, v in gamma_vals:
        w("    {%s, %s}," % (cxfmt(s), cxfmt(v)))
    w("};")
    w("")
    w("inline constexpr point_value zeta_table[] = {")
    for s, v in zeta_vals:
        w("    {%s, %s}," % (cxfmt(s), cxfmt(v)))
    w("};")
    w("")
    w("inline constexpr point_value xi_table[] = {")
    for s, v in xi_vals:
        w("    {%s, %s}," % (cxfmt(s), cxfmt(v)))
    w("};")
    w("")
    w("inline constexpr std::complex<double> gamma_half_plus_3i = %s;" %
      cxfmt(gamma(mpc('0.5', '3'))))
    w("inline constexpr double xi_half = %s;" % cfmt(xi_half_formula))
    w("inline constexpr double abs_xi_half_plus_15i = %s;" % cfmt(abs_xi_half_15i))
    w("")
    w("// Ordinates of the first nontrivial zeta zeros, located by bisection")
    w("// on Xi(t) and cross-checked against mpmath.zetazero.")
    w("inline constexpr double zeta_zeros[] = {")
    for g in zeros:
        w("    %s," % cfmt(g))
    w("};")
    w("")
    w("struct real_point_value {")
    w("  double t;")
    w("  double value;")
    w("};")
    w("")
    w("// Direct high-precision summation of the theta kernel series.")
    w("inline constexpr real_point_value hbar_table[] = {")
    for t, v in hbar_vals:
        w("    {%s, %s}," % (cfmt(t), cfmt(v)))
    w("};")
    w("")
    w("// Fine-split mp quadrature of (sqrt(u)/(1+sqrt(u))) u^-2 hbar(u) on (0,inf).")
    w("inline constexpr std::complex<double> f_value_z1_y2_xhalf = %s;" %
      cxfmt(f_1_2_half))
    w("")
    w("inline constexpr double pi_over_cosh_pi = %s;" % cfmt(pi_over_cosh_pi))
    w("")
    w("// B_{2k}/(2k)! for k = 0..30 (Euler-Maclaurin correction weights).")
    w("inline constexpr double bernoulli_over_factorial[] = {")
    for c in em_coeffs:
        w("    %s," % cfmt(c))
    w("};")
    w("")
    w("}  // namespace xifeq::ref")
    print("\n".join(out))


if __name__ == "__main__":
    sys.exit(main())
