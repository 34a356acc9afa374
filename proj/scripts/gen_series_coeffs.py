#!/usr/bin/env python3
"""Derive the Maclaurin coefficients and reference values used by kernel.hpp.

The exponential-kernel constants all suffer catastrophic cancellation for
small A, so the library evaluates them by truncated Maclaurin series below a
per-constant switch threshold.  This script derives those coefficients
symbolically (exact rationals), estimates the truncation error at the switch
band, and prints high-precision reference values that the unit tests freeze.

Run:  python3 scripts/gen_series_coeffs.py
Output is meant to be pasted into include/fracineq/kernel.hpp and the tests;
it is a development-time tool, not a build step.
"""

import sympy as sp
import mpmath as mp

mp.mp.dps = 50

A = sp.symbols("A", positive=True)

# Quantities evaluated by series below their thresholds.  Each entry:
# (name, expression, number of series terms, switch threshold)
QUANTITIES = [
    # A / (1 - e^-A): kernel-mass ratio behind the midpoint coefficient.
    ("mass_ratio", A / (1 - sp.exp(-A)), 12, 1e-2),
    # 4*tanh(A/4)/A: trapezoid-gap coefficient normalized to 1 at A=0.
    ("dragomir_norm", 4 * sp.tanh(A / 4) / A, 10, 1e-2),
    # P1/(2A^3) where P1 = A^2-2A+4-(A^2+2A+4)e^-A  (limit 1/3).
    ("pachpatte_c1",
     (A**2 - 2*A + 4 - (A**2 + 2*A + 4) * sp.exp(-A)) / (2 * A**3), 16, 0.25),
    # P2/A^3 where P2 = A-2+(A+2)e^-A  (limit 1/6).
    ("pachpatte_c2", (A - 2 + (A + 2) * sp.exp(-A)) / A**3, 16, 0.25),
    # Endpoint moments of the kernel-difference weight on [0,1/2] and [1/2,1].
    ("moment_i1", -sp.exp(-A/2)/A + (1 - sp.exp(-A))/A**2, 16, 0.25),
    ("moment_i2",
     (1 - sp.exp(-A/2) + sp.exp(-A))/A - (1 - sp.exp(-A))/A**2, 16, 0.25),
]


def series_coeffs(expr, nterms):
    """Maclaurin coefficients c_0..c_{nterms-1} of expr as exact rationals."""
    s = sp.series(expr, A, 0, nterms + 2).removeO()
    poly = sp.Poly(sp.expand(s), A)
    return [sp.nsimplify(poly.coeff_monomial(A**k)) for k in range(nterms)]


def to_double(x):
    """Nearest double, printed with 17 significant digits."""
    return mp.nstr(mp.mpf(sp.Rational(x).p) / mp.mpf(sp.Rational(x).q), 17,
                   strip_zeros=False)


def main():
    print("=" * 72)
    print("SERIES COEFFICIENT TABLES (paste into kernel.hpp)")
    print("=" * 72)
    tables = {}
    for name, expr, nterms, threshold in QUANTITIES:
        coeffs = series_coeffs(expr, nterms)
        tables[name] = (coeffs, expr, threshold)
        print(f"\n// {name}: {sp.sstr(expr)}")
        print(f"// exact rationals: {coeffs}")
        print(f"inline constexpr std::array<double, {nterms}> k_{name}_series = {{")
        for c in coeffs:
            print(f"    {to_double(c)},")
        print("};")

        # truncation error at the switch threshold (relative to the value)
        val = mp.mpf(0)
        x = mp.mpf(threshold)
        horner = mp.mpf(0)
        for c in reversed(coeffs):
            horner = horner * x + mp.mpf(sp.Rational(c).p) / mp.mpf(sp.Rational(c).q)
        f = sp.lambdify(A, expr, mp)
        exact = f(x)
        rel = abs(horner - exact) / abs(exact)
        print(f"// truncation at A={threshold}: rel error {mp.nstr(rel, 3)}")
        assert rel < mp.mpf("1e-16"), (name, rel)

    print()
    print("=" * 72)
    print("IDENTITY CHECKS (all must print ~0)")
    print("=" * 72)
    i1, i2 = (q[1] for q in QUANTITIES[4:6])
    for Aval in ["0.001", "0.1", "1", "10", "100"]:
        x = mp.mpf(Aval)
        f1 = sp.lambdify(A, i1, mp)
        f2 = sp.lambdify(A, i2, mp)
        lhs = f1(x) + f2(x)
        rhs = (1 - mp.e**(-x/2))**2 / x
        print(f"  i1+i2 - (1-e^-A/2)^2/A   at A={Aval}: {mp.nstr(lhs-rhs, 3)}")
        # factorization: (1/(2(1-e^-A)))*(i1+i2) == tanh(A/4)/(2A)
        left = lhs / (2 * (1 - mp.e**(-x)))
        right = mp.tanh(x/4) / (2*x)
        print(f"  factorization residual   at A={Aval}: {mp.nstr(left-right, 3)}")

    # moments against direct quadrature of their defining integrals
    for Aval in ["0.1", "1", "10"]:
        x = mp.mpf(Aval)
        q1 = mp.quad(lambda t: (mp.e**(-x*t) - mp.e**(-x*(1-t))) * t, [0, mp.mpf(1)/2])
        q2 = mp.quad(lambda t: (mp.e**(-x*(1-t)) - mp.e**(-x*t)) * t, [mp.mpf(1)/2, 1])
        q3 = mp.quad(lambda t: (mp.e**(-x*t) - mp.e**(-x*(1-t))) * (1-t), [0, mp.mpf(1)/2])
        q4 = mp.quad(lambda t: (mp.e**(-x*(1-t)) - mp.e**(-x*t)) * (1-t), [mp.mpf(1)/2, 1])
        f1 = sp.lambdify(A, i1, mp)
        f2 = sp.lambdify(A, i2, mp)
        print(f"  i1 quad residual at A={Aval}: {mp.nstr(q1 - f1(x), 3)};"
              f" i2: {mp.nstr(q2 - f2(x), 3)};"
              f" i3-i2: {mp.nstr(q3 - f2(x), 3)}; i4-i1: {mp.nstr(q4 - f1(x), 3)}")

    # product-bound weights: c1-family + 2*c2-family integrates the constant 1
    for Aval in ["0.1", "1", "10"]:
        x = mp.mpf(Aval)
        p1 = x**2 - 2*x + 4 - (x**2 + 2*x + 4) * mp.e**(-x)
        p2 = x - 2 + (x + 2) * mp.e**(-x)
        lhs = p1 / x**3 + 2 * p2 / x**3
        rhs = (1 - mp.e**(-x)) / x
        print(f"  (P1+2P2)/A^3 - (1-e^-A)/A at A={Aval}: {mp.nstr(lhs-rhs, 3)}")

    print()
    print("=" * 72)
    print("FROZEN REFERENCE VALUES (paste into tests)")
    print("=" * 72)
    refs = {
        "coef_midpoint(0.5,[0,1]) = 0.25/(1-e^-1)":
            mp.mpf("0.25") / (1 - mp.e**-1),
        "coef_dragomir(0.5,[0,1]) = 0.5*tanh(0.25)":
            mp.mpf("0.5") * mp.tanh(mp.mpf("0.25")),
        "P1(1) = 3-7/e": 3 - 7/mp.e,
        "P2(1) = 3/e-1": 3/mp.e - 1,
        "i1(1)": -mp.e**mp.mpf("-0.5") + (1 - mp.e**-1),
        "i2(1)": (1 - mp.e**mp.mpf("-0.5") + mp.e**-1) - (1 - mp.e**-1),
        "hh mid, x^2, a=0.5, [0,1] = 0.25(6-14/e)/(1-1/e)":
            mp.mpf("0.25") * (6 - 14/mp.e) / (1 - 1/mp.e),
        "left frac integral of s, a=0.5, [0,1] = 2/e": 2/mp.e,
        "left frac integral of s^2, a=0.5, [0,1] = 2(1-2/e)": 2*(1 - 2/mp.e),
        "right frac integral of s^2, a=0.5, [0,1] = 2(2-5/e)": 2*(2 - 5/mp.e),
    }
    for label, v in refs.items():
        print(f"  {label}\n      = {mp.nstr(v, 25)}")

    print()
    print("=" * 72)
    print("BRANCH-BAND REFERENCE VALUES (50-digit, for agreement tests)")
    print("=" * 72)
    for name, expr, nterms, threshold in QUANTITIES:
        f = sp.lambdify(A, expr, mp)
        pts = [threshold * m for m in (0.5, 0.99, 1.01, 2.0)]
        vals = ", ".join(mp.nstr(f(mp.mpf(p)), 20) for p in pts)
        print(f"  {name} at thr*(0.5,0.99,1.01,2): {vals}")


if __name__ == "__main__":
    main()
