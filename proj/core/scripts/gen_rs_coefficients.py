#!/usr/bin/env python3
"""Generate the Riemann-Siegel correction polynomials used by hardy_z.

The remainder of the Riemann-Siegel main sum is written as

    R(t) = 2 (-1)^(N-1) a^(-1/2) Re( e^{i d(t)} sum_n T_n(p) a^(-n) )

with a = sqrt(t/2pi), N = floor(a), p = 1 - 2(a - N) and d(t) the
difference between theta(t) and its leading asymptotic terms.  Each T_n is a
complex polynomial in p built from derivatives of

    F(p) = (exp(i pi (p^2/2 + 3/8)) - i sqrt(2) cos(pi p / 2)) / (2 cos(pi p))

weighted by the rational numbers d[n, k] of the standard recurrence for the
critical line.  Output is a C++ include file with one coefficient table per
term.

Usage: gen_rs_coefficients.py > core/src/rs_coefficients.inc
"""
from fractions import Fraction
from math import factorial

import mpmath as mp

TERMS = 10
DEGREE = 110
CUTOFF = mp.mpf("1e-24")
NOISE = mp.mpf("1e-40")

mp.mp.dps = 60


def d_table(terms):
    d = {(0, 0): Fraction(1)}

    def get(n, k):
        return d.get((n, k), Fraction(0))

    for n in range(1, terms):
        for k in range(0, 3 * n // 2 + 1):
            m = 3 * n - 2 * k
            if m != 0:
                d[(n, k)] = -(m + 1) * get(n - 1, k - 2) + Fraction(1, 4 * m) * get(n - 1, k)
            else:
                v = Fraction(0)
                for r in range(k):
                    v -= (-1) ** (k - r) * get(n, r) * Fraction(factorial(2 * k - 2 * r), factorial(k - r))
                d[(n, k)] = v
    return get


def big_f(p):
    num = mp.expj(mp.pi * (p * p / 2 + mp.mpf(3) / 8)) - 1j * mp.sqrt(2) * mp.cos(mp.pi * p / 2)
    return num / (2 * mp.cos(mp.pi * p))


def derivative(coeffs, k):
    return [coeffs[i + k] * mp.fac(i + k) / mp.fac(i) for i in range(len(coeffs) - k)]


def fmt(x):
    return "0.0" if abs(x) < NOISE else mp.nstr(x, 20, min_fixed=1, max_fixed=0)


def main():
    get = d_table(TERMS)
    taylor = mp.taylor(big_f, 0, DEGREE)
    print("// Generated by core/scripts/gen_rs_coefficients.py. Do not edit.")
    print("// Taylor coefficients in p of the Riemann-Siegel correction terms T_n(p).")
    print(f"inline constexpr int kRsTerms = {TERMS};")
    tables = []
    for n in range(TERMS):
        poly = [mp.mpc(0)] * (DEGREE + 1)
        for k in range(0, 3 * n // 2 + 1):
            w = get(n, k)
            if w == 0:
                continue
            scale = mp.mpf(w.numerator) / w.denominator / (mp.pi ** (2 * n - k) * (2j) ** k)
            for i, v in enumerate(derivative(taylor, 3 * n - 2 * k)):
                poly[i] += scale * v
        last = max(i for i, c in enumerate(poly) if max(abs(c.real), abs(c.imag)) > CUTOFF)
        tables.append(poly[: last + 1])
    for n, poly in enumerate(tables):
        print(f"inline constexpr std::array<double, {len(poly)}> kRsRe{n} = {{")
        for c in poly:
            print(f"    {fmt(c.real)},")
        print("};")
        print(f"inline constexpr std::array<double, {len(poly)}> kRsIm{n} = {{")
        for c in poly:
            print(f"    {fmt(c.imag)},")
        print("};")


if __name__ == "__main__":
    main()
