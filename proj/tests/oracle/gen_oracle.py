#!/usr/bin/env python3
"""Arbitrary-precision reference values for the test suites.

Everything here is computed with mpmath at 40 significant digits and frozen
into oracle_values.hpp.  Nothing in this script shares code with the C++
implementation.

Usage: gen_oracle.py > tests/oracle/oracle_values.hpp
"""
import random

import numpy as np
import mpmath as mp

mp.mp.dps = 40
SEED = 20261017


def num(x):
    return mp.nstr(mp.mpf(x), 25, min_fixed=1, max_fixed=0)


def s_of_t(t, count):
    return count - mp.siegeltheta(t) / mp.pi - 1


def s1_of_t(t):
    """S1(t) = int_0^t S(u) du with S = N - theta/pi - 1 between zeros."""
    t = mp.mpf(t)
    total = -t - mp.quad(mp.siegeltheta, mp.linspace(0, t, 40)) / mp.pi
    n = 1
    while True:
        g = mp.zetazero(n).imag
        if g >= t:
            break
        total += t - g
        n += 1
    return total


def j_hat(t):
    return t * mp.log(t) + (2 * mp.euler - 1 - mp.log(2 * mp.pi)) * t


def v_of(y):
    return y * mp.log(y) + (mp.euler - mp.log(2 * mp.pi)) * y


def main():
    rng = random.Random(SEED)
    out = []
    emit = out.append
    emit("// Generated by tests/oracle/gen_oracle.py (mpmath, 40 digits). Do not edit.")
    emit("#pragma once")
    emit("#include <array>")
    emit("namespace oracle {")
    emit("struct ZetaSample { double sigma, t, re, im; };")
    emit("inline constexpr std::array<ZetaSample, 20> kZetaSamples = {{")
    for _ in range(20):
        sigma = round(rng.uniform(0.55, 3.0), 6)
        t = round(rng.uniform(0.0, 100.0), 6)
        z = mp.zeta(mp.mpc(sigma, t))
        emit(f"    {{{sigma!r}, {t!r}, {num(z.real)}, {num(z.imag)}}},")
    emit("}};")

    emit(f"inline constexpr double kEulerGamma = {num(mp.euler)};")
    emit(f"inline constexpr double kLnTwoPi = {num(mp.log(2 * mp.pi))};")
    emit(f"inline constexpr double kZeta2 = {num(mp.zeta(2))};")
    emit(f"inline constexpr double kZeta3 = {num(mp.zeta(3))};")
    emit(f"inline constexpr double kZeta4 = {num(mp.zeta(4))};")
    emit(f"inline constexpr double kZeta8 = {num(mp.zeta(8))};")
    emit(f"inline constexpr double kZetaHalf = {num(mp.zeta(0.5))};")

    emit("struct PointValue { double t, value; };")
    theta_points = [0.5, 1, 3, 6, 10, 14, 20, 50, 100, 1000, 10000]
    emit(f"inline constexpr std::array<PointValue, {len(theta_points)}> kTheta = {{{{")
    for t in theta_points:
        emit(f"    {{{float(t)!r}, {num(mp.siegeltheta(t))}}},")
    emit("}};")
    tmin = mp.findroot(lambda u: mp.diff(mp.siegeltheta, u), 6.3)
    emit(f"inline constexpr double kThetaMinimumAt = {num(tmin)};")

    z_points = [0.0, 5.0, 14.0, 29.5, 30.5, 50.0, 100.0, 1000.0, 10000.0, 100000.0]
    emit(f"inline constexpr std::array<PointValue, {len(z_points)}> kHardyZ = {{{{")
    for t in z_points:
        emit(f"    {{{t!r}, {num(mp.siegelz(t))}}},")
    emit("}};")

    emit("inline constexpr std::array<double, 3> kFirstZeros = {")
    for n in (1, 2, 3):
        emit(f"    {num(mp.zetazero(n).imag)},")
    emit("};")
    emit(f"inline constexpr int kZeroCount100 = {int(mp.nzeros(100))};")
    emit(f"inline constexpr int kZeroCount30 = {int(mp.nzeros(30))};")
    emit(f"inline constexpr int kZeroCount1000 = {int(mp.nzeros(1000))};")
    emit(f"inline constexpr double kS30 = {num(s_of_t(30, mp.nzeros(30)))};")

    emit(f"inline constexpr double kS1At10 = {num(s1_of_t(10))};")
    emit(f"inline constexpr double kS1At100 = {num(s1_of_t(100))};")
    emit(f"inline constexpr double kS1At300 = {num(s1_of_t(300))};")

    upper = mp.mpf("14.13")
    zsq = mp.quad(lambda u: mp.siegelz(u) ** 2, mp.linspace(0, upper, 30))
    emit(f"inline constexpr double kZSquaredTo1413 = {num(zsq)};")

    big_t = mp.mpf(10000)
    phi1 = mp.findroot(lambda y: v_of(y) - j_hat(big_t), 9500)
    phi1_inv = mp.findroot(lambda u: j_hat(u) - v_of(big_t), 10500)
    emit(f"inline constexpr double kJHat1e4 = {num(j_hat(big_t))};")
    emit(f"inline constexpr double kV1e4 = {num(v_of(big_t))};")
    emit(f"inline constexpr double kPhi1Asymptotic1e4 = {num(phi1)};")
    emit(f"inline constexpr double kPhi1InvAsymptotic1e4 = {num(phi1_inv)};")
    # Dirichlet divisor sums by the full sum of floor(x/k), not the hyperbola.
    for x in (10**7, 10**9):
        total = 0
        for a in range(1, x + 1, 10**8):
            k = np.arange(a, min(x, a + 10**8 - 1) + 1, dtype=np.int64)
            total += int((x // k).sum())
        emit(f"inline constexpr unsigned long long kDivisorSum1e{len(str(x)) - 1} = {total}ULL;")
    emit("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
