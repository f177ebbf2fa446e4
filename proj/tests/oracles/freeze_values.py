#!/usr/bin/env python3
"""Independent brute-force oracles for the frozen values in frozen_values.hpp.

Everything here uses mpmath at 120 significant digits and plain Fractions; no
code is shared with the library. Rerun and paste the output when a value needs
to change.
"""
from fractions import Fraction
from itertools import product

import mpmath as mp

mp.mp.dps = 120

PHI = (1 + mp.sqrt(5)) / 2
SQRT2 = mp.sqrt(2)
E = mp.e
CBRT2 = mp.cbrt(2)
CBRT4 = mp.cbrt(4)


def dist(x):
    return abs(x - mp.nint(x))


def frac(x):
    return x - mp.floor(x)


def cf_digits(x, k):
    out = []
    for _ in range(k + 1):
        a = int(mp.floor(x))
        out.append(a)
        x = 1 / (x - a)
    return out


def convergent_q(digits):
    q = [1, digits[1]]
    for a in digits[2:]:
        q.append(a * q[-1] + q[-2])
    return q


def discrepancy(alpha, n):
    # sup over all intervals [a,b], (a,b), [a,b), (a,b] with endpoints at
    # sample points or 0/1; O(N^2) scan, independent of the library's sweep
    pts = sorted(frac(k * alpha) for k in range(1, n + 1))
    ends = [mp.mpf(0)] + pts + [mp.mpf(1)]
    best = mp.mpf(0)
    for i, a in enumerate(ends):
        for b in ends[i:]:
            closed = sum(1 for p in pts if a <= p <= b)
            opened = sum(1 for p in pts if a < p < b)
            best = max(best, abs(closed - n * (b - a)), abs(opened - n * (b - a)))
    return best


def local_extrema(alpha, qk1, t):
    hi = lo = None
    count = 0
    for n in range(1, qk1):
        if frac(n * alpha) <= mp.mpf(t.numerator) / t.denominator:
            count += 1
        v = Fraction(count) - t * n
        hi = v if hi is None else max(hi, v)
        lo = v if lo is None else min(lo, v)
    return hi, lo


def schoissengeier(digits, q, K, t):
    def fr(x):
        return x - (x.numerator // x.denominator)

    mx = Fraction(0)
    mn = Fraction(0)
    for k in range(1, K + 1):
        qm1 = q[k - 1]
        term = fr(q[k] * t) * (digits[k + 1] * (1 - fr(q[k] * t)) + fr(q[k + 1] * t) - fr(qm1 * t))
        if k % 2 == 0:
            mx += term
        else:
            mn -= term
    return mx, mn


def show(name, value):
    print(f"{name} = {mp.nstr(value, 40)}")


if __name__ == "__main__":
    show("harmonic_e_10", sum(1 / (n * dist(n * E)) for n in range(1, 11)))
    show("harmonic_e_1000", sum(1 / (n * dist(n * E)) for n in range(1, 1001)))
    show("dist_e_1000_half", sum(1 / dist(n * E) for n in range(1, 1001) if dist(n * E) >= mp.mpf(1) / 2 / 1000))
    show("dist_sqrt2_2", sum(1 / dist(n * SQRT2) for n in range(1, 3)))
    show("dist_phi_3", sum(1 / dist(n * PHI) for n in range(1, 4)))
    show("frac_cbrt2_50", sum(1 / (n * frac(n * CBRT2)) for n in range(1, 51)))
    show("cofrac_cbrt2_50", sum(1 / (n * (1 - frac(n * CBRT2))) for n in range(1, 51)))
    show("shifted_sqrt2_third_200",
         sum(1 / dist(n * SQRT2 + mp.mpf(1) / 3) for n in range(1, 201)))
    for N in (1, 2):
        s = mp.mpf(0)
        s_linf = mp.mpf(0)
        for n in product(range(-N, N + 1), repeat=2):
            if n == (0, 0):
                continue
            v = dist(n[0] * CBRT2 + n[1] * CBRT4)
            s += 1 / v
            s_linf += 1 / (max(abs(n[0]), abs(n[1])) ** 2 * v)
        show(f"multidim_cbrt_{N}", s)
        show(f"multidim_cbrt_linf_{N}", s_linf)
    count = sum(1 for n in product(range(-4, 5), repeat=2)
                if n != (0, 0) and dist(n[0] * CBRT2 + n[1] * CBRT4) <= mp.mpf(1) / 8)
    print(f"count_multidim_cbrt_4_eighth = {count}")
    for name, alpha in (("phi", PHI), ("sqrt2", SQRT2), ("e", E)):
        for N in (5, 10, 37, 100):
            show(f"disc_{name}_{N}", discrepancy(alpha, N))
    show("disc_cbrt2_60", discrepancy(CBRT2, 60))
    print("cbrt2_digits =", cf_digits(CBRT2, 30))
    print("cbrt4_digits =", cf_digits(CBRT4, 30))
    print("e_digits =", cf_digits(E, 30))
    for name, alpha, K, t in (("sqrt2", SQRT2, 3, Fraction(3, 10)), ("phi", PHI, 8, Fraction(5, 16)),
                              ("e", E, 6, Fraction(2, 7))):
        d = cf_digits(alpha, K + 2)
        q = convergent_q(d)
        hi, lo = local_extrema(alpha, q[K + 1], t)
        mx, mn = schoissengeier(d, q, K, t)
        print(f"local_{name}_{K}: max={hi} min={lo} formula_max={mx} formula_min={mn}")
    # criterion-2 calibration point
    N = 1000
    s1 = sum(1 / dist(n * PHI) for n in range(1, N + 1))
    s2 = sum(1 / (n * dist(n * PHI)) for n in range(1, N + 1))
    show("badly_phi_1000_s1", s1)
    show("badly_phi_1000_r1", (s1 - 2 * N * mp.log(N)) / N)
    show("badly_phi_1000_s2", s2)
    show("badly_phi_1000_r2", (s2 - mp.log(N) ** 2) / mp.log(N))
