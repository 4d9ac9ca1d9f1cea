"""Regenerates the brute-force regression constants for the self-energy series

    S(alpha) = sum_{l>=0} [ (2l+1)/sqrt(4l(l+1)+alpha^2) - 1 ].

Two independent routes must agree before a constant is frozen into the test
suite:

  A: float64 chunked summation of 1e7 explicit terms (cancellation-free
     per-term form) closed with Hurwitz-zeta integral tails;
  B: 40-digit mpmath summation of 1e5 terms closed with tails through the
     fourth expansion order.

Usage: python tests/oracles/brute_force_s.py
"""

import math

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def term_stable(l, one_minus_a2):
    # t_l = 1/sqrt(1-x) - 1 with x = (1-a^2)/(2l+1)^2, no cancellation
    x = one_minus_a2 / (2.0 * l + 1.0) ** 2
    s = np.sqrt(1.0 - x)
    return x / (s * (1.0 + s))


def route_a(alpha, terms=10**7, chunk=10**6):
    u = 1.0 - alpha * alpha
    partials = []
    for start in range(0, terms, chunk):
        l = np.arange(start, min(start + chunk, terms), dtype=np.float64)
        partials.append(math.fsum(term_stable(l, u)))
    total = math.fsum(partials)
    # tails over l >= terms: sum 1/(2l+1)^(2k) = 4^-k zeta(2k, terms + 1/2)
    a = mp.mpf(terms) + mp.mpf(1) / 2
    uu = mp.mpf(u)
    tail = uu / 2 * mp.zeta(2, a) / 4 + 3 * uu**2 / 8 * mp.zeta(4, a) / 16
    return total + float(tail)


def route_b(alpha, terms=10**5):
    alpha = mp.mpf(alpha)
    u = 1 - alpha * alpha
    s = mp.mpf(0)
    for l in range(terms):
        x = u / (2 * l + 1) ** 2
        r = mp.sqrt(1 - x)
        s += x / (r * (1 + r))
    a = mp.mpf(terms) + mp.mpf(1) / 2
    for k, ck in enumerate(
        (mp.mpf(1) / 2, mp.mpf(3) / 8, mp.mpf(5) / 16, mp.mpf(35) / 128), start=1
    ):
        s += ck * u**k * mp.zeta(2 * k, a) / 4**k
    return s


if __name__ == "__main__":
    for alpha in (0.5, 0.99):
        va = route_a(alpha)
        vb = route_b(alpha)
        print(f"S({alpha}):")
        print(f"  route A (1e7 f64 terms + tail) = {va!r}")
        print(f"  route B (1e5 mp terms + tail)  = {mp.nstr(vb, 22)}")
        print(f"  |A - B| = {abs(va - float(vb)):.3e}")
