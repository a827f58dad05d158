"""Exact k-th root extraction in Q(i) via Gaussian-integer factorization.

Used by the radical simplification pre-check: a candidate radicand that lies
in Q(i) gets factored over Z[i]; when every prime valuation is divisible by k
the root splits as i^s * w0^k with w0 in Q(i), and the k-th roots stay inside
a cyclotomic field (no formal radical needed).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from sympy import factorint
from sympy.ntheory.residue_ntheory import sqrt_mod

# Factoring guard: radicands whose integer data exceeds this are left to the
# formal-radical path rather than risking a long factorization.
_NORM_LIMIT = 10**44

FOUND = "found"
NONE = "none"
TOO_BIG = "too_big"

GaussInt = tuple[int, int]


def _gmul(a: GaussInt, b: GaussInt) -> GaussInt:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gnorm(a: GaussInt) -> int:
    return a[0] * a[0] + a[1] * a[1]


def _gdiv_exact(a: GaussInt, b: GaussInt) -> GaussInt | None:
    # a / b when it is a Gaussian integer, else None.
    n = _gnorm(b)
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _ggcd(a: GaussInt, b: GaussInt) -> GaussInt:
    # Euclidean gcd with nearest-integer rounding.
    while b != (0, 0):
        n = _gnorm(b)
        re = a[0] * b[0] + a[1] * b[1]
        im = a[1] * b[0] - a[0] * b[1]
        q = (_round_div(re, n), _round_div(im, n))
        a, b = b, (a[0] - (q[0] * b[0] - q[1] * b[1]), a[1] - (q[0] * b[1] + q[1] * b[0]))
    return a


def _round_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if 2 * r >= b:
        q += 1
    return q


def _valuation(a: GaussInt, p: GaussInt) -> tuple[int, GaussInt]:
    v = 0
    while True:
        d = _gdiv_exact(a, p)
        if d is None:
            return v, a
        a = d
        v += 1


def _prime_above(p: int) -> GaussInt:
    # A Gaussian prime above a split rational prime p = 1 (mod 4).
    r = sqrt_mod(-1, p)
    return _ggcd((p, 0), (r, 1))


def _gaussian_valuations(a: GaussInt) -> dict[GaussInt, int] | None:
    """Prime valuations of a nonzero Gaussian integer; None past the guard."""
    n = _gnorm(a)
    if n > _NORM_LIMIT:
        return None
    vals: dict[GaussInt, int] = {}
    for p, _ in factorint(n).items():
        if p == 2:
            v, a = _valuation(a, (1, 1))
            if v:
                vals[(1, 1)] = v
        elif p % 4 == 3:
            v, a = _valuation(a, (p, 0))
            if v:
                vals[(p, 0)] = v
        else:
            pi = _prime_above(p)
            pibar = (pi[0], -pi[1])
            v, a = _valuation(a, pi)
            if v:
                vals[pi] = v
            v, a = _valuation(a, pibar)
            if v:
                vals[pibar] = v
    return vals


def _qi_pow(base: tuple[Fraction, Fraction], e: int) -> tuple[Fraction, Fraction]:
    x, y = Fraction(1), Fraction(0)
    bx, by = base
    if e < 0:
        n = bx * bx + by * by
        bx, by = bx / n, -by / n
        e = -e
    while e:
        if e & 1:
            x, y = x * bx - y * by, x * by + y * bx
        bx, by = bx * bx - by * by, 2 * bx * by
        e >>= 1
    return x, y


def gaussian_kth_root(x: Fraction, y: Fraction, k: int):
    """Write x + y*i as i^s * (wx + wy*i)^k.

    Returns (FOUND, (wx, wy, s)) when the decomposition exists, (NONE, None)
    when it certifiably does not, and (TOO_BIG, None) when the input exceeds
    the factoring guard.
    """
    if x == 0 and y == 0:
        raise ZeroDivisionError("root of zero")
    d = lcm(x.denominator, y.denominator)
    a = (int(x * d), int(y * d))
    if d > _NORM_LIMIT:
        return TOO_BIG, None
    num_vals = _gaussian_valuations(a)
    if num_vals is None:
        return TOO_BIG, None
    den_vals: dict[GaussInt, int] = {}
    if d > 1:
        for p, e in factorint(d).items():
            if p == 2:
                den_vals[(1, 1)] = 2 * e
            elif p % 4 == 3:
                den_vals[(p, 0)] = e
            else:
                pi = _prime_above(p)
                den_vals[pi] = e
                den_vals[(pi[0], -pi[1])] = e
    vals: dict[GaussInt, int] = dict(num_vals)
    for pi, e in den_vals.items():
        vals[pi] = vals.get(pi, 0) - e
    if any(e % k for e in vals.values()):
        return NONE, None
    wx, wy = Fraction(1), Fraction(0)
    for pi, e in vals.items():
        px, py = _qi_pow((Fraction(pi[0]), Fraction(pi[1])), e // k)
        wx, wy = wx * px - wy * py, wx * py + wy * px
    # The residue v / w0^k is a unit i^s.
    rx, ry = _qi_pow((wx, wy), k)
    n = rx * rx + ry * ry
    ux, uy = (x * rx + y * ry) / n, (y * rx - x * ry) / n
    for s, unit in enumerate(((1, 0), (0, 1), (-1, 0), (0, -1))):
        if ux == unit[0] and uy == unit[1]:
            return FOUND, (wx, wy, s)
    return NONE, None
