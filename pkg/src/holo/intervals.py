"""Certified complex-rectangle enclosures for algebraic scalars.

Rectangles are pairs of real intervals with binary (dyadic) endpoints,
computed with outward rounding at a requested working precision.  They are
the numeric fallback behind exact ring tests: an enclosure that excludes
zero certifies a value nonzero at its selected radical branch.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from mpmath import iv

from .errors import HoloError


class PrecisionLost(HoloError):
    """The working precision could not separate a needed sign; escalate."""


class ComplexInterval:
    """A closed rectangle [re] + [im]*i certified to contain a value."""

    __slots__ = ("re", "im", "precision")

    def __init__(self, re, im, precision: int):
        self.re = re
        self.im = im
        self.precision = precision

    def contains_zero(self) -> bool:
        return 0 in self.re and 0 in self.im

    def intersects(self, other: "ComplexInterval") -> bool:
        return not (
            self.re.b < other.re.a
            or other.re.b < self.re.a
            or self.im.b < other.im.a
            or other.im.b < self.im.a
        )

    @property
    def real_midpoint(self) -> Fraction:
        lo, hi = _interval_fractions(self.re)
        return (lo + hi) / 2

    @property
    def imag_midpoint(self) -> Fraction:
        lo, hi = _interval_fractions(self.im)
        return (lo + hi) / 2

    @property
    def real_radius(self) -> Fraction:
        lo, hi = _interval_fractions(self.re)
        return (hi - lo) / 2

    @property
    def imag_radius(self) -> Fraction:
        lo, hi = _interval_fractions(self.im)
        return (hi - lo) / 2

    def __repr__(self):
        return f"ComplexInterval(re={self.re}, im={self.im}, bits={self.precision})"


def _mpf_tuple_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    if not man:
        return Fraction(0)
    value = Fraction(man if sign == 0 else -man)
    return value * Fraction(2) ** exp


def _interval_fractions(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return _mpf_tuple_to_fraction(lo), _mpf_tuple_to_fraction(hi)


class _Workprec:
    def __init__(self, prec: int):
        self.prec = prec

    def __enter__(self):
        self.saved = iv.prec
        iv.prec = self.prec

    def __exit__(self, *exc):
        iv.prec = self.saved


def _frac(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


@lru_cache(maxsize=64)
def _zeta_boxes(order: int, phi: int, precision: int):
    # Rectangles for zeta_order^j, j < phi, at the given precision.
    with _Workprec(precision):
        two_pi = 2 * iv.pi
        out = []
        for j in range(phi):
            ang = two_pi * j / order
            out.append((iv.cos(ang), iv.sin(ang)))
        return tuple(out)


def _mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def enclose_cyclotomic(value, precision: int) -> ComplexInterval:
    """Certified rectangle for a CyclotomicScalar."""
    from .cyclotomic import euler_phi

    with _Workprec(precision):
        boxes = _zeta_boxes(value.order, euler_phi(value.order), precision)
        re = iv.mpf(0)
        im = iv.mpf(0)
        for j, c in enumerate(value.coeffs):
            if c:
                q = _frac(c)
                re += q * boxes[j][0]
                im += q * boxes[j][1]
        return ComplexInterval(re, im, precision)


def _principal_root_box(radicand, k: int, precision: int):
    """Rectangle for the principal k-th root of a nonzero cyclotomic value.

    The principal branch takes arg in (-pi, pi].  Raises PrecisionLost when
    the precision cannot pin the quadrant data it needs.
    """
    im_exact_zero = radicand.imag_part_times_i().is_zero()
    re_exact_zero = radicand.real_part().is_zero()
    box = enclose_cyclotomic(radicand, precision)
    with _Workprec(precision):
        if im_exact_zero:
            if box.re.a > 0:
                theta = iv.mpf(0)
            elif box.re.b < 0:
                theta = +iv.pi
            else:
                raise PrecisionLost("sign of a real radicand undetermined")
        elif re_exact_zero:
            if box.im.a > 0:
                theta = +iv.pi / 2
            elif box.im.b < 0:
                theta = -iv.pi / 2
            else:
                raise PrecisionLost("sign of an imaginary radicand undetermined")
        else:
            if 0 in box.im and 0 in box.re:
                raise PrecisionLost("radicand quadrant undetermined")
            if 0 in box.im and box.re.b < 0:
                # Straddling the branch cut; only exact negative reals take
                # arg = pi, and those were handled above.
                raise PrecisionLost("imaginary sign undetermined near the cut")
            theta = iv.atan2(box.im, box.re)
        magnitude = iv.exp(iv.log(box.re * box.re + box.im * box.im) / (2 * k))
        ang = theta / k
        return magnitude * iv.cos(ang), magnitude * iv.sin(ang)


def enclose(scalar, precision: int) -> ComplexInterval:
    """Certified rectangle for an AlgebraicScalar at its selected branch."""
    if scalar.radical_degree == 1:
        return enclose_cyclotomic(scalar.coeffs[0], precision)
    with _Workprec(precision):
        y = _principal_root_box(scalar.radical_value, scalar.radical_degree, precision)
        if scalar.root_selector:
            two_pi = 2 * iv.pi
            ang = two_pi * scalar.root_selector / scalar.radical_degree
            y = _mul(y, (iv.cos(ang), iv.sin(ang)))
        cboxes = [enclose_cyclotomic(c, precision) for c in scalar.coeffs]
        acc = (cboxes[-1].re, cboxes[-1].im)
        for j in range(len(cboxes) - 2, -1, -1):
            acc = _add(_mul(acc, y), (cboxes[j].re, cboxes[j].im))
        return ComplexInterval(acc[0], acc[1], precision)


def match_principal_branch(radicand, k: int, root, max_precision: int) -> int | None:
    """Find m with principal (radicand)^(1/k) = zeta_k^m * root.

    `root` is an exact cyclotomic k-th root of `radicand`.  Returns None only
    if max_precision is exhausted before the branches separate.
    """
    from .cyclotomic import CyclotomicScalar

    precision = 64
    while precision <= max_precision:
        try:
            with _Workprec(precision):
                p = _principal_root_box(radicand, k, precision)
                principal = ComplexInterval(p[0], p[1], precision)
            matches = []
            for m in range(k):
                candidate = CyclotomicScalar.zeta(k, m) * root
                if enclose_cyclotomic(candidate, precision).intersects(principal):
                    matches.append(m)
            if len(matches) == 1:
                return matches[0]
        except PrecisionLost:
            pass
        precision *= 2
    return None
