"""Exact arithmetic in cyclotomic fields Q(zeta_M).

Elements are polynomials in zeta_M = e^(2*pi*i/M) with rational coefficients,
kept fully reduced modulo the M-th cyclotomic polynomial Phi_M.  Phi_M is the
minimal polynomial of zeta_M, so the quotient is a field and the reduced
coefficient vector is a canonical form: two elements are equal iff their
vectors are equal.

Orders are normalized to multiples of 8 so that i, the primitive 8th root of
unity and sqrt(2) are always representable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

try:  # pragma: no cover - gmpy2 is an optional speedup
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Rational = Fraction

_ZERO = _Q(0)
_ONE = _Q(1)
_QTYPE = type(_ZERO)


def _to_q(value):
    if type(value) is _QTYPE:
        return value
    try:
        return _Q(value)
    except (TypeError, SystemError):
        # e.g. a Fraction whose internals are gmpy2 integers
        return _Q(int(value.numerator), int(value.denominator))


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    """Euler's totient of m."""
    if m < 1:
        raise ValueError("totient needs a positive argument")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Long division of integer polynomials; den must be monic.
    num = list(num)
    dn = len(den) - 1
    q = [0] * max(len(num) - dn, 0)
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn]
        if c:
            q[k] = c
            for j, d in enumerate(den):
                num[k + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, low degree first, monic of degree phi(m)."""
    if m < 1:
        raise ValueError("cyclotomic polynomial needs a positive order")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _int_poly_divmod(poly, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError("x^m - 1 not divisible by Phi_d")
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    # Row j holds the coefficients of x^(phi+j) reduced mod Phi_m,
    # for j = 0 .. phi-2 (a product of two reduced elements has degree
    # at most 2*phi - 2).
    phi = euler_phi(m)
    mod = cyclotomic_polynomial(m)
    rows: list[tuple[int, ...]] = []
    current = [-c for c in mod[:phi]]  # x^phi mod Phi_m
    rows.append(tuple(current))
    for _ in range(phi - 2):
        shifted = [0] + current[:-1]
        top = current[-1]
        if top:
            shifted = [s - top * c for s, c in zip(shifted, mod[:phi])]
        current = shifted
        rows.append(tuple(current))
    return tuple(rows)


class CyclotomicScalar:
    """An element of Q(zeta_order), order a multiple of 8."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order % 8 != 0:
            raise ValueError("cyclotomic order must be a multiple of 8")
        coeffs = tuple(_to_q(c) for c in coeffs)
        if len(coeffs) != euler_phi(order):
            raise ValueError("coefficient vector length must be phi(order)")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicScalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value, order: int = 8) -> "CyclotomicScalar":
        phi = euler_phi(order)
        return cls(order, (_to_q(value),) + (_ZERO,) * (phi - 1))

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CyclotomicScalar":
        """zeta_m^power, represented in Q(zeta_lcm(m,8))."""
        order = lcm(m, 8)
        exponent = (power * (order // m)) % order
        return cls._monomial(order, exponent)

    @classmethod
    def _monomial(cls, order: int, exponent: int) -> "CyclotomicScalar":
        exponent %= order
        phi = euler_phi(order)
        raw = [_ZERO] * (exponent + 1)
        raw[exponent] = _ONE
        return cls(order, _reduce(raw, order, phi))

    # -- ring structure ----------------------------------------------------

    def promote(self, order: int) -> "CyclotomicScalar":
        """Embed into Q(zeta_order); self.order must divide order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError("can only promote to a multiple of the order")
        step = order // self.order
        phi = euler_phi(order)
        raw = [_ZERO] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            if c:
                raw[j * step] = c
        return CyclotomicScalar(order, _reduce(raw, order, phi))

    def _pair(self, other: "CyclotomicScalar"):
        order = lcm(self.order, other.order)
        return self.promote(order), other.promote(order)

    def __add__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        return CyclotomicScalar(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        # Rational factors scale coefficientwise; no promotion needed.
        if other.is_rational():
            q = other.coeffs[0]
            if q == 1:
                return self
            return CyclotomicScalar(self.order, tuple(c * q for c in self.coeffs))
        if self.is_rational():
            q = self.coeffs[0]
            if q == 1:
                return other
            return CyclotomicScalar(other.order, tuple(c * q for c in other.coeffs))
        a, b = self._pair(other)
        phi = euler_phi(a.order)
        raw = [_ZERO] * (2 * phi - 1)
        for j, x in enumerate(a.coeffs):
            if x:
                for k, y in enumerate(b.coeffs):
                    if y:
                        raw[j + k] += x * y
        return CyclotomicScalar(a.order, _reduce(raw, a.order, phi))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        mod = [_Q(c) for c in cyclotomic_polynomial(self.order)]
        g, s = _poly_ext_gcd(list(self.coeffs), mod)
        # Phi is irreducible over Q, so the gcd is a nonzero constant.
        c = g[0]
        phi = euler_phi(self.order)
        inv = [x / c for x in s]
        return CyclotomicScalar(self.order, _reduce(inv, self.order, phi))

    def __truediv__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicScalar.from_rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equal values can live at different orders; compare, don't hash

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.coeffs[0])

    def conjugate(self) -> "CyclotomicScalar":
        """Complex conjugate (the Galois map zeta -> zeta^(M-1))."""
        phi = euler_phi(self.order)
        raw = [_ZERO] * self.order
        for j, c in enumerate(self.coeffs):
            if c:
                raw[(j * (self.order - 1)) % self.order] += c
        return CyclotomicScalar(self.order, _reduce(raw, self.order, phi))

    def real_part(self) -> "CyclotomicScalar":
        return (self + self.conjugate()) * _Q(1, 2)

    def imag_part_times_i(self) -> "CyclotomicScalar":
        """Returns i*Im(self) = (self - conj(self))/2, still cyclotomic."""
        return (self - self.conjugate()) * _Q(1, 2)

    def __repr__(self):
        return f"CyclotomicScalar(order={self.order}, coeffs={self.coeffs})"


def _coerce(value, order: int):
    if isinstance(value, CyclotomicScalar):
        return value
    if isinstance(value, (int, Fraction)) or type(value) is type(_ZERO):
        return CyclotomicScalar.from_rational(value, order)
    return NotImplemented


def _reduce(raw, order: int, phi: int) -> tuple[Fraction, ...]:
    # Reduce a coefficient list modulo Phi_order.
    raw = list(raw)
    if len(raw) > 2 * phi - 1:
        # Arbitrary degree: long division by the monic Phi.
        mod = cyclotomic_polynomial(order)
        for k in range(len(raw) - phi - 1, -1, -1):
            c = raw[k + phi]
            if c:
                raw[k + phi] = _ZERO
                for j in range(phi):
                    if mod[j]:
                        raw[k + j] -= c * mod[j]
        del raw[phi:]
        return tuple(raw + [_ZERO] * (phi - len(raw)))
    out = list(raw[:phi]) + [_ZERO] * (phi - min(len(raw), phi))
    if len(raw) > phi:
        rows = _reduction_rows(order)
        for j, c in enumerate(raw[phi:]):
            if c:
                row = rows[j]
                for t in range(phi):
                    if row[t]:
                        out[t] += c * row[t]
    return tuple(out)


def _poly_ext_gcd(a: list[Fraction], b: list[Fraction]):
    """gcd(a, b) together with s such that s*a = gcd (mod b)."""

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def pdivmod(num, den):
        num = list(num)
        dn = len(den) - 1
        lead = den[-1]
        q = [_ZERO] * max(len(num) - dn, 0)
        for k in range(len(num) - dn - 1, -1, -1):
            c = num[k + dn] / lead
            if c:
                q[k] = c
                for j, d in enumerate(den):
                    num[k + j] -= c * d
        return q, trim(num)

    def pmul(p, q):
        if not p or not q:
            return []
        out = [_ZERO] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            if x:
                for j, y in enumerate(q):
                    out[i + j] += x * y
        return trim(out)

    def psub(p, q):
        out = [_ZERO] * max(len(p), len(q))
        for i, x in enumerate(p):
            out[i] += x
        for i, x in enumerate(q):
            out[i] -= x
        return trim(out)

    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [_ONE], []
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
    return r0, s0
