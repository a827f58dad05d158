"""Algebraic scalars: cyclotomic numbers plus at most one formal radical.

An AlgebraicScalar lives in Q(zeta_M)[y]/(y^k - v) for a cyclotomic order M
(a multiple of 8), a radical degree k >= 1 and a nonzero cyclotomic radicand
v (absent when k = 1).  Ring equality on the canonical coefficient vectors is
the primary notion of equality; `decide_zero` supplies a certified numeric
tiebreaker at the element's selected analytic root of y.

A single computation never mixes two distinct radicals: candidate
transformations in the deciders are processed one at a time, so the one-root
policy is enough for every construction the algorithms perform.

Before a radical is adjoined, `kth_roots` runs a simplification pre-check
that recognizes radicands whose k-th roots are themselves cyclotomic
(root-of-unity times rational, Gaussian-rational powers, square roots inside
Q(zeta_8), and small square-free square roots via Gauss sums).  This keeps
the common constructions radical-free and avoids reducible-modulus rings.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import lcm

from sympy import integer_nthroot

from .cyclotomic import CyclotomicScalar, Rational, euler_phi
from .errors import (
    DivisionByZero,
    IncompatibleRadicals,
    NonInvertibleRingElement,
    UndecidedScalar,
    ZeroRadicand,
)
from . import gaussian as gauss_status
from .cyclotomic import _Q as _mpq_ctor
from .gaussian import gaussian_kth_root

_MPQ = type(_mpq_ctor(0))

DEFAULT_MAX_PRECISION = 4096

__all__ = [
    "AlgebraicScalar",
    "Rational",
    "ZeroStatus",
    "field_arithmetic",
    "kth_roots",
    "decide_zero",
    "is_power_of_i",
    "scalar_is_zero",
    "zero",
    "one",
    "i_unit",
    "alpha",
    "sqrt2",
    "rational",
]


class ZeroStatus(Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNDECIDED = "undecided"


class AlgebraicScalar:
    """Element of Q(zeta_M)[y]/(y^k - v) at a selected analytic root of y."""

    __slots__ = ("base_order", "radical_degree", "radical_value", "coeffs", "root_selector")

    def __init__(self, base_order, radical_degree, radical_value, coeffs, root_selector=0):
        if radical_degree < 1:
            raise ValueError("radical degree must be at least 1")
        if radical_degree > 1:
            if radical_value is None or radical_value.is_zero():
                raise ValueError("a proper radical needs a nonzero radicand")
            radical_value = radical_value.promote(base_order)
        else:
            radical_value = None
        coeffs = tuple(c.promote(base_order) for c in coeffs)
        if len(coeffs) != radical_degree:
            raise ValueError("coefficient count must equal the radical degree")
        object.__setattr__(self, "base_order", base_order)
        object.__setattr__(self, "radical_degree", radical_degree)
        object.__setattr__(self, "radical_value", radical_value)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "root_selector", root_selector % radical_degree)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicScalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_cyclotomic(cls, c: CyclotomicScalar) -> "AlgebraicScalar":
        return cls(c.order, 1, None, (c,))

    @classmethod
    def from_rational(cls, q, order: int = 8) -> "AlgebraicScalar":
        return cls.from_cyclotomic(CyclotomicScalar.from_rational(q, order))

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "AlgebraicScalar":
        return cls.from_cyclotomic(CyclotomicScalar.zeta(m, power))

    # -- coercion ----------------------------------------------------------

    def _promote_base(self, order: int) -> "AlgebraicScalar":
        if order == self.base_order:
            return self
        return AlgebraicScalar(
            order,
            self.radical_degree,
            self.radical_value.promote(order) if self.radical_value is not None else None,
            tuple(c.promote(order) for c in self.coeffs),
            self.root_selector,
        )

    def _into_ring_of(self, other: "AlgebraicScalar") -> "AlgebraicScalar":
        # Embed a plain cyclotomic value into other's radical ring.
        pad = (CyclotomicScalar.from_rational(0, other.base_order),) * (other.radical_degree - 1)
        return AlgebraicScalar(
            other.base_order,
            other.radical_degree,
            other.radical_value,
            (self.coeffs[0],) + pad,
            other.root_selector,
        )

    def _collapsed(self) -> "AlgebraicScalar":
        # A tower element with zero radical part is canonically cyclotomic.
        if self.radical_degree > 1 and all(c.is_zero() for c in self.coeffs[1:]):
            return AlgebraicScalar.from_cyclotomic(self.coeffs[0])
        return self

    @staticmethod
    def _pair(a: "AlgebraicScalar", b: "AlgebraicScalar"):
        a = a._collapsed()
        b = b._collapsed()
        order = lcm(a.base_order, b.base_order)
        a = a._promote_base(order)
        b = b._promote_base(order)
        if a.radical_degree == 1 and b.radical_degree == 1:
            return a, b
        if a.radical_degree == 1:
            return a._into_ring_of(b), b
        if b.radical_degree == 1:
            return a, b._into_ring_of(a)
        if (
            a.radical_degree != b.radical_degree
            or a.radical_value != b.radical_value
            or a.root_selector != b.root_selector
        ):
            raise IncompatibleRadicals("operands live in distinct radical extensions")
        return a, b

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(self, other)
        return AlgebraicScalar(
            a.base_order,
            a.radical_degree,
            a.radical_value,
            tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
            a.root_selector,
        )

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(
            self.base_order,
            self.radical_degree,
            self.radical_value,
            tuple(-c for c in self.coeffs),
            self.root_selector,
        )

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # Cyclotomic factors scale the radical coefficients directly.
        if other.is_cyclotomic() and self.radical_degree > 1:
            c = other.coeffs[0]
            order = lcm(self.base_order, c.order)
            return AlgebraicScalar(
                order,
                self.radical_degree,
                self.radical_value.promote(order),
                tuple(x * c for x in self.coeffs),
                self.root_selector,
            )
        if self.is_cyclotomic() and other.radical_degree > 1:
            c = self.coeffs[0]
            order = lcm(other.base_order, c.order)
            return AlgebraicScalar(
                order,
                other.radical_degree,
                other.radical_value.promote(order),
                tuple(x * c for x in other.coeffs),
                other.root_selector,
            )
        a, b = self._pair(self, other)
        k = a.radical_degree
        if k == 1:
            return AlgebraicScalar.from_cyclotomic(a.coeffs[0] * b.coeffs[0])
        zero_c = CyclotomicScalar.from_rational(0, a.base_order)
        raw = [zero_c] * (2 * k - 1)
        for j, x in enumerate(a.coeffs):
            if not x.is_zero():
                for t, y in enumerate(b.coeffs):
                    if not y.is_zero():
                        raw[j + t] = raw[j + t] + x * y
        for j in range(2 * k - 2, k - 1, -1):
            c = raw[j]
            if not c.is_zero():
                raw[j - k] = raw[j - k] + c * a.radical_value
        return AlgebraicScalar(a.base_order, k, a.radical_value, tuple(raw[:k]), a.root_selector)

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicScalar":
        if self.is_zero():
            raise DivisionByZero("inverse of ring zero")
        if self.radical_degree == 1:
            return AlgebraicScalar.from_cyclotomic(self.coeffs[0].inverse())
        k = self.radical_degree
        nonzero = [j for j, c in enumerate(self.coeffs) if not c.is_zero()]
        if len(nonzero) == 1:
            # (c y^j)^(-1) = c^(-1) v^(-1) y^(k-j): monomials invert cheaply.
            j = nonzero[0]
            c_inv = self.coeffs[j].inverse()
            zero_c = CyclotomicScalar.from_rational(0, self.base_order)
            out = [zero_c] * k
            if j == 0:
                out[0] = c_inv
            else:
                out[k - j] = c_inv * self.radical_value.inverse()
            return AlgebraicScalar(
                self.base_order, k, self.radical_value, tuple(out), self.root_selector
            )
        zero_c = CyclotomicScalar.from_rational(0, self.base_order)
        one_c = CyclotomicScalar.from_rational(1, self.base_order)
        modulus = [-self.radical_value] + [zero_c] * (k - 1) + [one_c]
        g, s = _generic_ext_gcd(list(self.coeffs), modulus, zero_c, one_c)
        if len(g) != 1:
            raise NonInvertibleRingElement(
                "element shares a factor with the radical modulus y^k - v"
            )
        c_inv = g[0].inverse()
        inv = [x * c_inv for x in s]
        inv += [zero_c] * (k - len(inv))
        return AlgebraicScalar(self.base_order, k, self.radical_value, tuple(inv[:k]), self.root_selector)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = AlgebraicScalar.from_rational(1, self.base_order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        try:
            a, b = self._pair(self, other)
        except IncompatibleRadicals:
            return False
        return all(x == y for x, y in zip(a.coeffs, b.coeffs))

    __hash__ = None  # values compare across orders; hashing would break the contract

    # -- predicates and views ------------------------------------------------

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_cyclotomic(self) -> bool:
        return self.radical_degree == 1 or all(c.is_zero() for c in self.coeffs[1:])

    def cyclotomic_part(self) -> CyclotomicScalar:
        if not self.is_cyclotomic():
            raise ValueError("element has a nonzero radical part")
        return self.coeffs[0]

    def is_rational(self) -> bool:
        return self.is_cyclotomic() and self.coeffs[0].is_rational()

    def rational_value(self) -> Fraction:
        return self.cyclotomic_part().rational_value()

    def __repr__(self):
        if self.radical_degree == 1:
            return f"AlgebraicScalar({self.coeffs[0]!r})"
        return (
            f"AlgebraicScalar(order={self.base_order}, y^{self.radical_degree}="
            f"{self.radical_value!r}, coeffs={self.coeffs!r}, branch={self.root_selector})"
        )


def _coerce(value):
    if isinstance(value, AlgebraicScalar):
        return value
    if isinstance(value, CyclotomicScalar):
        return AlgebraicScalar.from_cyclotomic(value)
    if isinstance(value, (int, Fraction)) or type(value) is _MPQ:
        return AlgebraicScalar.from_rational(value)
    return NotImplemented


def _generic_ext_gcd(a, b, zero_c, one_c):
    """Polynomial gcd over the cyclotomic coefficient field, with s*a = g mod b."""

    def trim(p):
        while p and p[-1].is_zero():
            p.pop()
        return p

    def pdivmod(num, den):
        num = list(num)
        dn = len(den) - 1
        lead_inv = den[-1].inverse()
        q = [zero_c] * max(len(num) - dn, 0)
        for k in range(len(num) - dn - 1, -1, -1):
            c = num[k + dn] * lead_inv
            if not c.is_zero():
                q[k] = c
                for j, d in enumerate(den):
                    num[k + j] = num[k + j] - c * d
        return q, trim(num)

    def pmul(p, q):
        if not p or not q:
            return []
        out = [zero_c] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            if not x.is_zero():
                for j, y in enumerate(q):
                    out[i + j] = out[i + j] + x * y
        return trim(out)

    def psub(p, q):
        out = list(p) + [zero_c] * (len(q) - len(p))
        for i, x in enumerate(q):
            out[i] = out[i] - x
        return trim(out)

    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [one_c], []
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
    return r0, s0


# -- named constants -------------------------------------------------------


def zero() -> AlgebraicScalar:
    return AlgebraicScalar.from_rational(0)


def one() -> AlgebraicScalar:
    return AlgebraicScalar.from_rational(1)


def i_unit() -> AlgebraicScalar:
    return AlgebraicScalar.zeta(8, 2)


def alpha() -> AlgebraicScalar:
    """The primitive 8th root of unity (1+i)/sqrt(2)."""
    return AlgebraicScalar.zeta(8)


def sqrt2() -> AlgebraicScalar:
    return AlgebraicScalar.zeta(8) - AlgebraicScalar.zeta(8, 3)


def rational(q) -> AlgebraicScalar:
    return AlgebraicScalar.from_rational(q)


def field_arithmetic(a: AlgebraicScalar, b, op: str) -> AlgebraicScalar:
    """Functional form of the ring operations (add/sub/mul/div/neg/inv)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown field operation {op!r}")


# -- order demotion --------------------------------------------------------


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def _embedding_columns(sub_order: int, order: int):
    step = order // sub_order
    cols = []
    for j in range(euler_phi(sub_order)):
        cols.append(CyclotomicScalar._monomial(order, j * step).coeffs)
    return tuple(cols)


def _solve_embedding(sub_order: int, order: int, target):
    # Solve sum_j x_j * embed(zeta_sub^j) = target over Q, or None.
    cols = _embedding_columns(sub_order, order)
    rows = len(target)
    ncols = len(cols)
    aug = [[cols[c][r] for c in range(ncols)] + [target[r]] for r in range(rows)]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((j for j in range(r, rows) if aug[j][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for j in range(rows):
            if j != r and aug[j][c] != 0:
                f = aug[j][c]
                aug[j] = [x - f * y for x, y in zip(aug[j], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    solution = [Fraction(0)] * ncols
    for row_idx, c in enumerate(pivot_cols):
        solution[c] = aug[row_idx][-1]
    for j in range(r, rows):
        if aug[j][-1] != 0:
            return None
    # Verify (columns may not span; the echelon check above covers it, but a
    # direct check is cheap and unconditional).
    for ri in range(rows):
        acc = Fraction(0)
        for c in range(ncols):
            if solution[c]:
                acc += solution[c] * cols[c][ri]
        if acc != target[ri]:
            return None
    return solution


def demote_cyclotomic(c: CyclotomicScalar) -> CyclotomicScalar:
    """Re-express in the smallest subfield Q(zeta_M'), 8 | M' | M."""
    m = c.order
    if m == 8:
        return c
    for sub in _divisors(m):
        if sub % 8 == 0 and sub < m:
            sol = _solve_embedding(sub, m, c.coeffs)
            if sol is not None:
                return CyclotomicScalar(sub, sol)
    return c


# -- radical simplification pre-check --------------------------------------


def _perfect_kth_root(q: Fraction, k: int) -> Fraction | None:
    if q <= 0:
        return None
    rn, okn = integer_nthroot(q.numerator, k)
    if not okn:
        return None
    rd, okd = integer_nthroot(q.denominator, k)
    if not okd:
        return None
    return Fraction(int(rn), int(rd))


def _as_unit_times_rational(v: CyclotomicScalar):
    # v = zeta_M^s * q with q > 0 rational; returns (s, q) or None.
    m = v.order
    zeta_conj = CyclotomicScalar.zeta(m, m - 1)
    w = v
    for s in range(m):
        if w.is_rational():
            q = w.rational_value()
            if q < 0:
                return (s + m // 2) % m, -q
            return s, q
        w = w * zeta_conj
    return None


def _as_gaussian(v: CyclotomicScalar):
    # v = x + y*i exactly; returns (x, y) or None.
    m = v.order
    pos = m // 4
    if pos >= euler_phi(m):
        return None
    for j, c in enumerate(v.coeffs):
        if j not in (0, pos) and c != 0:
            return None
    return v.coeffs[0], v.coeffs[pos]


def _gaussian_value(x: Fraction, y: Fraction, order: int = 8) -> CyclotomicScalar:
    return CyclotomicScalar.from_rational(x, order) + CyclotomicScalar.zeta(8, 2) * y


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CyclotomicScalar:
    if p == 2:
        return CyclotomicScalar.zeta(8) - CyclotomicScalar.zeta(8, 3)
    order = lcm(8, p)
    g = CyclotomicScalar.from_rational(0, order)
    for t in range(1, p):
        legendre = pow(t, (p - 1) // 2, p)
        term = CyclotomicScalar.zeta(p, t).promote(order)
        g = g + term if legendre == 1 else g - term
    if p % 4 == 3:
        g = g * CyclotomicScalar.zeta(8, 6)  # -i
    if g * g != CyclotomicScalar.from_rational(p, order):
        raise AssertionError("Gauss-sum square root failed")
    return g


def _squarefree_split(q: Fraction) -> tuple[int, Fraction] | None:
    # q = d * c^2 with d > 0 square-free; None past the factoring guard.
    from sympy import factorint

    n = q.numerator * q.denominator
    if n > 10**18:
        return None
    d = 1
    c = Fraction(1, q.denominator)
    for p, e in factorint(n).items():
        if e % 2:
            d *= p
        c *= Fraction(p) ** (e // 2)
    return d, c


def _sqrt_in_gaussian(x: Fraction, y: Fraction):
    """(status, root) for a square root inside Q(i)."""
    status, data = gaussian_kth_root(x, y, 2)
    if status != gauss_status.FOUND:
        return status, None
    wx, wy, s = data
    if s == 0:
        return gauss_status.FOUND, (wx, wy)
    if s == 2:
        return gauss_status.FOUND, (-wy, wx)  # i * w
    # An odd unit residue is never a Q(i)-square.
    return gauss_status.NONE, None


def sqrt_in_zeta8(v: CyclotomicScalar):
    """(status, root) for a square root inside Q(zeta_8).

    The ansatz p + q*zeta_8 with p, q in Q(i) covers the whole field, so a
    certified NONE means the modulus y^2 - v is irreducible over Q(zeta_8).
    """
    if v.order != 8:
        return gauss_status.TOO_BIG, None
    c0, c1, c2, c3 = v.coeffs
    u = (c0, c2)
    w = (c1, c3)
    if w == (Fraction(0), Fraction(0)):
        # 2pq = 0: either q = 0 (root in Q(i)) or p = 0 (root = zeta_8 * q).
        st1, root = _sqrt_in_gaussian(*u)
        if st1 == gauss_status.FOUND:
            return st1, _gaussian_value(*root)
        st2, root = _sqrt_in_gaussian(u[1], -u[0])  # -i*u
        if st2 == gauss_status.FOUND:
            return st2, CyclotomicScalar.zeta(8) * _gaussian_value(*root)
        if gauss_status.TOO_BIG in (st1, st2):
            return gauss_status.TOO_BIG, None
        return gauss_status.NONE, None
    # p^2 + i q^2 = u and 2pq = w force (2p^2 - u)^2 = u^2 - i w^2.
    u2 = (u[0] * u[0] - u[1] * u[1], 2 * u[0] * u[1])
    w2 = (w[0] * w[0] - w[1] * w[1], 2 * w[0] * w[1])
    iw2 = (-w2[1], w2[0])
    disc = (u2[0] - iw2[0], u2[1] - iw2[1])
    if disc == (Fraction(0), Fraction(0)):
        delta = (Fraction(0), Fraction(0))
    else:
        st, delta = _sqrt_in_gaussian(*disc)
        if st != gauss_status.FOUND:
            # When a root exists the discriminant is (p^2 - i q^2)^2, a
            # Q(i)-square; a certified non-square certifies no root.
            return st, None
    unknown = False
    for dd in (delta, (-delta[0], -delta[1])):
        z = ((u[0] + dd[0]) / 2, (u[1] + dd[1]) / 2)
        if z == (Fraction(0), Fraction(0)):
            continue
        st, p = _sqrt_in_gaussian(*z)
        if st == gauss_status.TOO_BIG:
            unknown = True
            continue
        if st != gauss_status.FOUND:
            continue
        n = p[0] * p[0] + p[1] * p[1]
        pinv = (p[0] / n, -p[1] / n)
        q = (
            (w[0] * pinv[0] - w[1] * pinv[1]) / 2,
            (w[0] * pinv[1] + w[1] * pinv[0]) / 2,
        )
        candidate = _gaussian_value(*p) + CyclotomicScalar.zeta(8) * _gaussian_value(*q)
        if candidate * candidate == v:
            return gauss_status.FOUND, candidate
    return (gauss_status.TOO_BIG if unknown else gauss_status.NONE), None


def _sqrt_in_zeta8(v: CyclotomicScalar) -> CyclotomicScalar | None:
    status, root = sqrt_in_zeta8(v)
    return root if status == gauss_status.FOUND else None


@lru_cache(maxsize=4096)
def _nice_root_cached(order: int, coeffs, k: int):
    return _nice_root_impl(CyclotomicScalar(order, coeffs), k)


def nice_kth_root(v: CyclotomicScalar, k: int) -> CyclotomicScalar | None:
    """A cyclotomic w with w^k = v, when the pre-check can find one."""
    v = demote_cyclotomic(v)
    return _nice_root_cached(v.order, v.coeffs, k)


def _nice_root_impl(v: CyclotomicScalar, k: int) -> CyclotomicScalar | None:
    if k == 1:
        return v
    m = v.order
    unit_form = _as_unit_times_rational(v)
    if unit_form is not None:
        s, q = unit_form
        exponents = [0] if k % 2 else [0, k // 2, -(k // 2)]
        for e in exponents:
            c = _perfect_kth_root(q / Fraction(2) ** e, k)
            if c is not None:
                w = CyclotomicScalar.zeta(k * m, s) * c
                if e:
                    sq = _sqrt_prime(2)
                    w = w * sq if e > 0 else w * sq * Fraction(1, 2)
                return demote_cyclotomic(w)
    gauss = _as_gaussian(v)
    if gauss is not None:
        status, res = gaussian_kth_root(gauss[0], gauss[1], k)
        if status == gauss_status.FOUND:
            wx, wy, s = res
            w = _gaussian_value(wx, wy) * CyclotomicScalar.zeta(4 * k, s)
            return demote_cyclotomic(w)
    if k % 2 == 0 and m == 8:
        half = _sqrt_in_zeta8(v)
        if half is not None:
            if k == 2:
                return half
            for sign in (half, -half):
                r = nice_kth_root(sign, k // 2)
                if r is not None:
                    return r
    if k == 2 and unit_form is not None:
        s, q = unit_form
        split = _squarefree_split(q)
        if split is not None:
            d, c = split
            if 1 < d <= 30:
                w = CyclotomicScalar.zeta(2 * m, s) * c
                for p, e in _prime_factors(d):
                    w = w * _sqrt_prime(p)
                return demote_cyclotomic(w)
    return None


def _prime_factors(d: int):
    from sympy import factorint

    return sorted(factorint(d).items())


def modulus_irreducible(v: CyclotomicScalar, k: int, base_order: int) -> bool | None:
    """Whether y^k - v is irreducible over Q(zeta_base_order), when decidable.

    Uses the Capelli criterion: for k a power of two, irreducible iff v is
    not a square and (when 4 | k) not in -4 * (fourth powers).  Complete
    square detection is available over Q(zeta_8) only; other bases return
    None (unknown).
    """
    if base_order != 8:
        return None
    return _modulus_irreducible_cached(v.order, v.coeffs, k)


@lru_cache(maxsize=4096)
def _modulus_irreducible_cached(order: int, coeffs, k: int) -> bool | None:
    v = CyclotomicScalar(order, coeffs)
    if k & (k - 1) != 0:
        # An odd prime factor would need certified p-th-power detection.
        return None
    if k == 1:
        return None
    st, _ = sqrt_in_zeta8(v)
    if st == gauss_status.FOUND:
        return False
    if st != gauss_status.NONE:
        return None
    if k == 2:
        return True
    # 4 | k: additionally require v not of the form -4 t^4.
    u = v * Fraction(-1, 4)
    st1, w1 = sqrt_in_zeta8(u)
    if st1 == gauss_status.NONE:
        return True
    if st1 != gauss_status.FOUND:
        return None
    for cand in (w1, -w1):
        st2, _ = sqrt_in_zeta8(cand)
        if st2 == gauss_status.FOUND:
            return False
        if st2 != gauss_status.NONE:
            return None
    return True


# -- roots, zero decision, power-of-i --------------------------------------


def kth_roots(v, k: int) -> list[AlgebraicScalar]:
    """All k analytic k-th roots of a nonzero cyclotomic value.

    Roots come back as plain cyclotomic scalars when the simplification
    pre-check finds one; otherwise as zeta_k^j * y in the formal ring
    Q(zeta_lcm(M,k))[y]/(y^k - v), all at the principal branch of y.
    """
    if isinstance(v, CyclotomicScalar):
        v = AlgebraicScalar.from_cyclotomic(v)
    if not v.is_cyclotomic():
        raise IncompatibleRadicals("k-th roots of a radical-valued radicand")
    if v.is_zero():
        raise ZeroRadicand("k-th roots of zero")
    if k < 1:
        raise ValueError("root degree must be positive")
    base = demote_cyclotomic(v.cyclotomic_part())
    if k == 1:
        return [AlgebraicScalar.from_cyclotomic(base)]
    w = nice_kth_root(base, k)
    if w is not None:
        return [
            AlgebraicScalar.from_cyclotomic(demote_cyclotomic(CyclotomicScalar.zeta(k, j) * w))
            for j in range(k)
        ]
    order = lcm(base.order, k, 8)
    radicand = base.promote(order)
    zero_c = CyclotomicScalar.from_rational(0, order)
    roots = []
    for j in range(k):
        coeffs = [zero_c] * k
        coeffs[1] = CyclotomicScalar.zeta(order, j * (order // k))
        roots.append(AlgebraicScalar(order, k, radicand, tuple(coeffs), 0))
    return roots


def decide_zero(s: AlgebraicScalar, max_precision: int = DEFAULT_MAX_PRECISION) -> ZeroStatus:
    """Sound three-way zero test at the element's selected root.

    Ring-canonical zeros are Zero; certified interval separation gives
    NonZero; everything else is Undecided, never guessed.
    """
    if s.is_zero():
        return ZeroStatus.ZERO
    if s.is_cyclotomic():
        return ZeroStatus.NONZERO
    from . import intervals

    v = s.radical_value
    k = s.radical_degree
    w = nice_kth_root(v, k)
    if w is not None:
        m = intervals.match_principal_branch(v, k, w, max_precision)
        if m is not None:
            y_val = AlgebraicScalar.from_cyclotomic(
                CyclotomicScalar.zeta(k, m + s.root_selector) * w
            )
            total = AlgebraicScalar.from_rational(0)
            for j in range(k - 1, -1, -1):
                total = total * y_val + AlgebraicScalar.from_cyclotomic(s.coeffs[j])
            return ZeroStatus.ZERO if total.is_zero() else ZeroStatus.NONZERO
    elif modulus_irreducible(v, k, s.base_order) is True:
        # The quotient is a field: ring-nonzero is nonzero at every root.
        return ZeroStatus.NONZERO
    precision = 64
    while precision <= max_precision:
        try:
            box = intervals.enclose(s, precision)
            if not box.contains_zero():
                return ZeroStatus.NONZERO
        except intervals.PrecisionLost:
            pass
        precision *= 2
    return ZeroStatus.UNDECIDED


def scalar_is_zero(s: AlgebraicScalar, max_precision: int = DEFAULT_MAX_PRECISION) -> bool:
    """decide_zero collapsed to a bool; raises UndecidedScalar in the gap."""
    status = decide_zero(s, max_precision)
    if status is ZeroStatus.UNDECIDED:
        raise UndecidedScalar("zero test undecided in a radical tower")
    return status is ZeroStatus.ZERO


def is_power_of_i(s: AlgebraicScalar) -> int | None:
    """r in {0,1,2,3} with s = i^r exactly, else None."""
    undecided = False
    power = one()
    for r in range(4):
        status = decide_zero(s - power)
        if status is ZeroStatus.ZERO:
            return r
        if status is ZeroStatus.UNDECIDED:
            undecided = True
        power = power * i_unit()
    if undecided:
        raise UndecidedScalar("power-of-i test undecided in a radical tower")
    return None
