"""Signature data model: dense and symmetric forms, transforms, matrices.

A dense signature of arity n stores all 2^n values indexed by bitstrings
x_1...x_n in lexicographic order with x_1 the most significant bit.  A
symmetric signature stores the n+1 values by Hamming weight.  Transforms are
2x2 matrices acting as T^{tensor n} on column-vector signatures.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import WrongArity
from .scalars import AlgebraicScalar, alpha, i_unit, one, rational, sqrt2, zero

DEFAULT_MAX_ARITY = 12


class Transform:
    """An invertible 2x2 matrix of algebraic scalars."""

    __slots__ = ("rows",)

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "rows", ((_s(a), _s(b)), (_s(c), _s(d))))

    def __setattr__(self, name, value):
        raise AttributeError("Transform is immutable")

    def __getitem__(self, idx):
        return self.rows[idx]

    def entries(self):
        return (self.rows[0][0], self.rows[0][1], self.rows[1][0], self.rows[1][1])

    def det(self) -> AlgebraicScalar:
        return self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]

    def transpose(self) -> "Transform":
        return Transform(self.rows[0][0], self.rows[1][0], self.rows[0][1], self.rows[1][1])

    def inverse(self) -> "Transform":
        d = self.det()
        inv = d.inverse()
        return Transform(
            self.rows[1][1] * inv,
            -self.rows[0][1] * inv,
            -self.rows[1][0] * inv,
            self.rows[0][0] * inv,
        )

    def __matmul__(self, other: "Transform") -> "Transform":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Transform(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __mul__(self, scalar) -> "Transform":
        s = _s(scalar)
        return Transform(*(x * s for x in self.entries()))

    def __eq__(self, other):
        if not isinstance(other, Transform):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def is_orthogonal(self) -> bool:
        a, b, c, d = self.entries()
        return (
            a * a + b * b == one()
            and c * c + d * d == one()
            and (a * c + b * d).is_zero()
        )

    def apply_vector(self, v):
        return (
            self.rows[0][0] * v[0] + self.rows[0][1] * v[1],
            self.rows[1][0] * v[0] + self.rows[1][1] * v[1],
        )

    def __repr__(self):
        return f"Transform({self.entries()!r})"


def _s(x) -> AlgebraicScalar:
    if isinstance(x, AlgebraicScalar):
        return x
    return rational(Fraction(x))


def identity() -> Transform:
    return Transform(1, 0, 0, 1)


def diag_i() -> Transform:
    """D = [[1,0],[0,i]]."""
    return Transform(one(), zero(), zero(), i_unit())


def hadamard() -> Transform:
    """H_2 = (1/sqrt 2) [[1,1],[1,-1]]."""
    h = sqrt2() * Fraction(1, 2)
    return Transform(h, h, h, -h)

def swap_x() -> Transform:
    return Transform(0, 1, 1, 0)


def z_basis() -> Transform:
    """Z = (1/sqrt 2) [[1,1],[i,-i]]."""
    h = sqrt2() * Fraction(1, 2)
    return Transform(h, h, i_unit() * h, -(i_unit() * h))


def z_basis_unnormalized() -> Transform:
    return Transform(one(), one(), i_unit(), -i_unit())


def z_prime() -> Transform:
    """Z' = [[1,i],[1,-i]]; the hat transform is Z'^{tensor n}."""
    return Transform(one(), i_unit(), one(), -i_unit())


def diag_alpha() -> Transform:
    return Transform(one(), zero(), zero(), alpha())


def rational_so2(t) -> Transform:
    """Rational special-orthogonal matrix from the circle parametrization."""
    t = Fraction(t)
    den = 1 + t * t
    a = rational((1 - t * t) / den)
    b = rational(2 * t / den)
    return Transform(a, b, -b, a)


class DenseSignature:
    """All 2^n values of an n-ary Boolean-domain function."""

    __slots__ = ("arity", "entries")

    def __init__(self, arity: int, entries, max_arity: int | None = DEFAULT_MAX_ARITY):
        if arity < 1:
            raise WrongArity("signature arity must be at least 1")
        if max_arity is not None and arity > max_arity:
            raise WrongArity(f"arity {arity} exceeds the dense limit {max_arity}")
        entries = tuple(_s(e) for e in entries)
        if len(entries) != 1 << arity:
            raise WrongArity("dense signature needs 2^arity entries")
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DenseSignature is immutable")

    def __getitem__(self, x: int) -> AlgebraicScalar:
        return self.entries[x]

    def __eq__(self, other):
        if not isinstance(other, DenseSignature):
            return NotImplemented
        return self.arity == other.arity and all(
            x == y for x, y in zip(self.entries, other.entries)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def support(self) -> list[int]:
        return [x for x, e in enumerate(self.entries) if not e.is_zero()]

    def scale(self, c) -> "DenseSignature":
        s = _s(c)
        return DenseSignature(self.arity, tuple(e * s for e in self.entries), max_arity=None)

    def __repr__(self):
        return f"DenseSignature(arity={self.arity})"


class SymmetricSignature:
    """The n+1 values of a symmetric n-ary function, by Hamming weight."""

    __slots__ = ("arity", "values")

    def __init__(self, values):
        values = tuple(_s(v) for v in values)
        if len(values) < 2:
            raise WrongArity("symmetric signature needs arity at least 1")
        object.__setattr__(self, "arity", len(values) - 1)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricSignature is immutable")

    def __getitem__(self, w: int) -> AlgebraicScalar:
        return self.values[w]

    def __eq__(self, other):
        if not isinstance(other, SymmetricSignature):
            return NotImplemented
        return self.arity == other.arity and all(
            x == y for x, y in zip(self.values, other.values)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def scale(self, c) -> "SymmetricSignature":
        s = _s(c)
        return SymmetricSignature(tuple(v * s for v in self.values))

    def __repr__(self):
        return f"SymmetricSignature(arity={self.arity})"


class SignatureSet:
    """An ordered, named collection of signatures for the set-level deciders."""

    __slots__ = ("members",)

    def __init__(self, members):
        out = []
        for idx, m in enumerate(members):
            if isinstance(m, tuple):
                out.append((m[0], m[1]))
            else:
                out.append((f"sig{idx}", m))
        object.__setattr__(self, "members", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("SignatureSet is immutable")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def expand(f: SymmetricSignature) -> DenseSignature:
    """Dense form: the entry at x is the value at Hamming weight w(x)."""
    n = f.arity
    return DenseSignature(
        n, tuple(f.values[bin(x).count("1")] for x in range(1 << n)), max_arity=None
    )


def compress(f: DenseSignature) -> SymmetricSignature | None:
    """Symmetric form iff all equal-weight entries agree exactly."""
    n = f.arity
    values = [None] * (n + 1)
    for x, e in enumerate(f.entries):
        w = bin(x).count("1")
        if values[w] is None:
            values[w] = e
        elif not (values[w] == e):
            return None
    return SymmetricSignature(values)


def apply_transform(t: Transform, f: DenseSignature) -> DenseSignature:
    """g = T^{tensor n} f, contracted one variable axis at a time."""
    n = f.arity
    entries = list(f.entries)
    (t00, t01), (t10, t11) = t.rows
    for axis in range(n):
        bit = 1 << (n - 1 - axis)
        out = list(entries)
        for x in range(1 << n):
            if not x & bit:
                lo = entries[x]
                hi = entries[x | bit]
                out[x] = t00 * lo + t01 * hi
                out[x | bit] = t10 * lo + t11 * hi
        entries = out
    return DenseSignature(n, entries, max_arity=None)


def hat_transform(f: DenseSignature) -> DenseSignature:
    """f-hat = Z'^{tensor n} f; entry u is the pairing <v_u, f>."""
    return apply_transform(z_prime(), f)


def symmetric_apply_transform(t: Transform, f: SymmetricSignature) -> SymmetricSignature:
    """T^{tensor n} f on the succinct form, via binary-form substitution."""
    n = f.arity
    (t00, t01), (t10, t11) = t.rows
    # Coefficient vector of the binary form sum_w C(n,w) f_w x^(n-w) y^w under
    # x -> t00 x + t10 y, y -> t01 x + t11 y, read back with the binomials.
    out = [zero() for _ in range(n + 1)]
    xpow = [one()]
    for _ in range(n):
        xpow.append(zero())
    for w in range(n + 1):
        # (t00 x + t10 y)^(n-w) (t01 x + t11 y)^w, coefficient of x^(n-j) y^j
        coeff = f.values[w]
        if coeff.is_zero():
            continue
        poly = _binary_power(t00, t10, n - w)
        poly = _poly_mul(poly, _binary_power(t01, t11, w))
        scale = coeff * comb(n, w)
        for j in range(n + 1):
            out[j] = out[j] + scale * poly[j]
    return SymmetricSignature(tuple(out[j] * Fraction(1, comb(n, j)) for j in range(n + 1)))


def _binary_power(cx, cy, e: int):
    # Coefficients of (cx * x + cy * y)^e on x^(e-j) y^j.
    out = []
    for j in range(e + 1):
        out.append(cx ** (e - j) * cy**j * comb(e, j))
    return out


def _poly_mul(p, q):
    out = [zero() for _ in range(len(p) + len(q) - 1)]
    for i, x in enumerate(p):
        if not x.is_zero():
            for j, y in enumerate(q):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
    return out


def signature_matrix(f: DenseSignature):
    """4x4 matrix of an arity-4 signature: rows (x1,x2), columns (x4,x3)."""
    if f.arity != 4:
        raise WrongArity("signature matrix needs arity 4")
    rows = []
    for r in range(4):
        x1, x2 = r >> 1, r & 1
        row = []
        for c in range(4):
            x4, x3 = c >> 1, c & 1
            row.append(f.entries[(x1 << 3) | (x2 << 2) | (x3 << 1) | x4])
        rows.append(tuple(row))
    return tuple(rows)


def dense_from_signature_matrix(matrix) -> DenseSignature:
    """Inverse of signature_matrix, for fixtures given in matrix form."""
    entries = [zero()] * 16
    for r in range(4):
        x1, x2 = r >> 1, r & 1
        for c in range(4):
            x4, x3 = c >> 1, c & 1
            entries[(x1 << 3) | (x2 << 2) | (x3 << 1) | x4] = _s(matrix[r][c])
    return DenseSignature(4, entries)


def is_degenerate(f: DenseSignature):
    """The unary tensor factors of f, or None if f is not a simple tensor."""
    from .product import factor

    if f.is_zero():
        return None
    factorization = factor(f)
    if all(g.arity == 1 for _, g in factorization.blocks):
        return [g for _, g in factorization.blocks]
    return None


def tensor_product(f: DenseSignature, g: DenseSignature) -> DenseSignature:
    """f tensor g on the concatenated variable list."""
    n, m = f.arity, g.arity
    entries = []
    for x in range(1 << (n + m)):
        entries.append(f.entries[x >> m] * g.entries[x & ((1 << m) - 1)])
    return DenseSignature(n + m, entries, max_arity=None)
