"""Succinct-form classifiers and set deciders for symmetric signatures.

A non-degenerate symmetric signature of arity at least 3 that satisfies a
second-order recurrence with nonzero discriminant splits as a weighted sum
of two tensor powers, f = x0 * u0^n + x1 * u1^n.  The squared-cotangent
invariant of the pair (u0, u1) is orthogonal-invariant and separates the
five classes the set deciders need: value 0 for the plus/minus family, -1
for the conjugate-pair family, -1/2 for the alpha-twisted family.

Weights are kept separate from the vectors (instead of folding n-th roots
into them), so every classifier condition is restated multiplicatively and
stays radical-free whenever the input is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .decision import HYPOTHESIS_NOT_MET, NO, UNDECIDED, YES, Decision
from .errors import (
    ArityTooSmall,
    Degenerate,
    NonUniqueRecurrence,
    ThetaNonZero,
    UndecidedScalar,
)
from .scalars import (
    AlgebraicScalar,
    alpha,
    i_unit,
    is_power_of_i,
    kth_roots,
    one,
    rational,
    scalar_is_zero,
    sqrt2,
    zero,
)
from .signatures import (
    SignatureSet,
    SymmetricSignature,
    Transform,
    identity,
    symmetric_apply_transform,
)


def _cyclo_or_undecided(s: AlgebraicScalar):
    if not s.is_cyclotomic():
        raise UndecidedScalar("value left the cyclotomic layer")
    return s.cyclotomic_part()


def _root_sort_key(lam: AlgebraicScalar):
    """Deterministic ordering of characteristic roots.

    Cyclotomic roots sort by their coefficient vector at a common order;
    radical-valued roots keep the (+, -) branch order of the square root.
    """
    from .scalars import demote_cyclotomic

    if not lam.is_cyclotomic():
        return (1,)
    c = demote_cyclotomic(lam.cyclotomic_part())
    return (0, -c.order) + tuple(Fraction(x) for x in c.coeffs)


@dataclass
class SecondOrderRecurrence:
    """Coefficients (a, b, c) with a*f_k + b*f_(k+1) + c*f_(k+2) = 0."""

    a: AlgebraicScalar
    b: AlgebraicScalar
    c: AlgebraicScalar

    def discriminant(self) -> AlgebraicScalar:
        return self.b * self.b - rational(4) * self.a * self.c


@dataclass
class WeightedDecomposition:
    """f = x0 * u0^(tensor n) + x1 * u1^(tensor n), u0 and u1 independent."""

    arity: int
    x0: AlgebraicScalar
    x1: AlgebraicScalar
    u0: tuple[AlgebraicScalar, AlgebraicScalar]
    u1: tuple[AlgebraicScalar, AlgebraicScalar]

    def weight_value(self, w: int) -> AlgebraicScalar:
        n = self.arity
        return (
            self.x0 * self.u0[0] ** (n - w) * self.u0[1] ** w
            + self.x1 * self.u1[0] ** (n - w) * self.u1[1] ** w
        )


@dataclass
class ClassWitness:
    """Class label with a transformation mapping f to the canonical form.

    `to_canonical` is the orthogonal U with U applied to f proportional to
    the canonical class form; the definition-style matrix (with f equal to a
    scalar times H applied to the canonical form) is its transpose.
    """

    label: str
    to_canonical: Transform | None
    theta: AlgebraicScalar | None
    params: dict

    @property
    def h(self) -> Transform | None:
        return None if self.to_canonical is None else self.to_canonical.transpose()


def symmetric_is_degenerate(f: SymmetricSignature) -> bool:
    """Rank of the 2 x n weight matrix is at most 1."""
    n = f.arity
    for i in range(n):
        for j in range(i + 1, n):
            minor = f[i] * f[j + 1] - f[i + 1] * f[j]
            if not scalar_is_zero(minor):
                return False
    return True


def degenerate_direction(f: SymmetricSignature):
    """(scale, u) with f = scale * u^(tensor n) for degenerate nonzero f."""
    n = f.arity
    first = next((w for w in range(n + 1) if not scalar_is_zero(f[w])), None)
    if first is None:
        return None
    last = max(w for w in range(n + 1) if not scalar_is_zero(f[w]))
    if first == 0:
        if last == 0:
            return f[0], (one(), zero())
        # u = (1, t) with t = f_1 / f_0
        t = f[1] / f[0]
        return f[0], (one(), t)
    if first == n:
        return f[n], (zero(), one())
    return None  # support gap: not a tensor power


def fit_recurrence(f: SymmetricSignature) -> SecondOrderRecurrence | None:
    """The unique second-order recurrence, None if only the trivial solution.

    Raises NonUniqueRecurrence when the kernel has dimension two or more
    (degenerate inputs).
    """
    n = f.arity
    if n < 2:
        raise ArityTooSmall("recurrence fitting needs arity at least 2")
    rows = [[f[k], f[k + 1], f[k + 2]] for k in range(n - 1)]
    # Exact Gaussian elimination on the 3-column homogeneous system.
    pivots = []
    r = 0
    cols = 3
    for c in range(cols):
        pivot_row = None
        for j in range(r, len(rows)):
            if not scalar_is_zero(rows[j][c]):
                pivot_row = j
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for j in range(len(rows)):
            if j != r and not scalar_is_zero(rows[j][c]):
                factor = rows[j][c]
                rows[j] = [x - factor * y for x, y in zip(rows[j], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    kernel_dim = cols - len(pivots)
    if kernel_dim == 0:
        return None
    if kernel_dim >= 2:
        raise NonUniqueRecurrence("recurrence kernel has dimension >= 2")
    free = next(c for c in range(cols) if c not in pivots)
    solution = [zero(), zero(), zero()]
    solution[free] = one()
    for row_idx, c in enumerate(pivots):
        solution[c] = -rows[row_idx][free]
    # normalize: first nonzero coefficient is 1
    lead = next(s for s in solution if not scalar_is_zero(s))
    inv = lead.inverse()
    a, b, c = (s * inv for s in solution)
    return SecondOrderRecurrence(a, b, c)


def decompose(f: SymmetricSignature) -> WeightedDecomposition | None:
    """Weighted two-tensor-power decomposition, None when it does not exist.

    Requires arity >= 3 and a non-degenerate input; the characteristic roots
    are taken projectively so a vanishing leading coefficient lands on the
    direction (0, 1).
    """
    n = f.arity
    if n < 3:
        raise ArityTooSmall("decomposition needs arity at least 3")
    if symmetric_is_degenerate(f):
        raise Degenerate("decomposition needs a non-degenerate signature")
    rec = fit_recurrence(f)
    if rec is None:
        return None
    disc = rec.discriminant()
    if scalar_is_zero(disc):
        return None
    a, b, c = rec.a, rec.b, rec.c
    if c.is_zero():
        # c L^2 + b L M + a M^2 = M (b L + a M): roots (1:0) and (-a : b).
        roots = [(-a, b), (one(), zero())]  # root at infinity last
    else:
        sq = kth_roots(_cyclo_or_undecided(disc), 2)[0]
        inv2c = (rational(2) * c).inverse()
        lam = [(-b + sq) * inv2c, (-b - sq) * inv2c]
        lam.sort(key=_root_sort_key, reverse=True)
        roots = [(lam[0], one()), (lam[1], one())]
    u0 = (roots[0][1], roots[0][0])
    u1 = (roots[1][1], roots[1][0])
    # Solve for the weights from two rows with an invertible 2x2 system.
    pairs = [(0, 1), (n - 1, n)] + [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    for w1, w2 in pairs:
        m00 = u0[0] ** (n - w1) * u0[1] ** w1
        m01 = u1[0] ** (n - w1) * u1[1] ** w1
        m10 = u0[0] ** (n - w2) * u0[1] ** w2
        m11 = u1[0] ** (n - w2) * u1[1] ** w2
        det = m00 * m11 - m01 * m10
        if scalar_is_zero(det):
            continue
        det_inv = det.inverse()
        x0 = (f[w1] * m11 - f[w2] * m01) * det_inv
        x1 = (f[w2] * m00 - f[w1] * m10) * det_inv
        if scalar_is_zero(x0) or scalar_is_zero(x1):
            return None
        d = WeightedDecomposition(n, x0, x1, u0, u1)
        for w in range(n + 1):
            if not scalar_is_zero(d.weight_value(w) - f[w]):
                return None
        return d
    return None


def theta(d: WeightedDecomposition) -> AlgebraicScalar:
    """((u0 . u1) / det(u0, u1))^2; weight- and scale-independent."""
    dot = d.u0[0] * d.u1[0] + d.u0[1] * d.u1[1]
    det = d.u1[0] * d.u0[1] - d.u0[0] * d.u1[1]
    ratio = dot * det.inverse()
    return ratio * ratio


def construct_H_theta0(d: WeightedDecomposition) -> tuple[Transform, AlgebraicScalar]:
    """Orthogonal U with U applied to f = scale * ((1,1)^n + beta (1,-1)^n).

    Requires theta(d) = 0; beta is the weighted k-power ratio.  May adjoin
    one square-root radical for the column normalization.
    """
    a0, b0 = d.u0
    a1, b1 = d.u1
    if not scalar_is_zero(a0 * a1 + b0 * b1):
        raise ThetaNonZero("construction needs theta = 0")
    # a1 = k b0 and b1 = -k a0 for a nonzero k.
    if not scalar_is_zero(b0):
        k = a1 * b0.inverse()
    else:
        k = -(b1 * a0.inverse())
    c = a0 * a0 + b0 * b0
    sqrt_c = kth_roots(_cyclo_or_undecided(c), 2)[0]
    inv = (sqrt_c).inverse()
    kinv = (k * sqrt_c).inverse()
    # M = [u0 / sqrt(c), u1 / (k sqrt(c))] is orthogonal; U = H2 M^(-1).
    m = Transform(a0 * inv, a1 * kinv, b0 * inv, b1 * kinv)
    from .signatures import hadamard

    u = hadamard() @ m.inverse()
    beta = d.x1 * d.x0.inverse() * k ** d.arity
    return u, beta


def _proportional_to(u: tuple, target: tuple) -> AlgebraicScalar | None:
    """Scalar s with u = s * target, None if not proportional."""
    cross = u[0] * target[1] - u[1] * target[0]
    if not scalar_is_zero(cross):
        return None
    if not scalar_is_zero(target[0]):
        return u[0] * target[0].inverse()
    return u[1] * target[1].inverse()


def _match_conjugate_pair(d: WeightedDecomposition):
    """(s0, s1, swapped) with u0 = s0 (1, i), u1 = s1 (1, -i), up to swap."""
    i = i_unit()
    for swapped, (ua, ub) in enumerate(((d.u0, d.u1), (d.u1, d.u0))):
        s0 = _proportional_to(ua, (one(), i))
        s1 = _proportional_to(ub, (one(), -i))
        if s0 is not None and s1 is not None:
            return s0, s1, bool(swapped)
    return None


def _p2_normal_form(f: SymmetricSignature):
    """(c, beta) with f = c ((1,i)^n + beta (1,-i)^n), None if not of that form."""
    n = f.arity
    if n < 3:
        d = _binary_decompose_conjugate(f)
        if d is None:
            return None
        return d
    try:
        dec = decompose(f)
    except (Degenerate, ArityTooSmall):
        return None
    if dec is None:
        return None
    match = _match_conjugate_pair(dec)
    if match is None:
        return None
    s0, s1, swapped = match
    x0, x1 = (dec.x1, dec.x0) if swapped else (dec.x0, dec.x1)
    c = x0 * s0**n
    beta = (x1 * s1**n) * c.inverse()
    return c, beta


def _binary_decompose_conjugate(f: SymmetricSignature):
    # Arity-2 membership in the conjugate-pair family: f = c((1,i)^2 + b(1,-i)^2).
    if f.arity != 2:
        return None
    i = i_unit()
    two_c = f[0] - i * f[1]
    two_cb = f[0] + i * f[1]
    if scalar_is_zero(two_c) or scalar_is_zero(two_cb):
        return None
    if not scalar_is_zero(f[2] + f[0]):
        return None
    half = rational(Fraction(1, 2))
    c = two_c * half
    return c, two_cb * two_c.inverse()


def classify_affine(f: SymmetricSignature) -> ClassWitness | None:
    """Label among the three affine-capable classes, with a witness.

    Dispatches on theta: 0 goes to the plus/minus power test, -1 to the
    conjugate-pair canonical form, -1/2 to the alpha-twist conditions; the
    classes are mutually exclusive.
    """
    d = _classified_decomposition(f)
    if d is None:
        return None
    th = theta(d)
    n = d.arity
    if scalar_is_zero(th):
        hit = _a1_parameters(d)
        if hit is None:
            return None
        t, r = hit
        u, beta = construct_H_theta0(d)
        return ClassWitness("A1", u, th, {"t": t, "r": r, "beta": beta})
    if scalar_is_zero(th + one()):
        res = _p2_witness(f, d)
        if res is None:
            return None
        u, beta = res
        return ClassWitness("A2", u, th, {"beta": beta})
    if scalar_is_zero(th + rational(Fraction(1, 2))):
        hit = _a3_parameters(d)
        if hit is None:
            return None
        eps, r, u = hit
        return ClassWitness("A3", u, th, {"eps": eps, "r": r})
    return None


def classify_product(f: SymmetricSignature) -> ClassWitness | None:
    """Label among the two product-capable classes, with a witness."""
    d = _classified_decomposition(f)
    if d is None:
        return None
    th = theta(d)
    if scalar_is_zero(th):
        u, beta = construct_H_theta0(d)
        return ClassWitness("P1", u, th, {"beta": beta})
    if scalar_is_zero(th + one()):
        res = _p2_witness(f, d)
        if res is None:
            return None
        u, beta = res
        return ClassWitness("P2", u, th, {"beta": beta})
    return None


def _classified_decomposition(f: SymmetricSignature) -> WeightedDecomposition | None:
    if f.arity < 3:
        raise ArityTooSmall("classification needs arity at least 3")
    if symmetric_is_degenerate(f):
        raise Degenerate("classification needs a non-degenerate signature")
    try:
        return decompose(f)
    except NonUniqueRecurrence:
        return None


def _a1_parameters(d: WeightedDecomposition):
    """(t, r) with x1 a1^n = alpha^(tn+2r) x0 b0^n != 0, or the dual pair."""
    n = d.arity
    a0, b0 = d.u0
    a1, b1 = d.u1
    lhs1 = d.x1 * a1**n
    rhs1 = d.x0 * b0**n
    lhs2 = d.x1 * b1**n
    rhs2 = d.x0 * a0**n
    for t in (0, 1):
        for r in range(4):
            scale = alpha() ** (t * n + 2 * r)
            if not scalar_is_zero(lhs1) and scalar_is_zero(lhs1 - scale * rhs1):
                return t, r
            if not scalar_is_zero(lhs2) and scalar_is_zero(lhs2 - scale * rhs2):
                return t, r
    return None


def _p2_witness(f: SymmetricSignature, d: WeightedDecomposition):
    """Orthogonal U moving a conjugate-pair form to its canonical shape."""
    match = _match_conjugate_pair(d)
    if match is None:
        return None
    n = d.arity
    s0, s1, swapped = match
    x0, x1 = (d.x1, d.x0) if swapped else (d.x0, d.x1)
    c = x0 * s0**n
    beta = (x1 * s1**n) * c.inverse()
    # H with a + bi = beta^(1/2n) maps f to c sqrt(beta) ((1,i)^n + (1,-i)^n).
    mu = kth_roots(_cyclo_or_undecided(beta), 2 * n)[0]
    mu_inv = mu.inverse()
    half = rational(Fraction(1, 2))
    a = (mu + mu_inv) * half
    b = (mu - mu_inv) * (i_unit() * 2).inverse()
    u = Transform(a, b, b, -a)
    return u, beta


def _a3_parameters(d: WeightedDecomposition):
    """(eps, r, U) from the alpha-twist power conditions."""
    n = d.arity
    a0, b0 = d.u0
    a1, b1 = d.u1
    s2 = sqrt2()
    i = i_unit()
    for eps in (1, -1):
        eps_i = i if eps == 1 else -i
        big_a = eps_i * a0 - s2 * b0
        big_b = s2 * a0 + eps_i * b0
        if not scalar_is_zero(a1 * big_b - b1 * big_a):
            continue
        if not scalar_is_zero(big_a):
            c = a1 * big_a.inverse()
        elif not scalar_is_zero(big_b):
            c = b1 * big_b.inverse()
        else:
            continue
        try:
            r = is_power_of_i(d.x1 * d.x0.inverse() * c**n)
        except UndecidedScalar:
            raise
        if r is None:
            continue
        # Canonicalizing orthogonal transform from the sufficiency argument.
        csum = a0 * a0 + b0 * b0
        denom = kth_roots(_cyclo_or_undecided((i + one()) * csum), 2)[0]
        dinv = denom.inverse()
        al = alpha()
        if eps == 1:
            x = (a0 + al * b0) * dinv
            y = (b0 - al * a0) * dinv
        else:
            x = (a0 - al * b0) * dinv
            y = (b0 + al * a0) * dinv
        u = Transform(x, y, y, -x)
        return eps, r, u
    return None


# -- membership of symmetric signatures in transformed classes --------------

_AFFINE_UNARY = None


def _affine_unary_directions():
    global _AFFINE_UNARY
    if _AFFINE_UNARY is None:
        i = i_unit()
        _AFFINE_UNARY = (
            (one(), zero()),
            (zero(), one()),
            (one(), one()),
            (one(), -one()),
            (one(), i),
            (one(), -i),
        )
    return _AFFINE_UNARY


_F123_PATTERNS = None


def _f123_patterns():
    global _F123_PATTERNS
    if _F123_PATTERNS is None:
        i = i_unit()
        _F123_PATTERNS = (
            ((one(), zero()), (zero(), one())),
            ((one(), one()), (one(), -one())),
            ((one(), i), (one(), -i)),
        )
    return _F123_PATTERNS


def sym_in_affine(f: SymmetricSignature, t: Transform) -> bool:
    """Membership of a symmetric signature in T times the affine class.

    Polynomial in the arity: works on the decomposition vectors pulled back
    through T, never on the dense expansion.
    """
    if f.is_zero():
        return True
    t_inv = t.inverse()
    n = f.arity
    if n <= 2:
        from .affine import is_affine
        from .signatures import apply_transform, expand

        return is_affine(apply_transform(t_inv, expand(f))) is not None
    if symmetric_is_degenerate(f):
        direction = degenerate_direction(f)
        if direction is None:
            return False
        _, u = direction
        v = t_inv.apply_vector(u)
        return any(_proportional_to(v, p) is not None for p in _affine_unary_directions())
    d = decompose(f)
    if d is None:
        return False
    v0 = t_inv.apply_vector(d.u0)
    v1 = t_inv.apply_vector(d.u1)
    for p0, p1 in _f123_patterns():
        for (ua, xa), (ub, xb) in (((v0, d.x0), (v1, d.x1)), ((v1, d.x1), (v0, d.x0))):
            s0 = _proportional_to(ua, p0)
            s1 = _proportional_to(ub, p1)
            if s0 is None or s1 is None:
                continue
            try:
                ratio_pow = is_power_of_i((xb * s1**n) * (xa * s0**n).inverse())
            except UndecidedScalar:
                raise
            if ratio_pow is not None:
                return True
    return False


def sym_in_product(f: SymmetricSignature, t: Transform) -> bool:
    """Membership of a symmetric signature in T times the product class."""
    if f.is_zero():
        return True
    n = f.arity
    if n == 1:
        return True
    t_inv = t.inverse()
    if n == 2:
        from .product import is_product_type
        from .signatures import apply_transform, expand

        return is_product_type(apply_transform(t_inv, expand(f)))
    if symmetric_is_degenerate(f):
        return True
    d = decompose(f)
    if d is None:
        return False
    v0 = t_inv.apply_vector(d.u0)
    v1 = t_inv.apply_vector(d.u1)
    e0 = (one(), zero())
    e1 = (zero(), one())
    return (
        _proportional_to(v0, e0) is not None and _proportional_to(v1, e1) is not None
    ) or (
        _proportional_to(v0, e1) is not None and _proportional_to(v1, e0) is not None
    )


def _in_p2_or_eq2(f: SymmetricSignature) -> bool:
    """Membership in the conjugate-pair class or the binary equality."""
    if (
        f.arity == 2
        and scalar_is_zero(f[1])
        and not scalar_is_zero(f[0])
        and scalar_is_zero(f[0] - f[2])
    ):
        return True  # binary equality up to scale
    return _p2_normal_form(f) is not None


def a2_candidate_transforms(nu: AlgebraicScalar, n: int) -> list[Transform]:
    """The at most 8n orthogonal candidates for a conjugate-pair pivot.

    Solutions of (a+bi)^(2n) = nu * i^(-r) over r in 0..3, deduplicated.
    """
    candidates: list[Transform] = []
    i = i_unit()
    half = rational(Fraction(1, 2))
    for r in range(4):
        value = nu * i ** ((4 - r) % 4)
        if not value.is_cyclotomic():
            raise UndecidedScalar("conjugate-pair candidate value leaves the cyclotomic layer")
        for mu in kth_roots(value.cyclotomic_part(), 2 * n):
            mu_inv = mu.inverse()
            a = (mu + mu_inv) * half
            b = (mu - mu_inv) * (i * 2).inverse()
            candidates.append(Transform(a, -b, b, a))
    deduped: list[Transform] = []
    for t in candidates:
        if not any(t == kept for kept in deduped):
            deduped.append(t)
    return deduped


# -- set deciders ------------------------------------------------------------


def _normalize_sym_set(sigs) -> list[tuple[str, SymmetricSignature]]:
    if isinstance(sigs, SignatureSet):
        return [(nm, f) for nm, f in sigs]
    return [(f"sig{idx}", f) for idx, f in enumerate(sigs)]


def _pivot(named):
    for nm, f in named:
        if f.arity >= 3 and not f.is_zero() and not symmetric_is_degenerate(f):
            return nm, f
    return None


def decide_A_transformable_sym(sigs) -> Decision:
    """Symmetric-set affine transformability via the pivot's class label."""
    named = _normalize_sym_set(sigs)
    pivot = _pivot(named)
    if pivot is None:
        return Decision(
            HYPOTHESIS_NOT_MET,
            blockers=["no non-degenerate signature of arity at least 3"],
        )
    pivot_name, f = pivot
    try:
        witness = classify_affine(f)
        if witness is None:
            return Decision(NO, blockers=[f"pivot {pivot_name} is in no affine-capable class"])
        h = witness.h
        tested = 0
        if witness.label == "A1":
            for branch, t in (("A", h), ("alphaA", h @ Transform(1, 1, 1, -1) @ _diag_alpha())):
                tested += 1
                if all(sym_in_affine(g, t) for _, g in named):
                    return Decision(YES, branch, t, tested)
            return Decision(
                NO, None, None, tested, [f"pivot {pivot_name} class A1: both containments fail"]
            )
        if witness.label == "A2":
            for t in a2_candidate_transforms(witness.params["beta"], f.arity):
                tested += 1
                if all(sym_in_affine(g, t) for _, g in named):
                    return Decision(YES, "A", t, tested)
            return Decision(
                NO, None, None, tested, [f"pivot {pivot_name} class A2: all candidates fail"]
            )
        # A3
        t = h @ _diag_alpha()
        tested += 1
        if all(sym_in_affine(g, t) for _, g in named):
            return Decision(YES, "alphaA", t, tested)
        return Decision(
            NO, None, None, tested, [f"pivot {pivot_name} class A3: containment fails"]
        )
    except UndecidedScalar as exc:
        return Decision(UNDECIDED, blockers=[f"scalar layer: {exc}"])


def decide_P_transformable_sym(sigs) -> Decision:
    """Symmetric-set product transformability via the pivot's class label."""
    named = _normalize_sym_set(sigs)
    pivot = _pivot(named)
    if pivot is None:
        return Decision(
            HYPOTHESIS_NOT_MET,
            blockers=["no non-degenerate signature of arity at least 3"],
        )
    pivot_name, f = pivot
    try:
        witness = classify_product(f)
        if witness is None:
            return Decision(NO, blockers=[f"pivot {pivot_name} is in no product-capable class"])
        if witness.label == "P1":
            t = witness.h @ Transform(1, 1, 1, -1)
            if all(sym_in_product(g, t) for _, g in named):
                return Decision(YES, "P", t, 1)
            return Decision(NO, None, None, 1, ["P1 containment fails"])
        # P2: every non-degenerate member must be conjugate-pair or =2.
        for nm, g in named:
            if g.is_zero() or g.arity == 1 or symmetric_is_degenerate(g):
                continue
            if not _in_p2_or_eq2(g):
                return Decision(
                    NO, None, None, 1, [f"{nm} is outside the conjugate-pair class"]
                )
        from .signatures import z_basis

        return Decision(YES, "ZP", z_basis(), 1)
    except UndecidedScalar as exc:
        return Decision(UNDECIDED, blockers=[f"scalar layer: {exc}"])


def _diag_alpha() -> Transform:
    return Transform(one(), zero(), zero(), alpha())
