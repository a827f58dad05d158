"""Product-type membership, irreducible factorization, and the set decider.

Product-type signatures are tensor products of unary functions, binary
equalities and binary disequalities; equivalently the tensor closure of the
generalized equalities, which are supported on a single complementary index
pair.  Factorization into irreducibles is unique and found by scanning
variable bipartitions for rank-one reshapes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .decision import NO, UNDECIDED, YES, Decision
from .errors import IdenticallyZero, NotIrreducible, UndecidedScalar
from .scalars import AlgebraicScalar, i_unit, kth_roots, one, scalar_is_zero, zero
from .signatures import (
    DenseSignature,
    Transform,
    apply_transform,
    hat_transform,
    identity,
    z_basis_unnormalized,
)
from .affine import Candidate, CandidateSet, _dedupe, _normalize_set, _so2_from_mu, _weight


class _SkipBranch(Exception):
    pass


@dataclass
class GeneralizedEqualityWitness:
    """Either a unary tag or the complementary support pair with its values."""

    unary: tuple | None = None
    pair: tuple[int, int] | None = None
    values: tuple[AlgebraicScalar, AlgebraicScalar] | None = None


@dataclass
class Factorization:
    """Ordered (variable block, irreducible factor) pairs partitioning x_1..x_n."""

    blocks: list[tuple[tuple[int, ...], DenseSignature]] = field(default_factory=list)

    def reassemble(self, arity: int) -> DenseSignature:
        """Tensor re-multiplication along the recorded variable blocks."""
        entries = []
        for x in range(1 << arity):
            val = one()
            for variables, g in self.blocks:
                sub = 0
                for v in variables:
                    sub = (sub << 1) | ((x >> (arity - 1 - v)) & 1)
                val = val * g[sub]
            entries.append(val)
        return DenseSignature(arity, entries, max_arity=None)


def is_generalized_equality(f: DenseSignature) -> GeneralizedEqualityWitness | None:
    """Witness per the support-on-a-complementary-pair definition."""
    if f.arity == 1:
        return GeneralizedEqualityWitness(
            unary=(f[0], f[1]), pair=None, values=None
        )
    support = [x for x in range(1 << f.arity) if not scalar_is_zero(f[x])]
    if len(support) != 2:
        return None
    x, y = support
    if x ^ y != (1 << f.arity) - 1:
        return None
    return GeneralizedEqualityWitness(unary=None, pair=(x, y), values=(f[x], f[y]))


def _rank_at_most_one(matrix) -> tuple[int, int] | None:
    """First nonzero position when all 2x2 minors through it vanish."""
    rows = len(matrix)
    cols = len(matrix[0])
    pivot = None
    for r in range(rows):
        for c in range(cols):
            if not scalar_is_zero(matrix[r][c]):
                pivot = (r, c)
                break
        if pivot:
            break
    if pivot is None:
        return None  # all-zero reshape: rank 0
    r0, c0 = pivot
    for r in range(rows):
        for c in range(cols):
            if r == r0 or c == c0:
                continue
            if not (matrix[r][c] * matrix[r0][c0] == matrix[r][c0] * matrix[r0][c]):
                return None
    return pivot


def _bipartitions(variables: tuple[int, ...]):
    """Proper bipartitions, first side containing the first variable,
    ordered lexicographically on the first side's index tuple."""
    rest = variables[1:]
    n = len(rest)
    sides = []
    for mask in range(1 << n):
        side = (variables[0],) + tuple(rest[i] for i in range(n) if (mask >> i) & 1)
        if len(side) < len(variables):
            sides.append(side)
    sides.sort()
    for side in sides:
        other = tuple(v for v in variables if v not in side)
        yield side, other


def _restrict(f: DenseSignature, arity: int, variables: tuple[int, ...], side: tuple[int, ...], other: tuple[int, ...]):
    """Reshape entries of a factor on `variables` into a side-by-other matrix."""
    pos = {v: idx for idx, v in enumerate(variables)}
    k = len(variables)
    rows = []
    for u in range(1 << len(side)):
        row = []
        for w in range(1 << len(other)):
            x = 0
            for bit_idx, v in enumerate(side):
                x |= ((u >> (len(side) - 1 - bit_idx)) & 1) << (k - 1 - pos[v])
            for bit_idx, v in enumerate(other):
                x |= ((w >> (len(other) - 1 - bit_idx)) & 1) << (k - 1 - pos[v])
            row.append(f[x])
        rows.append(row)
    return rows


def factor(f: DenseSignature) -> Factorization:
    """Unique factorization into irreducibles over a variable partition.

    Splits on the first bipartition (canonical order) with a rank-one
    reshape, recursing until every block is irreducible.
    """
    if f.is_zero():
        raise IdenticallyZero("identically-zero signatures have no unique factorization")
    result = Factorization()
    _factor_rec(f, tuple(range(f.arity)), result)
    return result


def _factor_rec(f: DenseSignature, variables: tuple[int, ...], out: Factorization):
    k = f.arity
    if k == 1:
        out.blocks.append((variables, f))
        return
    for side, other in _bipartitions(variables):
        local_side = tuple(variables.index(v) for v in side)
        local_other = tuple(variables.index(v) for v in other)
        matrix = _restrict(f, k, tuple(range(k)), local_side, local_other)
        pivot = _rank_at_most_one(matrix)
        if pivot is None:
            continue
        r0, c0 = pivot
        scale = matrix[r0][c0].inverse()
        left = DenseSignature(len(side), [matrix[r][c0] for r in range(1 << len(side))], max_arity=None)
        right = DenseSignature(
            len(other), [matrix[r0][c] * scale for c in range(1 << len(other))], max_arity=None
        )
        _factor_rec(left, side, out)
        _factor_rec(right, other, out)
        return
    out.blocks.append((variables, f))


def is_irreducible(f: DenseSignature) -> bool:
    if f.is_zero():
        return f.arity == 1
    return len(factor(f).blocks) == 1


def is_product_type(f: DenseSignature) -> bool:
    """Every irreducible factor is a generalized equality."""
    if f.is_zero():
        return True
    return all(is_generalized_equality(g) is not None for _, g in factor(f).blocks)


def in_transformed_product(f: DenseSignature, t: Transform) -> bool:
    """Membership in T times the product class, factor by factor."""
    if f.is_zero():
        return True
    t_inv = t.inverse()
    return all(
        is_generalized_equality(apply_transform(t_inv, g)) is not None
        for _, g in factor(f).blocks
    )


def _proportional(f: DenseSignature, template: list[int]) -> bool:
    """f proportional to the template vector, by cross-multiplication."""
    if len(template) != len(f.entries):
        return False
    ref = None
    for e, t in zip(f.entries, template):
        if t == 0:
            if not scalar_is_zero(e):
                return False
        elif ref is None:
            if scalar_is_zero(e):
                return False
            ref = (e, t)
    if ref is None:
        return f.is_zero()
    for e, t in zip(f.entries, template):
        if t and not (e * ref[1] == ref[0] * t):
            return False
    return True


def so2_candidates_product(f: DenseSignature) -> CandidateSet:
    """Special-orthogonal H with H applied to f a generalized equality.

    At most eight candidates except for the two binary invariant shapes.
    """
    if f.arity < 2:
        raise NotIrreducible("candidate search needs arity at least 2")
    if not is_irreducible(f):
        raise NotIrreducible("candidate search needs an irreducible signature")
    fh = hat_transform(f)
    even = [x for x in range(1 << f.arity) if _weight(x) % 2 == 0]
    odd = [x for x in range(1 << f.arity) if _weight(x) % 2 == 1]
    even_zero = [scalar_is_zero(fh[x]) for x in even]
    odd_zero = [scalar_is_zero(fh[x]) for x in odd]
    if any(even_zero) and not all(even_zero):
        return CandidateSet(invariant=False)
    if any(odd_zero) and not all(odd_zero):
        return CandidateSet(invariant=False)
    n = f.arity
    if n == 2 and all(even_zero):
        invariant = _proportional(f, [1, 0, 0, 1]) or _proportional(f, [0, 1, -1, 0])
        if invariant:
            return CandidateSet(invariant=True, invariant_member=True)
        return CandidateSet(invariant=False)
    # Two nonzero hat entries with weights differing by two.
    if not all(even_zero):
        u1 = 0
        u2 = next(x for x in even if _weight(x) == 2)
    else:
        u1 = next(x for x in odd if _weight(x) == 1)
        u2 = next(x for x in odd if _weight(x) == 3)
    ratio = fh[u1] / fh[u2]
    if not ratio.is_cyclotomic():
        raise UndecidedScalar("hat ratio leaves the cyclotomic layer")
    base = ratio.cyclotomic_part()
    raw: list[Candidate] = []
    for sign in (0, 1):
        val = base if sign == 0 else -base
        for j, mu in enumerate(kth_roots(val, 4)):
            raw.append(Candidate(_so2_from_mu(mu), sign, j))
    raw = _dedupe(raw)
    result = CandidateSet(invariant=False, raw=raw)
    for cand in raw:
        try:
            if is_generalized_equality(apply_transform(cand.transform, f)) is not None:
                cand.verified = True
                result.verified.append(cand)
        except UndecidedScalar:
            result.undecided.append(cand)
    return result


def decide_P_transformable(sigs) -> Decision:
    """Decide whether a signature set lies in T times the product class.

    Branch "ZP" reports containment in [[1,1],[i,-i]] times the class;
    branch "P" an orthogonal witness.
    """
    named = _normalize_set(sigs)
    active = [(nm, f) for nm, f in named if not f.is_zero()]
    blockers: list[str] = []
    tested = 0
    if not active:
        return Decision(YES, "P", identity())

    # Cheapest accept first: direct containment in the product class.
    pivot = None
    undecided_seen = False
    try:
        factored = [(nm, factor(f)) for nm, f in active]
        if all(
            is_generalized_equality(g) is not None
            for _, fac in factored
            for _, g in fac.blocks
        ):
            return Decision(YES, "P", identity(), tested, blockers)
        # Pivot: first factor outside the invariant shapes (unaries, the
        # binary equality, and the rotation-fixed binary disequality twist).
        for nm, fac in factored:
            for variables, g in fac.blocks:
                if g.arity == 1:
                    continue
                if _proportional(g, [1, 0, 0, 1]) or _proportional(g, [0, 1, -1, 0]):
                    continue
                pivot = (nm, g)
                break
            if pivot:
                break
        if pivot is None:
            # Only invariant shapes beyond the direct test: nothing more to try
            # in the rotation branch; fall through to the Z branch below.
            pass
    except UndecidedScalar as exc:
        undecided_seen = True
        blockers.append(f"factorization: {exc}")

    try:
        if pivot is None:
            raise _SkipBranch
        cands = so2_candidates_product(pivot[1])
        tested += len(cands.raw)
        undecided_seen |= bool(cands.undecided)
        for cand in cands.verified:
            try:
                if all(is_product_type(apply_transform(cand.transform, f)) for _, f in active):
                    return Decision(YES, "P", cand.transform.transpose(), tested, blockers)
            except UndecidedScalar:
                undecided_seen = True
                blockers.append("orthogonal branch: a candidate was undecided on the set")
        blockers.append(
            f"orthogonal branch: all {len(cands.verified)} verified candidates refuted"
        )
    except _SkipBranch:
        blockers.append("orthogonal branch: no usable pivot factor")
    except UndecidedScalar as exc:
        undecided_seen = True
        blockers.append(f"orthogonal branch: {exc}")

    z0 = z_basis_unnormalized()
    try:
        if all(in_transformed_product(f, z0) for _, f in active):
            return Decision(YES, "ZP", z0, tested, blockers)
        blockers.append("Z branch: some factor is not a transformed generalized equality")
    except UndecidedScalar as exc:
        undecided_seen = True
        blockers.append(f"Z branch: {exc}")

    if undecided_seen:
        return Decision(UNDECIDED, None, None, tested, blockers)
    return Decision(NO, None, None, tested, blockers)
