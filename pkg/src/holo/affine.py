"""Affine-class membership and the general affine-transformability decider.

An affine signature is lambda * chi_S * i^Q with S an affine subspace of
F_2^n and Q a Z_4-valued quadratic form whose cross terms carry a factor 2.
Orthogonal candidates come from the hat transform: a special-orthogonal
rotation acts diagonally on hat entries, so ratios of hat entries at
distinct Hamming weights pin down at most 8n candidate rotations.  The
alpha-twisted branch enumerates candidate hat-entry values over the integer
lattice of alpha-power sums, which is capped and reported distinctly when
the cap is passed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .cyclotomic import CyclotomicScalar
from .decision import CAP_EXCEEDED, NO, UNDECIDED, YES, Decision
from .errors import CapExceeded, EmptySupport, IdenticallyZero, UndecidedScalar
from .scalars import (
    AlgebraicScalar,
    alpha,
    i_unit,
    is_power_of_i,
    kth_roots,
    one,
    rational,
    scalar_is_zero,
    zero,
)
from .signatures import (
    DenseSignature,
    SignatureSet,
    Transform,
    apply_transform,
    diag_alpha,
    hat_transform,
    identity,
)

DEFAULT_ALPHA_CAP = 2_000_000


def _weight(x: int) -> int:
    return bin(x).count("1")


class AffineSupport:
    """Support of a signature as an affine subspace of F_2^n."""

    __slots__ = ("arity", "offset", "directions", "pivots", "basis")

    def __init__(self, arity: int, offset: int, directions: tuple[int, ...], pivots: tuple[int, ...]):
        self.arity = arity
        self.offset = offset
        self.directions = directions  # reduced echelon basis of the linear part
        self.pivots = pivots  # bit positions (0 = most significant variable x1)
        self.basis = (offset,) + tuple(offset ^ d for d in directions)

    @property
    def rank(self) -> int:
        return len(self.directions)

    @property
    def free_positions(self) -> tuple[int, ...]:
        """0-based variable indices of the free variables (pivot columns)."""
        return self.pivots

    def point_from_free(self, bits: int) -> int:
        """The unique support point whose free variables take `bits`.

        Bit i of `bits` (from the high end) is the value of the variable at
        pivots[i].
        """
        point = self.offset
        r = len(self.directions)
        for idx in range(r):
            want = (bits >> (r - 1 - idx)) & 1
            have = (point >> (self.arity - 1 - self.pivots[idx])) & 1
            if want != have:
                point ^= self.directions[idx]
        return point

    def points(self):
        for bits in range(1 << self.rank):
            yield bits, self.point_from_free(bits)

    def __contains__(self, x: int) -> bool:
        v = x ^ self.offset
        for d, p in zip(self.directions, self.pivots):
            if (v >> (self.arity - 1 - p)) & 1:
                v ^= d
        return v == 0


@dataclass
class QuadraticForm:
    """Q(x) = c + sum c_j x_j^2 + 2 sum c_kl x_k x_l over Z_4."""

    constant: int
    linear: tuple[int, ...]
    cross: dict[tuple[int, int], int]

    def evaluate(self, bits: int, r: int | None = None) -> int:
        r = len(self.linear) if r is None else r
        total = self.constant
        for j in range(r):
            if (bits >> (r - 1 - j)) & 1:
                total += self.linear[j]
        for (k, l), c in self.cross.items():
            if (bits >> (r - 1 - k)) & 1 and (bits >> (r - 1 - l)) & 1:
                total += 2 * c
        return total % 4


@dataclass
class AffineWitness:
    """Scale, support and quadratic form reconstructing an affine signature."""

    scale: AlgebraicScalar
    support: AffineSupport | None
    form: QuadraticForm | None

    def reconstruct(self, arity: int) -> DenseSignature:
        entries = [zero()] * (1 << arity)
        if self.support is not None:
            i = i_unit()
            for bits, point in self.support.points():
                entries[point] = self.scale * i ** self.form.evaluate(bits)
        return DenseSignature(arity, entries, max_arity=None)


@dataclass
class Candidate:
    """One SO(2) candidate with the (r, root) provenance that produced it."""

    transform: Transform
    power: int
    root_index: int
    verified: bool = False


@dataclass
class CandidateSet:
    """Either `invariant` or an explicit candidate list with provenance."""

    invariant: bool
    raw: list[Candidate] = field(default_factory=list)
    verified: list[Candidate] = field(default_factory=list)
    undecided: list[Candidate] = field(default_factory=list)
    invariant_member: bool | None = None


def affine_support(f: DenseSignature) -> AffineSupport | None:
    """Support structure iff the support is an affine subspace of F_2^n.

    Builds a basis inductively, re-checking span containment after every
    extension; None when the support is not affine.
    """
    support = f.support()
    if not support:
        raise EmptySupport("support structure of an identically-zero signature")
    sset = set(support)
    n = f.arity
    offset = support[0]
    directions: list[int] = []
    pivots: list[int] = []

    def reduce_vec(v: int) -> int:
        for d, p in zip(directions, pivots):
            if (v >> (n - 1 - p)) & 1:
                v ^= d
        return v

    while True:
        # span containment check
        span_size = 1 << len(directions)
        if span_size > len(sset):
            return None
        for bits in range(span_size):
            point = offset
            for idx in range(len(directions)):
                if (bits >> idx) & 1:
                    point ^= directions[idx]
            if point not in sset:
                return None
        if span_size == len(sset):
            break
        nxt = next(x for x in support if reduce_vec(x ^ offset) != 0)
        v = reduce_vec(nxt ^ offset)
        pivot = next(p for p in range(n) if (v >> (n - 1 - p)) & 1)
        # keep reduced echelon form
        for idx in range(len(directions)):
            if (directions[idx] >> (n - 1 - pivot)) & 1:
                directions[idx] ^= v
        directions.append(v)
        pivots.append(pivot)
        order = sorted(range(len(pivots)), key=lambda idx: pivots[idx])
        directions[:] = [directions[idx] for idx in order]
        pivots[:] = [pivots[idx] for idx in order]
    return AffineSupport(n, offset, tuple(directions), tuple(pivots))


def _power_of_i_profile(f: DenseSignature):
    """(scale, {point: exponent}) after normalizing by the first nonzero entry.

    None when some nonzero entry is not a power of i times the scale.
    """
    scale = None
    for e in f.entries:
        if not scalar_is_zero(e):
            scale = e
            break
    if scale is None:
        return zero(), {}
    powers = [scale, scale * i_unit(), -scale, -(scale * i_unit())]
    exponents: dict[int, int] = {}
    for x, e in enumerate(f.entries):
        if scalar_is_zero(e):
            continue
        for r, p in enumerate(powers):
            if scalar_is_zero(e - p):
                exponents[x] = r
                break
        else:
            return None
    return scale, exponents


def is_affine(f: DenseSignature) -> AffineWitness | None:
    """Membership in the affine class, with a reconstruction witness."""
    if f.is_zero():
        return AffineWitness(zero(), None, None)
    profile = _power_of_i_profile(f)
    if profile is None:
        return None
    scale, exponents = profile
    support = affine_support(f)
    if support is None:
        return None
    r = support.rank
    constant = exponents[support.point_from_free(0)]
    linear = []
    for j in range(r):
        e_j = 1 << (r - 1 - j)
        linear.append((exponents[support.point_from_free(e_j)] - constant) % 4)
    cross: dict[tuple[int, int], int] = {}
    for k in range(r):
        for l in range(k + 1, r):
            bits = (1 << (r - 1 - k)) | (1 << (r - 1 - l))
            val = (exponents[support.point_from_free(bits)] - constant - linear[k] - linear[l]) % 4
            if val % 2:
                return None
            if val:
                cross[(k, l)] = val // 2
    form = QuadraticForm(constant, tuple(linear), cross)
    for bits, point in support.points():
        if form.evaluate(bits, r) != exponents[point]:
            return None
    return AffineWitness(scale, support, form)


def is_affine_alpha(f: DenseSignature) -> AffineWitness | None:
    """Membership in diag(1, alpha) times the affine class.

    The returned witness describes the untwisted signature."""
    untwisted = apply_transform(Transform(one(), zero(), zero(), alpha().inverse()), f)
    return is_affine(untwisted)


def is_so2_invariant(f: DenseSignature) -> bool:
    """True iff the hat transform is supported on a single Hamming weight."""
    weights = {_weight(x) for x in hat_transform(f).support()}
    return len(weights) <= 1


def _hat_pivots(fh: DenseSignature) -> tuple[int, int]:
    """Lexicographically-first hat support points of the two lowest weights."""
    support = fh.support()
    w1 = min(_weight(x) for x in support)
    u1 = next(x for x in support if _weight(x) == w1)
    w2 = min(_weight(x) for x in support if _weight(x) != w1)
    u2 = next(x for x in support if _weight(x) == w2)
    return u1, u2


def _so2_from_mu(mu: AlgebraicScalar) -> Transform:
    mu_inv = mu.inverse()
    a = (mu + mu_inv) * Fraction(1, 2)
    b = (mu - mu_inv) * (i_unit() * 2).inverse()
    return Transform(a, b, -b, a)


def _dedupe(cands: list[Candidate]) -> list[Candidate]:
    out: list[Candidate] = []
    for c in cands:
        if not any(c.transform == kept.transform for kept in out):
            out.append(c)
    return out


def so2_candidates_affine(f: DenseSignature) -> CandidateSet:
    """All special-orthogonal H with H applied to f affine (at most 8n raw).

    Invariant signatures return the invariant marker instead of a list.
    """
    if f.is_zero():
        raise IdenticallyZero("candidate search needs a nonzero signature")
    fh = hat_transform(f)
    if is_so2_invariant(f):
        return CandidateSet(invariant=True, invariant_member=is_affine(f) is not None)
    u1, u2 = _hat_pivots(fh)
    delta = _weight(u2) - _weight(u1)
    ratio = fh[u1] / fh[u2]
    if not ratio.is_cyclotomic():
        raise UndecidedScalar("hat-entry ratio leaves the cyclotomic layer")
    base = ratio.cyclotomic_part()
    raw: list[Candidate] = []
    i_pow = CyclotomicScalar.from_rational(1)
    for r in range(4):
        for j, mu in enumerate(kth_roots(base * i_pow, 2 * delta)):
            raw.append(Candidate(_so2_from_mu(mu), r, j))
        i_pow = i_pow * CyclotomicScalar.zeta(8, 2)
    raw = _dedupe(raw)
    result = CandidateSet(invariant=False, raw=raw)
    for cand in raw:
        try:
            if is_affine(apply_transform(cand.transform, f)) is not None:
                cand.verified = True
                result.verified.append(cand)
        except UndecidedScalar:
            result.undecided.append(cand)
    return result


def _alpha_lattice_class(norm: int) -> list[CyclotomicScalar]:
    """Values d1*alpha + d2*i + d3*alpha^3 - d4 with sum |d_i| = norm."""
    out = []
    basis = [
        CyclotomicScalar.zeta(8),
        CyclotomicScalar.zeta(8, 2),
        CyclotomicScalar.zeta(8, 3),
        CyclotomicScalar.from_rational(-1),
    ]
    for a1 in range(-norm, norm + 1):
        r1 = norm - abs(a1)
        for a2 in range(-r1, r1 + 1):
            r2 = r1 - abs(a2)
            for a3 in range(-r2, r2 + 1):
                r3 = r2 - abs(a3)
                for a4 in ((-r3, r3) if r3 else (0,)):
                    val = CyclotomicScalar.from_rational(0)
                    for d, b in zip((a1, a2, a3, a4), basis):
                        if d:
                            val = val + b * d
                    out.append(val)
    return out


def _iter_alpha_ratio_candidates(f: DenseSignature, cap: int):
    """Yield (ratio_count, Candidate) for the alpha branch, simplest first.

    Candidate mu solves mu^(2*delta) = (hat_f[u1]/hat_f[u2]) * (g2/g1) over
    enumerated lattice values g1, g2 of the target hat entries.  Raises
    CapExceeded once the number of distinct ratios passes the cap.
    """
    fh = hat_transform(f)
    u1, u2 = _hat_pivots(fh)
    delta = _weight(u2) - _weight(u1)
    ratio0 = fh[u1] / fh[u2]
    if not ratio0.is_cyclotomic():
        raise UndecidedScalar("hat-entry ratio leaves the cyclotomic layer")
    base = ratio0.cyclotomic_part()
    n = f.arity
    max_norm = 1 << n
    classes: dict[int, list[CyclotomicScalar]] = {}
    seen: set = set()
    tested = 0
    for total in range(2, 2 * max_norm + 1):
        for n1 in range(max(1, total - max_norm), min(max_norm, total - 1) + 1):
            n2 = total - n1
            if n1 not in classes:
                classes[n1] = _alpha_lattice_class(n1)
            if n2 not in classes:
                classes[n2] = _alpha_lattice_class(n2)
            for g2 in classes[n2]:
                g2_inv = g2.inverse()
                for g1 in classes[n1]:
                    ratio = g1 * g2_inv
                    key = (ratio.order, ratio.coeffs)
                    if key in seen:
                        continue
                    seen.add(key)
                    tested += 1
                    if tested > cap:
                        raise CapExceeded(tested, cap)
                    val = base * ratio
                    for j, mu in enumerate(kth_roots(val, 2 * delta)):
                        yield tested, Candidate(_so2_from_mu(mu), tested, j)


def so2_candidates_affine_alpha(f: DenseSignature, cap: int = DEFAULT_ALPHA_CAP) -> CandidateSet:
    """Special-orthogonal candidates for the alpha-twisted branch.

    Exhausts the candidate-value lattice (or raises CapExceeded); verified
    candidates map f into the twisted class.
    """
    if f.is_zero():
        raise IdenticallyZero("candidate search needs a nonzero signature")
    if is_so2_invariant(f):
        return CandidateSet(invariant=True, invariant_member=is_affine_alpha(f) is not None)
    result = CandidateSet(invariant=False)
    for tested, cand in _iter_alpha_ratio_candidates(f, cap):
        result.raw.append(cand)
        try:
            if is_affine_alpha(apply_transform(cand.transform, f)) is not None:
                cand.verified = True
                result.verified.append(cand)
        except UndecidedScalar:
            result.undecided.append(cand)
    return result


def _normalize_set(sigs) -> list[tuple[str, DenseSignature]]:
    if isinstance(sigs, SignatureSet):
        members = list(sigs)
    else:
        members = [(f"sig{idx}", f) for idx, f in enumerate(sigs)]
    out = []
    for name, f in members:
        from .signatures import SymmetricSignature, expand

        if isinstance(f, SymmetricSignature):
            f = expand(f)
        out.append((name, f))
    return out


def decide_A_transformable(sigs, cap: int = DEFAULT_ALPHA_CAP) -> Decision:
    """Decide whether a signature set lies in T times the affine class.

    The witness, on a yes, is T itself: branch "A" means an orthogonal T,
    branch "alphaA" a T of the form (orthogonal) * diag(1, alpha).
    """
    named = _normalize_set(sigs)
    active = [(nm, f) for nm, f in named if not f.is_zero()]
    if not active:
        return Decision(YES, "A", identity())
    blockers: list[str] = []
    tested = 0

    try:
        invariant_flags = [(nm, f, is_so2_invariant(f)) for nm, f in active]
    except UndecidedScalar as exc:
        return Decision(UNDECIDED, blockers=[f"scalar layer: {exc}"])

    def check_all(transform: Transform, alpha_branch: bool) -> bool:
        membership = is_affine_alpha if alpha_branch else is_affine
        for nm, g in active:
            if membership(apply_transform(transform, g)) is None:
                return False
        return True

    if all(flag for _, _, flag in invariant_flags):
        try:
            if all(is_affine(f) is not None for _, f in active):
                return Decision(YES, "A", identity())
            if all(is_affine_alpha(f) is not None for _, f in active):
                return Decision(YES, "alphaA", diag_alpha())
        except UndecidedScalar as exc:
            return Decision(UNDECIDED, blockers=[f"scalar layer: {exc}"])
        return Decision(NO, blockers=["invariant signatures split between branches"])

    pivot_name, pivot = next((nm, f) for nm, f, flag in invariant_flags if not flag)
    undecided_seen = False

    # Branch A: at most 8n candidates from the pivot, each tried on the set.
    try:
        cands = so2_candidates_affine(pivot)
        tested += len(cands.raw)
        undecided_seen |= bool(cands.undecided)
        for cand in cands.verified:
            try:
                if check_all(cand.transform, alpha_branch=False):
                    return Decision(YES, "A", cand.transform.transpose(), tested, blockers)
            except UndecidedScalar:
                undecided_seen = True
                blockers.append(f"branch A candidate (r={cand.power}) undecided on the set")
        if not cands.verified and not cands.undecided:
            blockers.append(f"branch A: no candidate maps {pivot_name} into the affine class")
    except UndecidedScalar as exc:
        undecided_seen = True
        blockers.append(f"branch A: {exc}")

    # Alpha branch: streamed lattice enumeration with early exit on success.
    capped = False
    try:
        for count, cand in _iter_alpha_ratio_candidates(pivot, cap):
            tested = max(tested, count)
            try:
                if is_affine_alpha(apply_transform(cand.transform, pivot)) is None:
                    continue
                if check_all(cand.transform, alpha_branch=True):
                    witness = cand.transform.transpose() @ diag_alpha()
                    return Decision(YES, "alphaA", witness, tested, blockers)
            except UndecidedScalar:
                undecided_seen = True
                blockers.append("alpha branch: a candidate was undecided")
        blockers.append("alpha branch: enumeration exhausted without a witness")
    except CapExceeded as exc:
        capped = True
        blockers.append(f"alpha branch: {exc}")
    except UndecidedScalar as exc:
        undecided_seen = True
        blockers.append(f"alpha branch: {exc}")

    if capped:
        return Decision(CAP_EXCEEDED, None, None, tested, blockers)
    if undecided_seen:
        return Decision(UNDECIDED, None, None, tested, blockers)
    return Decision(NO, None, None, tested, blockers)
