"""Shared generators and independent oracles for the test suite.

The oracles deliberately avoid the library's own decision paths: the affine
oracle enumerates quadratic forms, the factorization oracle derives the
block partition from scratch via full rank checks, and the orientation
oracle enumerates admissible orientations directly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np

from holo.scalars import AlgebraicScalar, i_unit, one, rational, zero
from holo.signatures import DenseSignature


# -- scalar generators -------------------------------------------------------


def random_cyclotomic(rng: random.Random, order: int = 8, span: int = 3) -> AlgebraicScalar:
    from holo.cyclotomic import CyclotomicScalar, euler_phi

    phi = euler_phi(order)
    coeffs = [
        Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(phi)
    ]
    return AlgebraicScalar.from_cyclotomic(CyclotomicScalar(order, coeffs))


def random_gauss_entry(rng: random.Random, span: int = 2) -> AlgebraicScalar:
    return rational(rng.randint(-span, span)) + i_unit() * rng.randint(-span, span)


def random_power_of_i_entry(rng: random.Random) -> AlgebraicScalar:
    return i_unit() ** rng.randrange(4) if rng.random() < 0.75 else zero()


# -- affine oracle ------------------------------------------------------------


def entry_exponent(e: AlgebraicScalar, scale: AlgebraicScalar) -> int | None:
    """r with e = i^r * scale, None otherwise."""
    power = scale
    for r in range(4):
        if e == power:
            return r
        power = power * i_unit()
    return None


def affine_oracle(f: DenseSignature) -> bool:
    """Brute-force affine membership for arity <= 3.

    Triple-XOR closure for the support, then full enumeration of quadratic
    forms with even cross terms over the free variables.
    """
    support = f.support()
    if not support:
        return True
    n = f.arity
    sset = set(support)
    for x in sset:
        for y in sset:
            for z in sset:
                if x ^ y ^ z not in sset:
                    return False
    scale = f[support[0]]
    exponents = {}
    for x in support:
        r = entry_exponent(f[x], scale)
        if r is None:
            return False
        exponents[x] = r
    # Free variables by independent Gaussian elimination over F2.
    offset = support[0]
    basis = []
    for x in support:
        v = x ^ offset
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    r = len(basis)
    if len(sset) != 1 << r:
        return False
    points = sorted(sset)
    # Coordinates of each support point in the chosen basis.
    coords = []
    for x in points:
        v = x ^ offset
        bits = []
        for b in basis:
            if v ^ b < v:
                v ^= b
                bits.append(1)
            else:
                bits.append(0)
        if v:
            return False
        coords.append(bits)
    coords = np.array(coords, dtype=np.int64)  # shape (|S|, r)
    target = np.array([exponents[x] for x in points], dtype=np.int64)
    if r == 0:
        return True
    # Enumerate c, c_j, c_kl over Z4 (cross terms contribute 2*c_kl, so two
    # values suffice for them).
    pairs = list(combinations(range(r), 2))
    lin_count = 4**r
    cross_count = 2 ** len(pairs)
    quad_masks = []
    for k, l in pairs:
        quad_masks.append(coords[:, k] * coords[:, l])
    quad_masks = np.array(quad_masks, dtype=np.int64) if pairs else np.zeros((0, len(points)), dtype=np.int64)
    for c in range(4):
        base = (target - c) % 4
        for lin in range(lin_count):
            vals = base.copy()
            tmp = lin
            for j in range(r):
                cj = tmp % 4
                tmp //= 4
                if cj:
                    vals = (vals - cj * coords[:, j]) % 4
            for cross in range(cross_count):
                acc = vals
                tmp2 = cross
                idx = 0
                while tmp2:
                    if tmp2 & 1:
                        acc = (acc - 2 * quad_masks[idx]) % 4
                    tmp2 >>= 1
                    idx += 1
                if not acc.any():
                    return True
    return False


# -- factorization oracle ------------------------------------------------------


def _exact_rank_le_1(matrix) -> bool:
    rows = len(matrix)
    cols = len(matrix[0])
    for r1 in range(rows):
        for r2 in range(r1 + 1, rows):
            for c1 in range(cols):
                for c2 in range(c1 + 1, cols):
                    lhs = matrix[r1][c1] * matrix[r2][c2]
                    rhs = matrix[r1][c2] * matrix[r2][c1]
                    if not (lhs == rhs):
                        return False
    return True


def oracle_partition(f: DenseSignature) -> list[tuple[int, ...]]:
    """The finest tensor-factorization partition, from full rank checks."""
    n = f.arity
    splits = []
    for mask in range(1, (1 << n) - 1):
        side = tuple(v for v in range(n) if (mask >> (n - 1 - v)) & 1)
        other = tuple(v for v in range(n) if v not in side)
        matrix = [
            [None] * (1 << len(other)) for _ in range(1 << len(side))
        ]
        for x in range(1 << n):
            u = 0
            for v in side:
                u = (u << 1) | ((x >> (n - 1 - v)) & 1)
            w = 0
            for v in other:
                w = (w << 1) | ((x >> (n - 1 - v)) & 1)
            matrix[u][w] = f[x]
        if _exact_rank_le_1(matrix):
            splits.append((side, other))
    blocks = []
    for v in range(n):
        block = set(range(n))
        for side, other in splits:
            block &= set(side) if v in side else set(other)
        blocks.append(tuple(sorted(block)))
    seen = []
    for b in blocks:
        if b not in seen:
            seen.append(b)
    return seen


# -- orientation oracle --------------------------------------------------------


def admissible_orientation_counts(edges, vertex_order) -> tuple[int, int]:
    """(even, odd) counts of sources+sinks over admissible orientations.

    `edges` is a list of (u, v) pairs; `vertex_order` maps each vertex to its
    ordered incident edge ids.  An orientation bit 1 on edge e means e points
    from u to v; a vertex reads 1 on an edge directed into it.  Admissible
    patterns per vertex are all-in, all-out, and the two alternating ones.
    """
    even = odd = 0
    m = len(edges)
    admissible = {(0, 0, 0, 0), (1, 1, 1, 1), (0, 1, 0, 1), (1, 0, 1, 0)}
    for sigma in range(1 << m):
        sources_sinks = 0
        ok = True
        for vertex, incident in vertex_order.items():
            pattern = []
            for e in incident:
                u, v = edges[e]
                bit = (sigma >> e) & 1
                into = bit if v == vertex else 1 - bit
                pattern.append(into)
            pattern = tuple(pattern)
            if pattern not in admissible:
                ok = False
                break
            if pattern in ((0, 0, 0, 0), (1, 1, 1, 1)):
                sources_sinks += 1
        if ok:
            if sources_sinks % 2 == 0:
                even += 1
            else:
                odd += 1
    return even, odd


# -- misc helpers ---------------------------------------------------------------


def permute_variables(f: DenseSignature, perm) -> DenseSignature:
    """Entries reindexed so new variable j is old variable perm[j]."""
    n = f.arity
    entries = [zero()] * (1 << n)
    for x in range(1 << n):
        y = 0
        for j in range(n):
            bit = (x >> (n - 1 - perm[j])) & 1
            y |= bit << (n - 1 - j)
        entries[y] = f[x]
    return DenseSignature(n, entries, max_arity=None)


def proportional_dense(f: DenseSignature, g: DenseSignature) -> bool:
    ref = None
    if f.arity != g.arity:
        return False
    for a, b in zip(f.entries, g.entries):
        az, bz = a.is_zero(), b.is_zero()
        if az != bz:
            return False
        if not az and ref is None:
            ref = (a, b)
    if ref is None:
        return True
    for a, b in zip(f.entries, g.entries):
        if not (a * ref[1] == b * ref[0]):
            return False
    return True
