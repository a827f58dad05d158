"""Generalized equalities, unique factorization, and the product decider."""

import random
from fractions import Fraction

import pytest

from holo.errors import IdenticallyZero, NotIrreducible
from holo.product import (
    decide_P_transformable,
    factor,
    in_transformed_product,
    is_generalized_equality,
    is_irreducible,
    is_product_type,
    so2_candidates_product,
)
from holo.scalars import i_unit, one, rational, zero
from holo.signatures import (
    DenseSignature,
    SymmetricSignature,
    Transform,
    apply_transform,
    dense_from_signature_matrix,
    expand,
    swap_x,
    tensor_product,
    z_basis,
)

from conftest import oracle_partition, permute_variables, proportional_dense


CYCLE_G = dense_from_signature_matrix(
    [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]
)


def test_generalized_equality_examples():
    w = is_generalized_equality(DenseSignature(2, [1, 0, 0, 5]))
    assert w is not None and w.pair == (0, 3)
    assert is_generalized_equality(DenseSignature(2, [0, 1, 0, 0])) is None
    assert is_generalized_equality(DenseSignature(1, [1, 0])) is not None
    assert is_generalized_equality(DenseSignature(1, [0, 0])) is not None
    # [1,1] qualifies through the general complementary-pair clause
    assert is_generalized_equality(DenseSignature(1, [1, 1])) is not None
    # zero of arity 2 is reducible, not a generalized equality
    assert is_generalized_equality(DenseSignature(2, [0, 0, 0, 0])) is None


def test_factor_examples():
    fac = factor(DenseSignature(2, [1, 0, 0, 0]))
    assert [v for v, _ in fac.blocks] == [(0,), (1,)]
    assert all(g.arity == 1 for _, g in fac.blocks)

    eq3 = DenseSignature(3, [1, 0, 0, 0, 0, 0, 0, 1])
    assert len(factor(eq3).blocks) == 1

    fac = factor(CYCLE_G)
    assert [v for v, _ in fac.blocks] == [(0, 2), (1, 3)]
    for _, g in fac.blocks:
        assert [e.rational_value() for e in g.entries] == [0, 1, 1, 0]
    assert fac.reassemble(4) == CYCLE_G

    with pytest.raises(IdenticallyZero):
        factor(DenseSignature(2, [0, 0, 0, 0]))


def test_factor_matches_oracle_partition():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.choice([2, 3, 4])
        f = DenseSignature(
            n, [rational(rng.randint(-2, 2)) + i_unit() * rng.randint(-1, 1) for _ in range(1 << n)]
        )
        if f.is_zero():
            continue
        fac = factor(f)
        assert fac.reassemble(n) == f
        assert sorted(v for v, _ in fac.blocks) == sorted(oracle_partition(f))


def test_factor_shuffle_uniqueness():
    rng = random.Random(19)
    for _ in range(25):
        parts = []
        total = 0
        while total < 5:
            arity = rng.choice([1, 1, 2, 2, 3])
            if total + arity > 6:
                break
            entries = [rng.randint(-2, 2) for _ in range(1 << arity)]
            g = DenseSignature(arity, entries)
            if g.is_zero():
                continue
            parts.append(g)
            total += arity
        if not parts:
            continue
        f = parts[0]
        for g in parts[1:]:
            f = tensor_product(f, g)
        perm = list(range(f.arity))
        rng.shuffle(perm)
        shuffled = permute_variables(f, perm)
        fac = factor(shuffled)
        assert fac.reassemble(f.arity) == shuffled
        for _, g in fac.blocks:
            assert is_irreducible(g)


def test_is_product_type_examples():
    assert is_product_type(CYCLE_G)
    assert is_product_type(DenseSignature(3, [1, 0, 0, 0, 0, 0, 0, 1]))
    assert not is_product_type(expand(SymmetricSignature([0, 0, 1, 0, 0])))
    assert is_product_type(DenseSignature(2, [0, 0, 0, 0]))


def test_generalized_equalities_are_irreducible():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.choice([2, 3, 4])
        x = rng.randrange(1 << n)
        entries = [zero()] * (1 << n)
        entries[x] = rational(rng.randint(1, 5))
        entries[x ^ ((1 << n) - 1)] = rational(rng.randint(1, 5))
        f = DenseSignature(n, entries)
        assert is_generalized_equality(f) is not None
        assert is_irreducible(f)


def test_product_closure_sanity():
    rng = random.Random(29)
    for _ in range(10):
        blocks = []
        total = 0
        while total < 4:
            n = rng.choice([1, 2])
            if total + n > 5:
                break
            if n == 1:
                g = DenseSignature(1, [rng.randint(-3, 3), rng.randint(-3, 3)])
                if g.is_zero():
                    continue
            else:
                x = rng.randrange(4)
                entries = [zero()] * 4
                entries[x] = rational(rng.randint(1, 3))
                entries[x ^ 3] = rational(rng.randint(1, 3))
                g = DenseSignature(2, entries)
            blocks.append(g)
            total += n
        if not blocks:
            continue
        f = blocks[0]
        for g in blocks[1:]:
            f = tensor_product(f, g)
        assert is_product_type(f)


def test_stab_product_closure():
    rng = random.Random(37)
    members = [
        CYCLE_G,
        DenseSignature(2, [1, 0, 0, 5]),
        DenseSignature(3, [1, 0, 0, 0, 0, 0, 0, 1]),
    ]
    for f in members:
        assert is_product_type(f)
        nu = rational(Fraction(rng.randint(1, 5), rng.randint(1, 3)))
        twist = Transform(1, 0, 0, nu)
        assert is_product_type(apply_transform(twist, f))
        assert is_product_type(apply_transform(swap_x(), f))


def test_in_transformed_product_examples():
    zd = apply_transform(z_basis(), DenseSignature(2, [0, 1, 1, 0]))
    assert in_transformed_product(zd, z_basis())
    h = DenseSignature(3, [3, 1, -1, -3, -1, -3, 3, 1])
    assert in_transformed_product(h, z_basis().inverse())
    eq3 = DenseSignature(3, [1, 0, 0, 0, 0, 0, 0, 1])
    assert not in_transformed_product(eq3, Transform(1, 1, 0, 1))


def test_so2_candidates_product_examples():
    cs = so2_candidates_product(DenseSignature(2, [1, 0, 0, 1]))
    assert cs.invariant

    eq3 = DenseSignature(3, [1, 0, 0, 0, 0, 0, 0, 1])
    cs = so2_candidates_product(eq3)
    assert len(cs.raw) <= 8
    assert len(cs.verified) == 4

    cs = so2_candidates_product(DenseSignature(2, [0, 1, 1, 0]))
    assert not cs.invariant
    assert len(cs.verified) == 8

    with pytest.raises(NotIrreducible):
        so2_candidates_product(DenseSignature(2, [1, 0, 0, 0]))


def test_so2_candidates_bound_random():
    rng = random.Random(43)
    for _ in range(30):
        n = rng.choice([3, 4])
        f = DenseSignature(n, [rng.randint(-2, 2) for _ in range(1 << n)])
        if f.is_zero() or not is_irreducible(f):
            continue
        cs = so2_candidates_product(f)
        if not cs.invariant:
            assert len(cs.raw) <= 8


def test_decide_examples():
    d = decide_P_transformable([CYCLE_G])
    assert d.is_yes and d.branch == "P"
    assert d.witness == Transform(1, 0, 0, 1)

    d = decide_P_transformable([DenseSignature(3, [3, 1, -1, -3, -1, -3, 3, 1])])
    assert d.is_yes

    d = decide_P_transformable([expand(SymmetricSignature([0, 0, 1, 0, 0]))])
    assert d.outcome == "no"


def test_decide_witness_round_trip():
    d = decide_P_transformable([DenseSignature(3, [3, 1, -1, -3, -1, -3, 3, 1])])
    assert d.is_yes
    assert in_transformed_product(DenseSignature(3, [3, 1, -1, -3, -1, -3, 3, 1]), d.witness)


def test_decide_rotated_product_set():
    from holo.signatures import rational_so2

    h0 = rational_so2(Fraction(2, 5))
    members = [
        apply_transform(h0, CYCLE_G),
        apply_transform(h0, DenseSignature(2, [3, 0, 0, 7])),
    ]
    d = decide_P_transformable(members)
    assert d.is_yes
    for f in members:
        assert in_transformed_product(f, d.witness)
