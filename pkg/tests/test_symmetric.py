"""Succinct classifiers, canonical forms, and the symmetric set deciders."""

import random
from fractions import Fraction

import pytest

from holo.errors import ArityTooSmall, Degenerate, NonUniqueRecurrence
from holo.scalars import alpha, i_unit, one, rational, scalar_is_zero, sqrt2, zero
from holo.signatures import (
    SymmetricSignature,
    Transform,
    expand,
    rational_so2,
    symmetric_apply_transform,
)
from holo.symmetric import (
    a2_candidate_transforms,
    classify_affine,
    classify_product,
    construct_H_theta0,
    decide_A_transformable_sym,
    decide_P_transformable_sym,
    decompose,
    fit_recurrence,
    sym_in_affine,
    sym_in_product,
    symmetric_is_degenerate,
    theta,
)


def canonical(values):
    return SymmetricSignature(values)


def canonical_a1(n, beta):
    return SymmetricSignature([one() + beta * (-1) ** w for w in range(n + 1)])


def canonical_a2(n, nu):
    i = i_unit()
    return SymmetricSignature([i**w + nu * (-i) ** w for w in range(n + 1)])


def canonical_a3(n, r):
    al = alpha()
    return SymmetricSignature([al**w + i_unit() ** r * (-al) ** w for w in range(n + 1)])


def test_fit_recurrence_examples():
    rec = fit_recurrence(canonical([3, 1, 3, 1]))
    assert (rec.a, rec.b, rec.c) == (one(), zero(), -one())
    rec = fit_recurrence(canonical([1, 0, -1, 0]))
    assert (rec.a, rec.b, rec.c) == (one(), zero(), one())
    with pytest.raises(NonUniqueRecurrence):
        fit_recurrence(canonical([1, 1, 1, 1]))
    assert fit_recurrence(canonical([1, 2, 4, 1, 5])) is None


def test_recurrence_transform_invariance():
    rng = random.Random(61)
    for _ in range(12):
        values = [rng.randint(-3, 3) for _ in range(rng.choice([4, 5, 6]))]
        f = SymmetricSignature(values)
        if symmetric_is_degenerate(f):
            continue
        t = Transform(
            rng.randint(1, 3), rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(1, 3)
        )
        if t.det().is_zero():
            continue
        g = symmetric_apply_transform(t, f)
        try:
            rec_f = fit_recurrence(f)
        except NonUniqueRecurrence:
            continue
        if symmetric_is_degenerate(g):
            continue
        rec_g = fit_recurrence(g)
        assert (rec_f is None) == (rec_g is None)
        if rec_f is not None:
            disc_f = rec_f.discriminant().is_zero()
            disc_g = rec_g.discriminant().is_zero()
            assert disc_f == disc_g


def test_decompose_examples():
    d = decompose(canonical([3, 1, 3, 1]))
    assert d.x0 == rational(2) and d.x1 == one()
    assert d.u0 == (one(), one()) and d.u1 == (one(), -one())

    d = decompose(canonical([1, 0, -1, 0]))
    assert d.x0 == rational(Fraction(1, 2)) and d.x1 == rational(Fraction(1, 2))
    assert d.u0 == (one(), i_unit()) and d.u1 == (one(), -i_unit())

    assert decompose(canonical([1, 1, 0, 0])) is None

    with pytest.raises(Degenerate):
        decompose(canonical([1, 1, 1, 1]))
    with pytest.raises(ArityTooSmall):
        decompose(canonical([1, 0, 1]))


def test_decompose_uniqueness_up_to_swap_scale():
    rng = random.Random(67)
    for _ in range(15):
        n = rng.choice([3, 4, 5])
        a0, b0 = rng.randint(-3, 3), rng.randint(-3, 3)
        a1, b1 = rng.randint(-3, 3), rng.randint(-3, 3)
        if a0 * b1 == a1 * b0:
            continue
        x0, x1 = rng.randint(1, 4), rng.randint(1, 4)
        f = SymmetricSignature(
            [
                rational(x0 * a0 ** (n - w) * b0**w + x1 * a1 ** (n - w) * b1**w)
                for w in range(n + 1)
            ]
        )
        d = decompose(f)
        assert d is not None
        # recovered pair matches {(x0,u0),(x1,u1)} up to per-vector scaling
        def matches(u, x, ua, xa):
            cross = u[0] * rational(ua[1]) - u[1] * rational(ua[0])
            if not cross.is_zero():
                return False
            if not u[0].is_zero():
                s = rational(ua[0]) / u[0]
            else:
                s = rational(ua[1]) / u[1]
            return x == rational(xa) * s**n

        ok_direct = matches(d.u0, d.x0, (a0, b0), x0) and matches(d.u1, d.x1, (a1, b1), x1)
        ok_swapped = matches(d.u0, d.x0, (a1, b1), x1) and matches(d.u1, d.x1, (a0, b0), x0)
        assert ok_direct or ok_swapped


def test_theta_examples():
    assert theta(decompose(canonical([3, 1, 3, 1]))).is_zero()
    assert theta(decompose(canonical([1, 0, -1, 0]))) == -one()
    d = decompose(SymmetricSignature([2, 0, i_unit() * 2, 0]))
    assert theta(d) == rational(Fraction(-1, 2))


def test_theta_orthogonal_invariance():
    rng = random.Random(71)
    for _ in range(10):
        values = [rng.randint(-3, 3) for _ in range(rng.choice([4, 5]))]
        f = SymmetricSignature(values)
        if symmetric_is_degenerate(f):
            continue
        d = decompose(f)
        if d is None:
            continue
        h = rational_so2(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        g = symmetric_apply_transform(h, f)
        dg = decompose(g)
        assert dg is not None
        assert theta(d) == theta(dg)


def test_classify_fixtures():
    w = classify_affine(canonical([1, 0, 0, 1]))
    assert w.label == "A1" and (w.params["t"], w.params["r"]) == (0, 0)

    w = classify_affine(canonical([1, 0, -1, 0]))
    assert w.label == "A2" and w.theta == -one()

    w = classify_affine(SymmetricSignature([2, 0, i_unit() * 2, 0]))
    assert w.label == "A3" and w.params["eps"] == 1 and w.params["r"] == 2
    assert w.theta == rational(Fraction(-1, 2))

    assert classify_affine(canonical([1, 1, 1, 2])) is None

    w = classify_product(canonical([3, 1, 3, 1]))
    assert w.label == "P1" and w.params["beta"] == rational(Fraction(1, 2))
    assert classify_affine(canonical([3, 1, 3, 1])) is None

    w = classify_product(canonical([1, 0, -1, 0]))
    assert w.label == "P2"

    w = classify_product(canonical([1, 0, 0, 1]))
    assert w.label == "P1"


def test_classifiers_single_label():
    rng = random.Random(73)
    for _ in range(20):
        values = [rng.randint(-2, 2) for _ in range(rng.choice([4, 5, 6]))]
        f = SymmetricSignature(values)
        if f.is_zero() or symmetric_is_degenerate(f):
            continue
        try:
            wa = classify_affine(f)
            wp = classify_product(f)
        except NonUniqueRecurrence:
            continue
        if wa is not None and wp is not None:
            # A1 < P1 and A2 = P2 are the only overlaps
            assert {wa.label, wp.label} in ({"A1", "P1"}, {"A2", "P2"})


def test_construct_H_theta0_examples():
    d = decompose(canonical([1, 0, 0, 1]))
    u, beta = construct_H_theta0(d)
    assert u.is_orthogonal()
    d = decompose(canonical([3, 1, 3, 1]))
    u, beta = construct_H_theta0(d)
    assert u.is_orthogonal() and beta == rational(Fraction(1, 2))
    # u0 = (0,1) stays well defined
    d = decompose(canonical([0, 0, 0, 1, 0]))
    if d is not None:
        u, _ = construct_H_theta0(d)
        assert u.is_orthogonal()


def test_canonical_round_trip_under_rotation():
    rng = random.Random(79)
    for _ in range(10):
        h = rational_so2(Fraction(rng.randint(-4, 4), rng.randint(1, 5)))
        n = rng.choice([3, 4, 5])
        t, r = rng.choice([(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 2)])
        f = symmetric_apply_transform(h, canonical_a1(n, alpha() ** (t * n + 2 * r)))
        assert classify_affine(f).label == "A1"
        f = symmetric_apply_transform(h, canonical_a2(n, rational(rng.randint(1, 6))))
        assert classify_affine(f).label == "A2"
        f = symmetric_apply_transform(h, canonical_a3(n, rng.randrange(4)))
        assert classify_affine(f).label == "A3"
        f = symmetric_apply_transform(h, canonical_a1(n, rational(Fraction(3, 7))))
        assert classify_product(f).label == "P1"


def test_sym_in_affine_examples():
    eye = Transform(1, 0, 0, 1)
    assert sym_in_affine(canonical([1, 0, 1]), eye)
    assert sym_in_affine(canonical([1, 0, -1, 0]), eye)
    assert not sym_in_affine(canonical([3, 1, 3, 1]), eye)


def test_sym_in_product_examples():
    eye = Transform(1, 0, 0, 1)
    assert sym_in_product(canonical([1, 0, 0, 5]), eye)
    assert sym_in_product(canonical([0, 1, 0]), eye)
    w = classify_product(canonical([3, 1, 3, 1]))
    t = w.h @ Transform(1, 1, 1, -1)
    assert sym_in_product(canonical([3, 1, 3, 1]), t)


def test_sym_membership_matches_dense(subtests=None):
    from holo.affine import is_affine
    from holo.product import is_product_type
    from holo.signatures import apply_transform

    rng = random.Random(83)
    transforms = [
        Transform(1, 0, 0, 1),
        rational_so2(Fraction(1, 2)),
        rational_so2(Fraction(-2, 3)) @ Transform(1, 0, 0, -1),
    ]
    for _ in range(12):
        values = [rng.randint(-2, 2) for _ in range(rng.choice([4, 5]))]
        f = SymmetricSignature(values)
        for t in transforms:
            dense_aff = is_affine(apply_transform(t.inverse(), expand(f))) is not None
            assert sym_in_affine(f, t) == dense_aff, (values, t)
            dense_prod = is_product_type(apply_transform(t.inverse(), expand(f)))
            assert sym_in_product(f, t) == dense_prod, (values, t)


def test_a2_candidate_bound():
    for n in (3, 4, 5):
        cands = a2_candidate_transforms(rational(3), n)
        assert len(cands) <= 8 * n
        assert all(t.is_orthogonal() for t in cands)


def test_decide_A_sym_examples():
    d = decide_A_transformable_sym([canonical([1, 0, 0, 1]), canonical([1, 0, 1])])
    assert d.is_yes
    d = decide_A_transformable_sym([SymmetricSignature([2, 0, i_unit() * 2, 0])])
    assert d.is_yes and d.branch == "alphaA"
    d = decide_A_transformable_sym([canonical([3, 1, 3, 1])])
    assert d.outcome == "no"
    d = decide_A_transformable_sym([canonical([1, 2, 1])])
    assert d.outcome == "hypothesis_not_met"


def test_decide_P_sym_examples():
    d = decide_P_transformable_sym([canonical([3, 1, 3, 1])])
    assert d.is_yes
    d = decide_P_transformable_sym([canonical([1, 0, -1, 0]), canonical([1, 0, 1])])
    assert d.is_yes
    d = decide_P_transformable_sym([canonical([1, 0, -1, 0]), canonical([1, 0, 0, 1])])
    assert d.outcome == "no"


def test_decide_sym_witness_validity():
    # every yes witness maps all members into the claimed class
    h = rational_so2(Fraction(1, 3))
    members = [
        symmetric_apply_transform(h, canonical_a2(3, rational(2))),
        canonical([1, 0, 1]),  # rotation-invariant binary equality
    ]
    d = decide_A_transformable_sym(members)
    assert d.is_yes
    for f in members:
        assert sym_in_affine(f, d.witness)


def test_decide_sym_incompatible_a2_members():
    # Two conjugate-pair members whose moduli cannot share one rotation.
    h = rational_so2(Fraction(1, 3))
    members = [
        symmetric_apply_transform(h, canonical_a2(3, rational(2))),
        symmetric_apply_transform(h, canonical_a2(4, rational(5))),
    ]
    d = decide_A_transformable_sym(members)
    assert d.outcome == "no"
