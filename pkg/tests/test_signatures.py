"""Signature data model, transforms, and matrix conventions."""

import random
from fractions import Fraction

import pytest

from holo.errors import WrongArity
from holo.scalars import alpha, i_unit, one, rational, sqrt2, zero
from holo.signatures import (
    DenseSignature,
    SymmetricSignature,
    Transform,
    apply_transform,
    compress,
    dense_from_signature_matrix,
    diag_alpha,
    expand,
    hadamard,
    hat_transform,
    identity,
    is_degenerate,
    rational_so2,
    signature_matrix,
    symmetric_apply_transform,
    tensor_product,
    z_basis,
    z_prime,
)

from conftest import proportional_dense


def rationals(f):
    return [e.rational_value() for e in f.entries]


def test_expand_examples():
    assert rationals(expand(SymmetricSignature([1, 0, 1]))) == [1, 0, 0, 1]
    assert rationals(expand(SymmetricSignature([0, 1, 0, 0]))) == [0, 1, 1, 0, 1, 0, 0, 0]
    # full notation of the generalized Fibonacci gate
    assert rationals(expand(SymmetricSignature([3, 1, 3, 1]))) == [3, 1, 1, 3, 1, 3, 3, 1]


def test_compress_examples():
    assert compress(DenseSignature(2, [1, 0, 0, 1])) == SymmetricSignature([1, 0, 1])
    assert compress(DenseSignature(3, [3, 1, -1, -3, -1, -3, 3, 1])) is None
    assert compress(DenseSignature(2, [0, 0, 0, 0])) == SymmetricSignature([0, 0, 0])


def test_round_trips():
    rng = random.Random(11)
    for _ in range(10):
        sym = SymmetricSignature([rng.randint(-3, 3) for _ in range(5)])
        assert compress(expand(sym)) == sym


def test_apply_transform_examples():
    eq2 = DenseSignature(2, [1, 0, 0, 1])
    assert apply_transform(identity(), eq2) == eq2
    assert rationals(hat_transform(eq2)) == [0, 2, 2, 0]
    flip = Transform(1, 0, 0, -1)
    exact_one = expand(SymmetricSignature([0, 1, 0, 0]))
    flipped = apply_transform(flip, exact_one)
    assert flipped == expand(SymmetricSignature([0, -1, 0, 0]))


def test_hat_of_tensor_power():
    u = DenseSignature(1, [1, 0])
    f = tensor_product(tensor_product(u, u), u)
    assert all(e == one() for e in hat_transform(f).entries)


def test_hat_single_weight_support():
    # (1,i)^3 pairs to zero against (1,i): hat support is the single point 111.
    ui = DenseSignature(1, [one(), i_unit()])
    f = tensor_product(tensor_product(ui, ui), ui)
    hat = hat_transform(f)
    support = hat.support()
    assert support == [7]
    # and expand([1,0,-1,0]) = ((1,i)^3 + (1,-i)^3)/2 checks against Z'.
    f2 = expand(SymmetricSignature([1, 0, -1, 0]))
    hat2 = hat_transform(f2)
    weights = {bin(x).count("1") for x in hat2.support()}
    assert weights == {0, 3}


def test_transform_composition():
    rng = random.Random(2)
    for _ in range(8):
        s = rational_so2(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        t = rational_so2(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        f = DenseSignature(3, [rng.randint(-2, 2) for _ in range(8)])
        assert apply_transform(s, apply_transform(t, f)) == apply_transform(s @ t, f)


def test_hat_conjugation_lemma():
    # Rotations become diagonal on hat entries: hat(H f) = diag(a-bi, a+bi) hat(f).
    rng = random.Random(3)
    for _ in range(8):
        t = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        h = rational_so2(t)
        a, b = h[0][0], h[0][1]
        d = Transform(a - b * i_unit(), 0, 0, a + b * i_unit())
        f = DenseSignature(2, [rng.randint(-2, 2) for _ in range(4)])
        assert hat_transform(apply_transform(h, f)) == apply_transform(d, hat_transform(f))


def test_signature_matrix_fixture():
    f = expand(SymmetricSignature([0, 0, 1, 0, 0]))
    m = signature_matrix(f)
    flat = [[e.rational_value() for e in row] for row in m]
    assert flat == [[0, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 0], [1, 0, 0, 0]]
    assert dense_from_signature_matrix(m) == f


def test_signature_matrix_index_convention():
    entries = [zero()] * 16
    entries[0b0001] = one()  # x = 0001: x4 = 1
    f = DenseSignature(4, entries)
    m = signature_matrix(f)
    # row (x1,x2) = 00, column (x4,x3) = (1,0)
    assert m[0][2] == one()
    assert sum(1 for row in m for e in row if not e.is_zero()) == 1


def test_signature_matrix_wrong_arity():
    with pytest.raises(WrongArity):
        signature_matrix(DenseSignature(3, [0] * 8))


def test_is_degenerate():
    f = DenseSignature(2, [1, 0, 0, 0])
    factors = is_degenerate(f)
    assert factors is not None and [rationals(u) for u in factors] == [[1, 0], [1, 0]]
    assert is_degenerate(DenseSignature(2, [1, 0, 0, 1])) is None
    assert is_degenerate(expand(SymmetricSignature([3, 1, 3, 1]))) is None


def test_arity_guards():
    with pytest.raises(WrongArity):
        DenseSignature(0, [1])
    with pytest.raises(WrongArity):
        DenseSignature(13, [0] * (1 << 13))
    # overridable
    f = DenseSignature(13, [0] * (1 << 13), max_arity=13)
    assert f.arity == 13


def test_symmetric_apply_transform_matches_dense():
    rng = random.Random(4)
    for _ in range(6):
        t = rational_so2(Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        sym = SymmetricSignature([rng.randint(-2, 2) for _ in range(6)])
        assert expand(symmetric_apply_transform(t, sym)) == apply_transform(t, expand(sym))


def test_named_transforms():
    assert hadamard().is_orthogonal()
    assert rational_so2(Fraction(1, 2)).is_orthogonal()
    assert not z_basis().is_orthogonal()
    assert z_prime() @ identity() == z_prime()
    assert diag_alpha().det() == alpha()
    # Z = D H2 from the named constants
    d = Transform(1, 0, 0, i_unit())
    assert d @ hadamard() == z_basis()
