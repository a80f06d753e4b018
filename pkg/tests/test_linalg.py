"""Exact matrices over extension elements: product, inverse, det, Galois."""
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from severi import (
    as_scaled_permutation,
    cyclic_cocycle,
    det,
    from_rows,
    galois_matrix,
    identity,
    inverse,
    make_shanks_cubic,
    mul,
    pgl_equal,
    rank,
)
from severi.errors import ShapeMismatch, Singular
from severi.linalg import matrix_from_json, matrix_to_json, rref


def F(x):
    return Fraction(x)


def rand_matrix(L, size, rng, lo=-4, hi=4):
    return from_rows(L, [[L.el([F(rng.randint(lo, hi)) for _ in range(3)])
                          for _ in range(size)] for _ in range(size)])


def test_inverse_identity(shanks1):
    I3 = identity(shanks1, 3)
    assert inverse(I3) == I3


def test_companion_determinant(shanks1):
    A = cyclic_cocycle(shanks1, F(2)).at_generator
    assert det(A) == shanks1.from_base(F(2))


def test_mul_inverse_random_4x4(shanks1):
    rng = random.Random(7)
    found = 0
    while found < 3:
        A = rand_matrix(shanks1, 4, rng)
        if det(A).is_zero():
            continue
        assert mul(A, inverse(A)) == identity(shanks1, 4)
        found += 1


def test_singular_inverse_rejected(shanks1):
    Z = from_rows(shanks1, [[1, 1], [1, 1]])
    with pytest.raises(Singular):
        inverse(Z)


def test_shape_mismatch(shanks1):
    A = identity(shanks1, 2)
    B = identity(shanks1, 3)
    with pytest.raises(ShapeMismatch):
        mul(A, B)


def test_galois_matrix_fixes_base_entries(shanks1):
    A = from_rows(shanks1, [[1, 2], [3, Fraction(1, 2)]])
    assert galois_matrix(shanks1, A, 1) == A


def test_galois_matrix_cycles_normal_basis(shanks1, nb1):
    l1, l2, l3 = nb1.elements
    D = from_rows(shanks1, [[l1, 0, 0], [0, l2, 0], [0, 0, l3]])
    Dnext = from_rows(shanks1, [[l2, 0, 0], [0, l3, 0], [0, 0, l1]])
    assert galois_matrix(shanks1, D, 1) == Dnext


def test_galois_matrix_full_orbit_is_identity_map(shanks1):
    rng = random.Random(0)
    A = rand_matrix(shanks1, 3, rng)
    assert galois_matrix(shanks1, A, 3) == A


def test_scaled_permutation_companion(shanks1):
    A = cyclic_cocycle(shanks1, F(2)).at_generator
    sp = as_scaled_permutation(A)
    assert sp is not None
    # column j feeds row perm[j]; X -> row 1, Y -> row 2, Z -> row 0
    assert sp.perm == (1, 2, 0)
    scales = [sp.scales[i] for i in range(3)]
    assert scales.count(shanks1.one()) == 2
    assert shanks1.from_base(F(2)) in scales


def test_scaled_permutation_identity(shanks1):
    sp = as_scaled_permutation(identity(shanks1, 3))
    assert sp.perm == (0, 1, 2)
    assert all(s == shanks1.one() for s in sp.scales)


def test_scaled_permutation_rejects_dense(shanks1):
    A = from_rows(shanks1, [[1, 1], [1, 1]])
    assert as_scaled_permutation(A) is None


def test_rank_and_rref(shanks1):
    A = from_rows(shanks1, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(A) == 2
    R, pivots = rref(A)
    assert len(pivots) == 2
    assert R.at(0, pivots[0]) == shanks1.one()


def test_pgl_equal(shanks1):
    A = from_rows(shanks1, [[1, 2], [3, 4]])
    th = shanks1.theta()
    B = A.scale(th)
    assert pgl_equal(A, B)
    assert not pgl_equal(A, identity(shanks1, 2))


def test_matrix_json_round_trip(shanks1):
    A = from_rows(shanks1, [[shanks1.theta(), Fraction(1, 3)], [0, 1]])
    blob = json.loads(json.dumps(matrix_to_json(A)))
    assert matrix_from_json(shanks1, blob) == A


# ---------------------------------------------------------------------------
# sampled laws
# ---------------------------------------------------------------------------

seeds = st.integers(min_value=0, max_value=10_000)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_det_multiplicative(seed):
    L = make_shanks_cubic(1)
    rng = random.Random(seed)
    A = rand_matrix(L, 3, rng, -2, 2)
    B = rand_matrix(L, 3, rng, -2, 2)
    assert det(mul(A, B)) == det(A) * det(B)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_galois_distributes_over_mul(seed):
    L = make_shanks_cubic(1)
    rng = random.Random(seed)
    A = rand_matrix(L, 3, rng, -2, 2)
    B = rand_matrix(L, 3, rng, -2, 2)
    assert galois_matrix(L, mul(A, B), 1) == mul(galois_matrix(L, A, 1),
                                                 galois_matrix(L, B, 1))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_inverse_involutive(seed):
    L = make_shanks_cubic(1)
    rng = random.Random(seed)
    A = rand_matrix(L, 3, rng, -2, 2)
    if det(A).is_zero():
        return
    assert inverse(inverse(A)) == A
