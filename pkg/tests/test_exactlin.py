import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflexfan import exactlin as ex

E1, E2, E3, E4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)


def test_det_identity():
    assert ex.det((E1, E2, E3, E4)) == 1


def test_det_triangular_cases():
    assert ex.det((E1, E2, E3, (1, 1, 1, 2))) == 2
    assert ex.det((E1, E2, E3, (1, 1, 1, 1))) == 1


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        ex.det((E1, E2))


def test_det_singular():
    assert ex.det((E1, E2, E3, (1, 1, 0, 0))) == 0


def test_kernel_forced_dependence():
    assert ex.kernel_basis([E1, E2, E3, E4, (1, 1, 1, 1)]) == [(1, 1, 1, 1, -1)]


def test_kernel_independent_columns():
    assert ex.kernel_basis([E1, E2, E3, E4]) == []


def test_kernel_parallel_columns():
    assert ex.kernel_basis([(1, 0, 0, 0), (2, 0, 0, 0)]) == [(2, -1)]


def test_dual_basis_identity():
    assert ex.dual_basis((E1, E2, E3, E4)) == [E1, E2, E3, E4]


def test_dual_basis_shear():
    dual = ex.dual_basis((E1, E2, E3, (1, 1, 1, 1)))
    assert dual == [(1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1), (0, 0, 0, 1)]


def test_dual_basis_rejects_non_unimodular():
    with pytest.raises(ex.NonUnimodularBasisError):
        ex.dual_basis((E1, E2, E3, (0, 0, 0, 2)))


def _random_unimodular(rng, n=4, steps=12):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-3, 3)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    return tuple(tuple(r) for r in m)


def test_det_of_random_unimodular_products():
    rng = random.Random(20260809)
    for _ in range(200):
        m = _random_unimodular(rng)
        assert ex.det(m) in (1, -1)


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=4, max_size=4),
        min_size=1,
        max_size=6,
    )
)
def test_kernel_vectors_annihilate_exactly(columns):
    cols = [tuple(c) for c in columns]
    basis = ex.kernel_basis(cols)
    for vec in basis:
        assert ex.content(vec) == 1
        combo = [
            sum(vec[i] * cols[i][c] for i in range(len(cols)))
            for c in range(4)
        ]
        assert combo == [0, 0, 0, 0]
    # basis size matches the rank deficiency
    assert len(basis) == len(cols) - ex.rank(cols)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_dual_basis_pairing_is_identity(seed):
    rng = random.Random(seed)
    m = _random_unimodular(rng)
    dual = ex.dual_basis(m)
    for i in range(4):
        for j in range(4):
            assert ex.dot(dual[i], m[j]) == (1 if i == j else 0)


def test_complete_to_basis_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        m = _random_unimodular(rng)
        k = rng.randint(1, 3)
        rows = m[:k]
        full = ex.complete_to_basis(rows)
        assert list(full[:k]) == list(rows)
        assert ex.det(tuple(full)) in (1, -1)


def test_complete_to_basis_rejects_unsaturated():
    with pytest.raises(ex.NonUnimodularBasisError):
        ex.complete_to_basis(((2, 0, 0, 0),))


def test_solve_unique_matches_cramer():
    m = ((2, 1, 0, 0), (0, 1, 0, 0), (0, 0, 3, 1), (0, 0, 0, 1))
    nums, den = ex.solve_unique(m, (3, 1, 7, 2))
    assert den == ex.det(m)
    # verify m x = rhs exactly over the rationals
    for r in range(4):
        assert sum(m[r][c] * nums[c] for c in range(4)) == den * (3, 1, 7, 2)[r]
