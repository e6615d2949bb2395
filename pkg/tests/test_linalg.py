from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from fiatcells import linalg
from fiatcells.linalg import SparseEchelon, Subspace


def test_rref_simple():
    rows = [(2, 4, 0), (1, 2, 1)]
    basis = linalg.rref(rows)
    assert basis == [
        (Fraction(1), Fraction(2), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_rref_handles_fractions():
    rows = [(Fraction(1, 2), Fraction(1, 3))]
    assert linalg.rref(rows) == [(Fraction(1), Fraction(2, 3))]


def test_nullspace_matches_rank():
    rows = [(1, 2, 3), (2, 4, 6), (0, 1, 1)]
    ns = linalg.nullspace(rows, 3)
    assert len(ns) == 1
    for v in ns:
        assert all(linalg.dot(linalg.vec(r), v) == 0 for r in rows)


def test_solve_consistent_and_inconsistent():
    rows = [(1, 1), (1, -1)]
    x = linalg.solve(rows, (2, 0))
    assert x == (Fraction(1), Fraction(1))
    rows = [(1, 1), (2, 2)]
    assert linalg.solve(rows, (1, 3)) is None


def test_inverse_roundtrip():
    m = [(1, 2), (3, 5)]
    inv = linalg.inverse(m)
    prod = linalg.mat_mul(m, inv)
    assert prod == [list(row) for row in linalg.identity_rows(2)] or prod == [
        tuple(row) for row in linalg.identity_rows(2)
    ]
    assert linalg.inverse([(1, 2), (2, 4)]) is None


def test_subspace_equality_is_canonical():
    a = Subspace.from_vectors([(1, 1, 0), (0, 0, 2)], 3)
    b = Subspace.from_vectors([(3, 3, 2), (0, 0, 1), (2, 2, 2)], 3)
    assert a == b
    assert a.dim == 2
    assert a.contains((5, 5, 7))
    assert not a.contains((1, 0, 0))


def test_subspace_sum_and_intersect():
    a = Subspace.from_vectors([(1, 0, 0), (0, 1, 0)], 3)
    b = Subspace.from_vectors([(0, 1, 0), (0, 0, 1)], 3)
    assert a.sum(b).dim == 3
    inter = a.intersect(b)
    assert inter.dim == 1
    assert inter.contains((0, 1, 0))


def test_subspace_reduce_kills_members():
    a = Subspace.from_vectors([(1, 2, 0)], 3)
    assert linalg.is_zero(a.reduce((2, 4, 0)))
    res = a.reduce((0, 0, 1))
    assert res == (Fraction(0), Fraction(0), Fraction(1))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4),
        min_size=1,
        max_size=6,
    )
)
def test_rank_nullity_property(rows):
    rank = linalg.rank(rows, 4)
    ns = linalg.nullspace(rows, 4)
    assert rank + len(ns) == 4
    for v in ns:
        for r in rows:
            assert linalg.dot(linalg.vec(r), v) == 0


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=3),
        min_size=1,
        max_size=5,
    ),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3),
)
def test_span_membership_stable(rows, coeffs):
    span = Subspace.from_vectors(rows, 3)
    combo = linalg.zeros(3)
    for c, r in zip(coeffs, rows):
        combo = linalg.add(combo, linalg.scale(c, linalg.vec(r)))
    assert span.contains(combo)
    again = Subspace.from_vectors(list(rows) + [combo], 3)
    assert span == again


def test_sparse_echelon_incremental():
    ech = SparseEchelon(4)
    assert ech.insert({0: 1, 2: 2})
    assert not ech.insert({0: 2, 2: 4})
    assert ech.insert({1: 1})
    assert ech.dim == 2
    assert ech.contains({0: 3, 1: 0, 2: 6})
    red = ech.reduce({0: 1, 1: 1, 2: 2, 3: 5})
    assert red == {3: Fraction(5)}


def _dense_rref_reference(rows, ncols):
    """Naive dense reduced row echelon form, as an independent oracle."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivot_row = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(pivot_row, len(mat)) if mat[r][col] != 0), None
        )
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        lead = mat[pivot_row][col]
        mat[pivot_row] = [x / lead for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
    return [tuple(row) for row in mat[:pivot_row]]


@settings(max_examples=80, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-7, max_value=7), min_size=5, max_size=5),
        min_size=1,
        max_size=7,
    )
)
def test_sparse_echelon_matches_dense_reference(rows):
    assert linalg.rref(rows, 5) == _dense_rref_reference(rows, 5)
