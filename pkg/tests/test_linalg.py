from fractions import Fraction

from hypothesis import given, strategies as st

from treelang.linalg import nullspace, row_reduce


def test_row_reduce_identity():
    rows, piv = row_reduce([[2, 0], [0, 3]], 2)
    assert piv == [0, 1]
    assert all(rows[i][j] == 0 for i in range(2) for j in range(2) if i != j)


def test_nullspace_simple():
    basis = nullspace([[1, 1, 0], [0, 0, 1]], 3)
    assert basis == [[Fraction(-1), Fraction(1), Fraction(0)]]


def test_nullspace_of_empty_system():
    assert len(nullspace([], 3)) == 3


matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), max_size=4)
    .map(lambda rows: (rows, c)))


@given(matrices)
def test_nullspace_vectors_are_killed(data):
    rows, ncols = data
    basis = nullspace(rows, ncols)
    for v in basis:
        assert all(sum(Fraction(a) * x for a, x in zip(r, v)) == 0 for r in rows)
    _, piv = row_reduce(rows, ncols)
    assert len(basis) + len(piv) == ncols
