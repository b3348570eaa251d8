from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from pw_hilbert.linalg import ExactMatrix, bareiss_rank

matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=200)
@given(matrices)
def test_bareiss_matches_sympy(rows):
    assert bareiss_rank(rows) == sympy.Matrix(rows).rank()


@given(matrices, st.integers(1, 5))
def test_rational_rows(rows, q):
    m = ExactMatrix(len(rows), len(rows[0]), [[Fraction(x, q) for x in r] for r in rows])
    assert m.rank() == sympy.Matrix(rows).rank()


def test_low_rank_products():
    a = ExactMatrix(3, 1, [[1], [2], [3]])
    b = ExactMatrix(1, 3, [[1, -1, 2]])
    assert (a @ b).rank() == 1
    assert not (a @ b).is_isomorphism()
    assert ExactMatrix.identity(4).is_isomorphism()


def test_empty_and_nonsquare():
    assert ExactMatrix(0, 0).is_isomorphism()
    assert ExactMatrix(2, 0).rank() == 0
    assert not ExactMatrix(2, 1, [[1], [0]]).is_isomorphism()


def test_json_rationals():
    assert ExactMatrix(1, 2, [[Fraction(1, 2), 3]]).to_json() == [["1/2", "3/1"]]
