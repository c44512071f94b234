import sympy
import pytest
from hypothesis import given, strategies as st

from gapvir.errors import DegenerateInputError
from gapvir.linalg import SpanTracker, matvec, rank, solve, vandermonde
from gapvir.scalar import Scalar

small = st.integers(-5, 5)


def as_sympy(A):
    return sympy.Matrix([[sympy.Rational(str(x)) for x in row] for row in A])


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(small, min_size=n, max_size=n))))
def test_solve_and_rank_agree_with_sympy(Ab):
    A, b = Ab
    A = [[Scalar(x) for x in row] for row in A]
    b = [Scalar(x) for x in b]
    M = as_sympy(A)
    assert rank(A) == M.rank()
    if M.det() == 0:
        with pytest.raises(DegenerateInputError):
            solve(A, b)
    else:
        x = solve(A, b)
        assert matvec(A, x) == b


def test_vandermonde():
    V = vandermonde([Scalar(2), Scalar(3)], 3)
    assert V == [[1, 2, 4], [1, 3, 9]]


def test_span_tracker():
    sp = SpanTracker()
    assert sp.add({"a": Scalar(1), "b": Scalar(2)})
    assert not sp.add({"a": Scalar(2), "b": Scalar(4)})
    assert not sp.contains({"a": Scalar(1)})
    assert sp.add({"b": Scalar(1)})
    assert sp.contains({"a": Scalar(1)}) and len(sp) == 2
