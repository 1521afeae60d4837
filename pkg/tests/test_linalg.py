from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewrec import _purekernel
from skewrec._kernel import backend_name, matmul, rref
from skewrec.errors import UsageError
from skewrec.linalg import (Field, Matrix, Subspace, nullspace_basis, rank,
                            solve_linear, solve_matrix)

Q = Field.rationals()
F5 = Field.prime(5)


def M(rows, field=Q, ncols=None):
    return Matrix(field, rows, ncols)


def col(entries, field=Q):
    return Matrix(field, [[x] for x in entries], 1)


def test_field_validation():
    with pytest.raises(UsageError):
        Field.prime(6)
    assert Field.prime(2).char == 2
    assert Q.coerce("3/4") == Fraction(3, 4)
    assert F5.coerce("3/4") == 3 * pow(4, 3, 5) % 5
    assert F5.coerce(-1) == 4


def test_solve_identity():
    x = solve_linear(Matrix.identity(Q, 2), col([1, 2]))
    assert x.to_lists() == [[1], [2]]


def test_solve_inconsistent():
    assert solve_linear(M([[1, 1], [2, 2]]), col([1, 3])) is None


def test_solve_diagonal_rationals():
    # oracle: direct substitution, 2x = 1 and 3y = 1
    x = solve_linear(M([[2, 0], [0, 3]]), col([1, 1]))
    assert x.to_lists() == [[Fraction(1, 2)], [Fraction(1, 3)]]


def test_nullspace_identity_empty():
    assert nullspace_basis(Matrix.identity(Q, 3)) == []


def test_nullspace_zero_matrix():
    vecs = nullspace_basis(Matrix.zeros(Q, 2, 3))
    assert len(vecs) == 3


def test_nullspace_rank_two_of_three():
    vecs = nullspace_basis(M([[1, 1, 0], [0, 0, 1]]))
    assert len(vecs) == 1
    assert vecs[0].transpose().to_lists() == [[1, -1, 0]]


def test_rank_examples():
    assert rank(Matrix.identity(Q, 4)) == 4
    assert rank(Matrix.zeros(Q, 3, 2)) == 0
    assert rank(M([[1, 2], [2, 4]])) == 1


def test_inverse():
    a = M([[1, 2], [3, 4]])
    ai = a.inverse()
    assert a @ ai == Matrix.identity(Q, 2)
    assert M([[1, 1], [1, 1]]).inverse() is None


def test_overflow_free_rationals():
    # entries chosen to overflow 64-bit intermediates
    big = 2 ** 40
    a = M([[big, 1], [1, Fraction(1, 3 ** 30)]])
    b = col([big * big, 7])
    x = solve_linear(a, b)
    assert a @ x == b
    assert isinstance((a @ x).entry(0, 0), (int, Fraction))


small = st.integers(min_value=-6, max_value=6)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_nullity(m, n, data):
    rows = [[data.draw(small) for _ in range(n)] for _ in range(m)]
    a = M(rows)
    assert rank(a) + len(nullspace_basis(a)) == n


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solvable_systems_solve_exactly(m, n, data):
    rows = [[data.draw(small) for _ in range(n)] for _ in range(m)]
    xs = [[data.draw(small)] for _ in range(n)]
    a = M(rows)
    b = a @ Matrix(Q, xs, 1)
    x = solve_linear(a, b)
    assert x is not None
    assert a @ x == b


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_backends_agree(m, n, data):
    rows = [[data.draw(small) % 5 for _ in range(n)] for _ in range(m)]
    assert rref(rows, n, 5) == _purekernel.rref(rows, n, 5)
    rows_q = [[Fraction(data.draw(small), 1 + abs(data.draw(small)))
               for _ in range(n)] for _ in range(m)]
    got = rref(rows_q, n, 0)
    want = _purekernel.rref(rows_q, n, 0)
    assert got[1] == want[1]
    assert [[Fraction(x) for x in r] for r in got[0]] == \
        [[Fraction(x) for x in r] for r in want[0]]
    other = [[data.draw(small) % 5 for _ in range(3)] for _ in range(n)]
    assert matmul(rows, other, 5) == _purekernel.matmul(rows, other, 5)


def test_backend_name_known():
    assert backend_name() in ("compiled", "pure")


def test_prime_field_solve():
    a = M([[2, 0], [0, 3]], F5)
    x = solve_linear(a, col([1, 1], F5))
    assert (a @ x).to_lists() == [[1], [1]]


def test_subspace_roundtrip():
    s = Subspace.span(Q, 3, M([[1, 1, 0], [0, 2, 2]]))
    assert s.dim == 2
    assert s.contains([1, 3, 2])
    assert not s.contains([0, 0, 1])
    co = s.coords([1, 3, 2])
    back = [0, 0, 0]
    for c, row in zip(co, s.basis.rows):
        back = [b + c * r for b, r in zip(back, row)]
    assert [Fraction(x) for x in back] == [1, 3, 2]


def test_solve_matrix_multi_rhs():
    a = M([[1, 2], [0, 1]])
    b = Matrix.identity(Q, 2)
    x = solve_matrix(a, b)
    assert a @ x == b
