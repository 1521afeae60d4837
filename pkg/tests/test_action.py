import pytest

from skewrec.action import new_group_action, restrict_action_to_corner
from skewrec.algebra import Algebra
from skewrec.errors import (ClosureCapExceeded, NotAutomorphism, NotIdempotent,
                            UsageError)
from skewrec.linalg import Field
from skewrec.quiver import QuiverPresentation, path_algebra

Q = Field.rationals()


def dual_numbers(f=Q):
    return Algebra(f, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0])


def k_times_k():
    return path_algebra(Q, QuiverPresentation(2, [], [], 2))[0]


def test_trivial_group():
    a = dual_numbers()
    act = new_group_action(a, [[[1, 0], [0, 1]]])
    assert act.order == 1
    assert act.order_invertible()


def test_c2_sign_action():
    a = dual_numbers()
    act = new_group_action(a, [[[1, 0], [0, -1]]])   # closure adds identity
    assert act.order == 2
    assert act.mult[1][1] == act.identity or act.mult[0][0] == act.identity
    g = 1 - act.identity
    assert act.apply(g, [0, 1]) == [0, -1]
    assert act.apply(act.identity, [3, 4]) == [3, 4]


def test_right_action_law_via_table():
    a = dual_numbers()
    act = new_group_action(a, [[[1, 0], [0, -1]]])
    vec = [2, 5]
    for h in range(act.order):
        for g in range(act.order):
            lhs = act.apply(g, act.apply(h, vec))
            rhs = act.apply(act.mult[h][g], vec)
            assert lhs == rhs


def test_non_automorphism_located():
    a = dual_numbers()
    with pytest.raises(NotAutomorphism):
        new_group_action(a, [[[1, 0], [1, 1]]])   # x -> 1 + x


def test_singular_matrix_rejected():
    a = dual_numbers()
    with pytest.raises(NotAutomorphism):
        new_group_action(a, [[[1, 0], [0, 0]]])


def test_order_invertibility_in_prime_fields():
    f2 = Field.prime(2)
    k = Algebra(f2, [[[1]]], [1])
    c2 = new_group_action(k, [[[1]], [[1]]], table=[[0, 1], [1, 0]])
    assert not c2.order_invertible()
    c3 = new_group_action(k, [[[1]], [[1]], [[1]]],
                          table=[[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert c3.order_invertible()   # 3 = 1 in F_2


def test_invariant_idempotents():
    a = k_times_k()
    swap = new_group_action(a, [[[0, 1], [1, 0]]])
    assert swap.is_invariant_idempotent([1, 1])
    assert swap.is_invariant_idempotent([0, 0])
    assert not swap.is_invariant_idempotent([1, 0])
    with pytest.raises(NotIdempotent):
        swap.is_invariant_idempotent([2, 0])


def test_fixed_subalgebra_closed_under_multiplication():
    a = k_times_k()
    swap = new_group_action(a, [[[0, 1], [1, 0]]])
    fixed = swap.fixed_subalgebra_basis()
    assert fixed.nrows == 1
    for u in fixed.rows:
        for v in fixed.rows:
            prod = a.multiply(list(u), list(v))
            from skewrec.linalg import Subspace
            assert Subspace.span(Q, 2, fixed).contains(prod)


def test_closure_cap():
    a = k_times_k()
    with pytest.raises(ClosureCapExceeded):
        new_group_action(a, [[[0, 1], [1, 0]]], cap=1)


def test_explicit_table_validation():
    a = dual_numbers()
    ident = [[1, 0], [0, 1]]
    act = new_group_action(a, [ident, ident], table=[[0, 1], [1, 0]])
    assert act.order == 2
    with pytest.raises(UsageError):
        new_group_action(a, [ident, ident], table=[[0, 0], [0, 0]])


def test_restrict_action_to_corner():
    a, _ = path_algebra(Q, QuiverPresentation(2, [(0, 0)],
                                              [{"terms": [[1, [0, 0]]]}], 3))
    act = new_group_action(a, [[[1, 0, 0], [0, 1, 0], [0, 0, -1]]])
    corner, embed = a.corner_algebra(a.idempotents[0])
    sub = restrict_action_to_corner(act, corner, embed, a.idempotents[0])
    assert sub.order == act.order
    assert sub.algebra is corner
