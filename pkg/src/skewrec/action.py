"""Finite groups acting on an algebra by automorphisms.

Elements are invertible matrices applied on the right of coordinate rows
(a^g = a @ S_g), so the right-action law (a^h)^g = a^{hg} makes
g |-> S_g multiplicative: S_g @ S_h = S_{gh}.  The multiplication table
stores exactly that product.

Non-faithful actions (distinct group elements with equal matrices, e.g.
a group acting trivially) are supported by passing the table explicitly;
it cannot be inferred from the matrices then.
"""

from skewrec.errors import (ClosureCapExceeded, NotAutomorphism, NotClosed,
                            NotIdempotent, NotInvariant, OrderNotInvertible,
                            UsageError)
from skewrec.linalg import Matrix, Subspace


class GroupAction:

    def __init__(self, algebra, mats, identity, mult, labels=None):
        self.algebra = algebra
        self.mats = mats
        self.identity = identity
        self.mult = mult
        self.labels = labels or [f"g{i}" for i in range(len(mats))]
        self._inv = [None] * len(mats)
        for g in range(len(mats)):
            for h in range(len(mats)):
                if mult[g][h] == identity:
                    self._inv[g] = h
        if any(v is None for v in self._inv):
            raise UsageError("multiplication table has no inverses")

    @property
    def order(self):
        return len(self.mats)

    def inverse(self, g):
        return self._inv[g]

    def matrix(self, g):
        return self.mats[g]

    def apply(self, g, vec):
        return (Matrix.row_vector(self.algebra.field, list(vec))
                @ self.mats[g]).rows[0]

    def order_invertible(self):
        return self.algebra.field.invertible_int(self.order)

    def require_order_invertible(self):
        if not self.order_invertible():
            raise OrderNotInvertible(self.order, self.algebra.field.p)

    def is_invariant_idempotent(self, e):
        e = [self.algebra.field.coerce(x) for x in e]
        if not self.algebra.is_idempotent(e):
            raise NotIdempotent(e)
        return all(self.apply(g, e) == e for g in range(self.order))

    def is_abelian(self):
        n = self.order
        return all(self.mult[g][h] == self.mult[h][g]
                   for g in range(n) for h in range(n))

    def fixed_subalgebra_basis(self):
        """Canonical basis rows of {a : a^g = a for all g}."""
        f = self.algebra.field
        n = self.algebra.dim
        stacked = None
        ident = Matrix.identity(f, n)
        for g in range(self.order):
            diff = self.mats[g] - ident
            stacked = diff if stacked is None else stacked.hstack(diff)
        return stacked.row_kernel()


def _check_automorphism(algebra, s, g):
    f = algebra.field
    n = algebra.dim
    if s.nrows != n or s.ncols != n:
        raise UsageError("automorphism matrix has the wrong shape")
    if n == 0:
        return
    if s.rank() != n:
        raise NotAutomorphism(g, reason="matrix is singular")
    unit_row = Matrix.row_vector(f, algebra.unit)
    if (unit_row @ s).rows[0] != algebra.unit:
        raise NotAutomorphism(g, reason="does not fix the unit")
    left = algebra.left_matrices()
    for i in range(n):
        lhs = left[i] @ s                       # rows: (b_i b_j)^g
        sig = s.rows[i]
        limg = algebra.left_mul_matrix(sig)
        rhs = s @ limg                          # rows: b_i^g * b_j^g
        if lhs != rhs:
            j = next(j for j in range(n) if lhs.rows[j] != rhs.rows[j])
            raise NotAutomorphism(g, i, j)


def new_group_action(algebra, matrices, labels=None, table=None, cap=1024):
    """Validate matrices as automorphisms and assemble the group.

    Without an explicit table the set is deduplicated, closed under
    products (up to `cap` elements) and the table inferred by matching
    product matrices.  With a table, the element list is taken as given
    (duplicates allowed) and the table checked for consistency.
    """
    f = algebra.field
    mats = []
    for m in matrices:
        if isinstance(m, Matrix):
            mats.append(Matrix(f, m.to_lists(), algebra.dim))
        else:
            mats.append(Matrix(f, [[f.coerce(x) for x in row] for row in m],
                               algebra.dim))
    if not mats:
        raise UsageError("at least one matrix is required")

    if table is not None:
        n = len(mats)
        for g, s in enumerate(mats):
            _check_automorphism(algebra, s, g)
        if len(table) != n or any(len(r) != n for r in table):
            raise UsageError("multiplication table has the wrong shape")
        for g in range(n):
            for h in range(n):
                k = table[g][h]
                if not 0 <= k < n:
                    raise UsageError("table entry out of range")
                if mats[g] @ mats[h] != mats[k]:
                    raise NotClosed(g, h)
        ident = None
        for e in range(n):
            if all(table[e][g] == g and table[g][e] == g for g in range(n)):
                ident = e
                break
        if ident is None:
            raise UsageError("table has no identity element")
        if algebra.dim and mats[ident] != Matrix.identity(f, algebra.dim):
            raise UsageError("identity element must carry the identity matrix")
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    if table[table[g][h]][k] != table[g][table[h][k]]:
                        raise UsageError("table is not associative")
        return GroupAction(algebra, mats, ident, table, labels)

    # infer: dedupe, close, match products
    uniq = []
    seen = {}
    lab = []
    for idx, m in enumerate(mats):
        key = tuple(tuple(r) for r in m.rows)
        if key in seen:
            continue
        seen[key] = len(uniq)
        uniq.append(m)
        lab.append(labels[idx] if labels and idx < len(labels) else f"g{len(uniq)-1}")
    for g, s in enumerate(uniq):
        _check_automorphism(algebra, s, g)
    i = 0
    while i < len(uniq):
        j = 0
        while j < len(uniq):
            prod = uniq[i] @ uniq[j]
            key = tuple(tuple(r) for r in prod.rows)
            if key not in seen:
                if len(uniq) >= cap:
                    raise ClosureCapExceeded(cap)
                _check_automorphism(algebra, prod, len(uniq))
                seen[key] = len(uniq)
                uniq.append(prod)
                lab.append(f"g{len(uniq)-1}")
            j += 1
        i += 1
    n = len(uniq)
    mult = [[seen[tuple(tuple(r) for r in (uniq[g] @ uniq[h]).rows)]
             for h in range(n)] for g in range(n)]
    ident = None
    target = Matrix.identity(f, algebra.dim)
    for g in range(n):
        if uniq[g] == target:
            ident = g
            break
    if ident is None:
        raise UsageError("closure did not produce the identity matrix")
    return GroupAction(algebra, uniq, ident, mult, lab)


def restrict_action_to_corner(action, corner, embed, e):
    """Action on eAe induced by an action fixing the idempotent e."""
    if not action.is_invariant_idempotent(e):
        bad = next(g for g in range(action.order)
                   if action.apply(g, e) != [action.algebra.field.coerce(x)
                                             for x in e])
        raise NotInvariant(bad)
    span = Subspace.span(corner.field, action.algebra.dim, embed)
    mats = []
    for g in range(action.order):
        rows = []
        for a in range(corner.dim):
            img = action.apply(g, embed.rows[a])
            co = span.coords(img)
            if co is None:
                raise UsageError("corner is not stable under the action")
            rows.append(co)
        mats.append(Matrix(corner.field, rows, corner.dim) if corner.dim
                    else Matrix.zeros(corner.field, 0, 0))
    return new_group_action(corner, mats, labels=list(action.labels),
                            table=[row[:] for row in action.mult])


def quotient_action(action, quotient, proj, lift_columns):
    """Action on A/I induced by an action preserving the ideal I."""
    f = quotient.field
    mats = []
    for g in range(action.order):
        rows = []
        for c in lift_columns:
            vec = [0] * action.algebra.dim
            vec[c] = 1
            img = action.apply(g, vec)
            rows.append((Matrix.row_vector(f, img) @ proj).rows[0])
        mats.append(Matrix(f, rows, quotient.dim) if quotient.dim
                    else Matrix.zeros(f, 0, 0))
    return new_group_action(quotient, mats, labels=list(action.labels),
                            table=[row[:] for row in action.mult])
