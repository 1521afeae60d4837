"""Finite-dimensional unital associative algebras over an exact field.

An algebra is a basis b_0..b_{n-1} with structure constants
b_i * b_j = sum_k c[i][j][k] b_k and a distinguished unit vector.
Elements are coordinate rows; left multiplication by x is v @ L(x) and
right multiplication is v @ R(x).

Besides the raw multiplication, an algebra may carry a list of orthogonal
idempotents summing to 1 (vertex idempotents for path algebras, their
images under the constructions here).  They are never required, but when
present the homology engine builds resolutions from the smaller
projectives e*A instead of free modules.
"""

from skewrec.errors import (AssociativityViolation, NotAnIdeal, NotIdempotent,
                            SkewrecError, UnitViolation,
                            UnsupportedCharacteristic, UsageError)
from skewrec.linalg import Matrix, Subspace


class Algebra:

    def __init__(self, field, table, unit, idempotents=None, generators=None,
                 basis_labels=None, validate=True):
        self.field = field
        self.dim = len(table)
        self.table = [[[field.coerce(x) for x in vec] for vec in row]
                      for row in table]
        self.unit = [field.coerce(x) for x in unit]
        if len(self.unit) != self.dim:
            raise UsageError("unit vector has wrong length")
        for row in self.table:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise UsageError("structure table is not dim^3")
        self.basis_labels = list(basis_labels) if basis_labels else None
        self._left = None
        self._right = None
        self._radical = None
        self._block_cache = {}
        self._top_cache = None
        if validate:
            self._check_unit()
            self._check_associativity()
        self.idempotents = self._accept_idempotents(idempotents)
        self.generators = ([list(g) for g in generators]
                           if generators is not None else None)

    # -- multiplication tables ------------------------------------------

    def left_matrices(self):
        """L_i with v @ L_i = b_i * v."""
        if self._left is None:
            self._left = [Matrix(self.field, self.table[i], self.dim)
                          for i in range(self.dim)]
        return self._left

    def right_matrices(self):
        """R_j with v @ R_j = v * b_j."""
        if self._right is None:
            self._right = [Matrix(self.field,
                                  [self.table[i][j] for i in range(self.dim)],
                                  self.dim)
                           for j in range(self.dim)]
        return self._right

    def left_mul_matrix(self, x):
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.left_matrices()[i].scale(xi)
        return out

    def right_mul_matrix(self, y):
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for j, yj in enumerate(y):
            if yj:
                out = out + self.right_matrices()[j].scale(yj)
        return out

    def multiply(self, x, y):
        f = self.field
        acc = [0] * self.dim
        left = self.left_matrices()
        for i, xi in enumerate(x):
            if xi:
                mat = left[i]
                for j, yj in enumerate(y):
                    if yj:
                        row = mat.rows[j]
                        c = f.mul(xi, yj)
                        for k in range(self.dim):
                            if row[k]:
                                acc[k] = f.add(acc[k], f.mul(c, row[k]))
        return acc

    def is_idempotent(self, e):
        return self.multiply(e, e) == [self.field.coerce(x) for x in e]

    def basis_vector(self, i):
        v = [0] * self.dim
        v[i] = 1
        return v

    def generator_vectors(self):
        if self.generators is not None:
            return self.generators
        return [self.basis_vector(i) for i in range(self.dim)]

    # -- validation -----------------------------------------------------

    def _check_unit(self):
        if self.dim == 0:
            return
        lu = self.left_mul_matrix(self.unit)
        ident = Matrix.identity(self.field, self.dim)
        if lu != ident:
            bad = next(j for j in range(self.dim) if lu.rows[j] != ident.rows[j])
            raise UnitViolation(bad, "left")
        ru = self.right_mul_matrix(self.unit)
        if ru != ident:
            bad = next(j for j in range(self.dim) if ru.rows[j] != ident.rows[j])
            raise UnitViolation(bad, "right")

    def _check_associativity(self):
        n = self.dim
        if n == 0:
            return
        right = self.right_matrices()
        stacked = Matrix(self.field,
                         [row for m in right for row in m.rows], n)
        flat = Matrix(self.field,
                      [[x for row in m.rows for x in row] for m in right],
                      n * n)
        for j in range(n):
            got = stacked @ right[j]
            want = right[j] @ flat
            for i in range(n):
                wrow = want.rows[i]
                for a in range(n):
                    grow = got.rows[i * n + a]
                    for k in range(n):
                        if grow[k] != wrow[a * n + k]:
                            raise AssociativityViolation(a, i, j)

    def _accept_idempotents(self, idempotents):
        if idempotents is None:
            return [list(self.unit)] if self.dim else []
        out = [[self.field.coerce(x) for x in e] for e in idempotents]
        total = [0] * self.dim
        f = self.field
        for a, e in enumerate(out):
            if not self.is_idempotent(e):
                raise NotIdempotent(e)
            total = [f.add(x, y) for x, y in zip(total, e)]
            for b in range(a):
                if any(x != 0 for x in self.multiply(e, out[b])):
                    raise UsageError("idempotent list is not orthogonal")
        if total != self.unit:
            raise UsageError("idempotents do not sum to the unit")
        return out

    # -- ideals, corners, quotients --------------------------------------

    def corner_algebra(self, e):
        """(eAe as an algebra, embedding matrix corner -> A)."""
        e = [self.field.coerce(x) for x in e]
        if not self.is_idempotent(e):
            raise NotIdempotent(e)
        le = self.left_mul_matrix(e)
        re = self.right_mul_matrix(e)
        span = Subspace.span(self.field, self.dim, le @ re)
        embed = span.basis
        d = span.dim
        table = []
        for a in range(d):
            row = []
            for b in range(d):
                prod = self.multiply(embed.row(a), embed.row(b))
                row.append(span.coords(prod))
            table.append(row)
        unit = span.coords(e)
        idem = None
        if len(self.idempotents) > 1:
            under = [f for f in self.idempotents
                     if self.multiply(e, f) == f and self.multiply(f, e) == f]
            f = self.field
            total = [0] * self.dim
            for u in under:
                total = [f.add(x, y) for x, y in zip(total, u)]
            if total == e and under:
                idem = [span.coords(u) for u in under]
        corner = Algebra(self.field, table, unit, idempotents=idem)
        return corner, embed

    def two_sided_ideal(self, e):
        """The ideal AeA as a canonical subspace."""
        e = [self.field.coerce(x) for x in e]
        if not self.is_idempotent(e):
            raise NotIdempotent(e)
        re = self.right_mul_matrix(e)
        rows = []
        for rj in self.right_matrices():
            rows.extend((re @ rj).rows)
        span = Subspace.span(self.field, self.dim, Matrix(self.field, rows, self.dim))
        # closure loop; stable immediately for spans of b_i e b_j, kept as a guard
        while True:
            extra = []
            for v in span.basis.rows:
                for j in range(self.dim):
                    for w in (Matrix.row_vector(self.field, v) @ self.right_matrices()[j],
                              Matrix.row_vector(self.field, v) @ self.left_matrices()[j]):
                        if not span.contains(w.rows[0]):
                            extra.append(w.rows[0])
            if not extra:
                return span
            span = span.sum(Subspace.span(self.field, self.dim,
                                          Matrix(self.field, extra, self.dim)))

    def check_ideal(self, sub):
        for v in sub.basis.rows:
            vm = Matrix.row_vector(self.field, v)
            for j in range(self.dim):
                if not sub.contains((vm @ self.right_matrices()[j]).rows[0]):
                    raise NotAnIdeal("right", j, v)
                if not sub.contains((vm @ self.left_matrices()[j]).rows[0]):
                    raise NotAnIdeal("left", j, v)

    def quotient_algebra(self, sub):
        """(A / I, projection matrix A -> A/I).  I must be two-sided."""
        self.check_ideal(sub)
        comp = sub.complement_columns()
        q = len(comp)
        proj_rows = []
        for i in range(self.dim):
            red = sub.reduce(self.basis_vector(i))
            proj_rows.append([red[c] for c in comp])
        proj = Matrix(self.field, proj_rows, q)
        lift_rows = []
        for c in comp:
            lift_rows.append(self.basis_vector(c))
        table = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = self.multiply(lift_rows[a], lift_rows[b])
                red = sub.reduce(prod)
                row.append([red[c] for c in comp])
            table.append(row)
        unit_red = sub.reduce(self.unit)
        unit = [unit_red[c] for c in comp]
        idem = None
        if len(self.idempotents) > 1:
            images = []
            for e in self.idempotents:
                red = sub.reduce(e)
                img = [red[c] for c in comp]
                if any(x != 0 for x in img):
                    images.append(img)
            idem = images or None
        gens = None
        if self.generators is not None:
            gens = []
            for g in self.generators:
                red = sub.reduce(g)
                gens.append([red[c] for c in comp])
        quot = Algebra(self.field, table, unit, idempotents=idem, generators=gens)
        return quot, proj

    # -- radical ----------------------------------------------------------

    def radical(self):
        """Jacobson radical as a canonical subspace (trace-form kernel)."""
        if self._radical is not None:
            return self._radical
        p = self.field.p
        if p and p <= self.dim:
            raise UnsupportedCharacteristic(p, self.dim)
        n = self.dim
        if n == 0:
            self._radical = Subspace.zero(self.field, 0)
            return self._radical
        left = self.left_matrices()
        traces = []
        f = self.field
        for k in range(n):
            t = 0
            for a in range(n):
                t = f.add(t, left[k].rows[a][a])
            traces.append(t)
        tcol = Matrix(self.field, [[t] for t in traces], 1)
        form = Matrix(self.field, [ (left[i] @ tcol).transpose().rows[0]
                                    for i in range(n) ], n)
        rad = Subspace.span(self.field, n, form.row_kernel())
        self.check_ideal(rad)
        cur = rad
        for _ in range(self.dim + 1):
            if cur.dim == 0:
                break
            cur = self._product_subspace(cur, rad)
        else:
            raise SkewrecError("trace-form radical is not nilpotent")
        self._radical = rad
        return rad

    def _product_subspace(self, u, v):
        rows = []
        for a in u.basis.rows:
            am = Matrix.row_vector(self.field, a)
            lu = self.left_mul_matrix(a)
            for b in v.basis.rows:
                rows.append((Matrix.row_vector(self.field, b) @ lu).rows[0])
        if not rows:
            return Subspace.zero(self.field, self.dim)
        return Subspace.span(self.field, self.dim, Matrix(self.field, rows, self.dim))

    def semisimple_quotient(self):
        """(A/rad A, projection)."""
        if self._top_cache is None:
            self._top_cache = self.quotient_algebra(self.radical())
        return self._top_cache
