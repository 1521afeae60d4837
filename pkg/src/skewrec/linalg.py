"""Exact scalars and dense linear algebra over Q or F_p.

Everything downstream (algebras, modules, resolutions, checkers) reduces
to the operations here.  Vectors are rows; linear maps act on the right,
so "apply f then g" is the matrix product F @ G.  No floating point
appears anywhere.
"""

from fractions import Fraction

from skewrec import _kernel
from skewrec.errors import UsageError


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p == 0) or a prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p=0):
        if p:
            if not _is_prime(p):
                raise UsageError(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(0)

    @classmethod
    def prime(cls, p):
        return cls(p)

    @property
    def is_rational(self):
        return self.p == 0

    @property
    def char(self):
        return self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        """Normalize an int, Fraction or 'num/den' string to a field element."""
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/", 1)
                x = Fraction(int(num), int(den))
            else:
                x = int(x)
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise UsageError(f"cannot coerce {x!r} to an element of {self}")
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise UsageError(f"{x} has no image in {self}")
                return x.numerator * pow(x.denominator, self.p - 2, self.p) % self.p
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def neg(self, x):
        return -x % self.p if self.p else -x

    def add(self, x, y):
        return (x + y) % self.p if self.p else x + y

    def mul(self, x, y):
        return x * y % self.p if self.p else x * y

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(x, self.p - 2, self.p)
        return Fraction(1) / x

    def invertible_int(self, n):
        """True iff the integer n is nonzero in the field."""
        return n % self.p != 0 if self.p else n != 0

    def scalar_to_str(self, x):
        if self.p:
            return str(x % self.p)
        f = Fraction(x)
        if f.denominator == 1:
            return str(f.numerator)
        return f"{f.numerator}/{f.denominator}"


class Matrix:
    """Dense row-major matrix over an exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None, _copy=True):
        self.field = field
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise UsageError("ncols is required for matrices with no rows")
            ncols = len(rows[0])
        if _copy:
            rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ncols:
                raise UsageError("ragged rows")
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)],
                   n, _copy=False)

    @classmethod
    def zeros(cls, field, m, n):
        return cls(field, [[0] * n for _ in range(m)], n, _copy=False)

    @classmethod
    def row_vector(cls, field, entries):
        entries = list(entries)
        return cls(field, [entries], len(entries))

    def entry(self, i, j):
        return self.rows[i][j]

    def row(self, i):
        return list(self.rows[i])

    def to_lists(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols,
                     tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise UsageError(f"shape mismatch: {self.nrows}x{self.ncols} @ "
                             f"{other.nrows}x{other.ncols}")
        if self.ncols == 0:
            return Matrix.zeros(self.field, self.nrows, other.ncols)
        out = _kernel.matmul(self.rows, other.rows, self.field.p)
        return Matrix(self.field, out, other.ncols, _copy=False)

    def __add__(self, other):
        f = self.field
        return Matrix(f, [[f.add(x, y) for x, y in zip(r, s)]
                          for r, s in zip(self.rows, other.rows)],
                      self.ncols, _copy=False)

    def __sub__(self, other):
        f = self.field
        return Matrix(f, [[f.add(x, f.neg(y)) for x, y in zip(r, s)]
                          for r, s in zip(self.rows, other.rows)],
                      self.ncols, _copy=False)

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(x) for x in r] for r in self.rows],
                      self.ncols, _copy=False)

    def scale(self, c):
        f = self.field
        return Matrix(f, [[f.mul(c, x) for x in r] for r in self.rows],
                      self.ncols, _copy=False)

    def transpose(self):
        return Matrix(self.field, [list(col) for col in zip(*self.rows)] or
                      [[] for _ in range(self.ncols)],
                      self.nrows, _copy=False)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise UsageError("hstack: row counts differ")
        return Matrix(self.field, [r + s for r, s in zip(self.rows, other.rows)],
                      self.ncols + other.ncols, _copy=False)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise UsageError("vstack: column counts differ")
        return Matrix(self.field, self.to_lists() + other.to_lists(),
                      self.ncols, _copy=False)

    def take_columns(self, cols):
        return Matrix(self.field, [[r[c] for c in cols] for r in self.rows],
                      len(cols), _copy=False)

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def rref(self):
        rows, pivots = _kernel.rref(self.rows, self.ncols, self.field.p)
        return Matrix(self.field, rows, self.ncols, _copy=False), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def row_kernel(self):
        """Canonical basis (RREF rows) of {x : x @ self == 0}."""
        return _kernel_rows(self.transpose())

    def inverse(self):
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        aug = self.hstack(Matrix.identity(self.field, n))
        red, pivots = aug.rref()
        if list(pivots) != list(range(n)):
            return None
        return red.take_columns(range(n, 2 * n))


def _kernel_rows(m):
    """Solutions y (as rows) of m @ y^T = 0, RREF-canonical."""
    red, pivots = m.rref()
    n = m.ncols
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    field = m.field
    if not free:
        return Matrix.zeros(field, 0, n)
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red.rows[r][fcol])
        basis.append(v)
    return Matrix(field, basis, n, _copy=False).rref()[0]


def rank(a):
    return a.rank()


def nullspace_basis(a):
    """Basis of {x : a @ x = 0} as a list of column matrices."""
    rows = _kernel_rows(a)
    return [Matrix(a.field, [[x] for x in r], 1, _copy=False) for r in rows.rows]


def solve_matrix(a, b):
    """Some X with a @ X = b, or None.  Free variables are set to zero."""
    if a.nrows != b.nrows:
        raise UsageError("solve: row counts differ")
    aug = a.hstack(b)
    red, pivots = aug.rref()
    n = a.ncols
    if any(p >= n for p in pivots):
        return None
    x = Matrix.zeros(a.field, n, b.ncols)
    for r, pc in enumerate(pivots):
        x.rows[pc] = list(red.rows[r][n:])
    return x


def solve_linear(a, b):
    """Some column x with a @ x = b (a column), or None; deterministic."""
    if b.ncols != 1:
        raise UsageError("solve_linear expects a column right-hand side")
    return solve_matrix(a, b)


def solve_left(a, b):
    """Some X with X @ a = b, or None."""
    xt = solve_matrix(a.transpose(), b.transpose())
    return None if xt is None else xt.transpose()


class Subspace:
    """Subspace of a row space, held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, field, ambient, rows):
        if isinstance(rows, Matrix):
            m = rows
        else:
            m = Matrix(field, list(rows), ambient)
        if m.nrows == 0:
            return cls(field, ambient, Matrix.zeros(field, 0, ambient), ())
        if m.ncols != ambient:
            raise UsageError("span: wrong ambient dimension")
        red, pivots = m.rref()
        return cls(field, ambient, red, pivots)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, Matrix.zeros(field, 0, ambient), ())

    @property
    def dim(self):
        return self.basis.nrows

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"

    def reduce(self, vec):
        """Residual of vec after clearing all pivot coordinates."""
        f = self.field
        v = list(vec)
        for r, pc in enumerate(self.pivots):
            c = v[pc]
            if c != 0:
                row = self.basis.rows[r]
                for j in range(self.ambient):
                    if row[j]:
                        v[j] = f.add(v[j], f.neg(f.mul(c, row[j])))
        return v

    def contains(self, vec):
        return all(x == 0 for x in self.reduce(vec))

    def coords(self, vec):
        """Coordinates of vec in the basis rows, or None if outside."""
        v = self.reduce(vec)
        if any(x != 0 for x in v):
            return None
        return [vec[pc] for pc in self.pivots]

    def sum(self, other):
        return Subspace.span(self.field, self.ambient,
                             self.basis.vstack(other.basis))

    def complement_columns(self):
        """Ambient coordinates not used as pivots; they span a complement."""
        pivset = set(self.pivots)
        return [c for c in range(self.ambient) if c not in pivset]
