"""Pure-Python row reduction and matrix multiplication.

Fallback backend used when the compiled extension is unavailable.  Both
backends implement the same two entry points with identical semantics:

``rref(rows, ncols, p)``
    Reduced row echelon form with the fixed pivoting rule "first nonzero
    in column order".  Returns ``(rows, pivots)`` where ``rows`` holds the
    nonzero rows only, pivot entries normalized to 1 and pivot columns
    cleared above and below.  ``p == 0`` means exact rationals (entries
    are ints or fractions.Fraction), ``p > 0`` means the prime field F_p
    (entries are canonical ints in ``[0, p)``).

``matmul(a, b, p)``
    Plain dense product of row-major matrices.
"""

from fractions import Fraction


def rref(rows, ncols, p):
    m = len(rows)
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, m):
            if work[i][c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            work[r], work[pr] = work[pr], work[r]
        row = work[r]
        pv = row[c]
        if pv != 1:
            if p:
                inv = pow(pv, p - 2, p)
                for j in range(c, ncols):
                    if row[j]:
                        row[j] = row[j] * inv % p
            else:
                inv = Fraction(1) / pv
                for j in range(c, ncols):
                    if row[j]:
                        row[j] = row[j] * inv
        for i in range(m):
            if i == r:
                continue
            f = work[i][c]
            if f == 0:
                continue
            other = work[i]
            if p:
                for j in range(c, ncols):
                    if row[j]:
                        other[j] = (other[j] - f * row[j]) % p
            else:
                for j in range(c, ncols):
                    if row[j]:
                        other[j] = other[j] - f * row[j]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work[:r], pivots


def matmul(a, b, p):
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    bt = list(zip(*b))
    out = []
    if p:
        for arow in a:
            out.append([sum(x * y for x, y in zip(arow, bcol) if x) % p
                        for bcol in bt])
    else:
        for arow in a:
            out.append([sum(x * y for x, y in zip(arow, bcol) if x)
                        for bcol in bt])
    return out
