# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction and matrix multiplication.

Prime fields small enough for 64-bit modular arithmetic (p < 2**31) run on
typed C buffers; rationals and oversized primes fall through to compiled
object loops.  Semantics match skewrec._purekernel exactly.
"""

from fractions import Fraction

from cpython cimport array
import array

from libc.stdint cimport int64_t


cdef int64_t TYPED_LIMIT = 1 << 31


cdef int64_t _inv_mod(int64_t a, int64_t p):
    # Fermat inverse; p prime and 0 < a < p.
    cdef int64_t result = 1
    cdef int64_t base = a % p
    cdef int64_t e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def _rref_typed(list rows, int ncols, int64_t p):
    cdef int m = len(rows)
    cdef array.array buf = array.array('q', [v for row in rows for v in row])
    cdef int64_t[::1] a = buf
    cdef int r = 0, c, i, j, pr
    cdef int64_t pv, inv, f
    pivots = []
    for c in range(ncols):
        pr = -1
        for i in range(r, m):
            if a[i * ncols + c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(ncols):
                a[r * ncols + j], a[pr * ncols + j] = a[pr * ncols + j], a[r * ncols + j]
        pv = a[r * ncols + c]
        if pv != 1:
            inv = _inv_mod(pv, p)
            for j in range(c, ncols):
                if a[r * ncols + j]:
                    a[r * ncols + j] = a[r * ncols + j] * inv % p
        for i in range(m):
            if i == r:
                continue
            f = a[i * ncols + c]
            if f == 0:
                continue
            for j in range(c, ncols):
                if a[r * ncols + j]:
                    a[i * ncols + j] = (a[i * ncols + j] - f * a[r * ncols + j]) % p
                    if a[i * ncols + j] < 0:
                        a[i * ncols + j] += p
        pivots.append(c)
        r += 1
        if r == m:
            break
    out = []
    for i in range(r):
        out.append([a[i * ncols + j] for j in range(ncols)])
    return out, pivots


def _rref_obj(list rows, int ncols, object p):
    cdef int m = len(rows)
    cdef int r = 0, c, i, j, pr
    work = [list(row) for row in rows]
    pivots = []
    use_mod = bool(p)
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
            if use_mod:
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
            if use_mod:
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


def rref(list rows, int ncols, p):
    if p and p < TYPED_LIMIT:
        return _rref_typed(rows, ncols, p)
    return _rref_obj(rows, ncols, p)


def _matmul_typed(list a, list b, int64_t p):
    cdef int m = len(a)
    cdef int k = len(b)
    cdef int n = len(b[0])
    cdef array.array abuf = array.array('q', [v for row in a for v in row])
    cdef array.array bbuf = array.array('q', [v for row in b for v in row])
    cdef int64_t[::1] av = abuf
    cdef int64_t[::1] bv = bbuf
    cdef int i, j, t
    cdef int64_t s, x
    out = []
    for i in range(m):
        orow = []
        for j in range(n):
            s = 0
            for t in range(k):
                x = av[i * k + t]
                if x:
                    s = (s + x * bv[t * n + j]) % p
            orow.append(s)
        out.append(orow)
    return out


def _matmul_obj(list a, list b, object p):
    cdef int m = len(a)
    cdef int k = len(b)
    cdef int n = len(b[0])
    cdef int i, j, t
    bt = list(zip(*b))
    out = []
    use_mod = bool(p)
    for i in range(m):
        arow = a[i]
        orow = []
        for j in range(n):
            bcol = bt[j]
            s = 0
            for t in range(k):
                x = arow[t]
                if x:
                    s = s + x * bcol[t]
            if use_mod:
                s = s % p
            orow.append(s)
        out.append(orow)
    return out


def matmul(list a, list b, p):
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    if p and p < TYPED_LIMIT:
        return _matmul_typed(a, b, p)
    return _matmul_obj(a, b, p)
