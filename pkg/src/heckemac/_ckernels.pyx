# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; API mirrors heckemac._pykernels."""

from fractions import Fraction

cdef enum:
    MAXN = 16


def poly_mul_terms(dict a, dict b):
    cdef list ak, av, bk, bv
    cdef Py_ssize_t i, j, na, nb
    cdef long aq, at, bq, bt
    cdef dict out = {}
    cdef object key, c, prev
    if len(a) < len(b):
        a, b = b, a
    ak = list(a.keys())
    av = list(a.values())
    bk = list(b.keys())
    bv = list(b.values())
    na = len(ak)
    nb = len(bk)
    for j in range(nb):
        bq = (<tuple>bk[j])[0]
        bt = (<tuple>bk[j])[1]
        c = bv[j]
        for i in range(na):
            aq = (<tuple>ak[i])[0]
            at = (<tuple>ak[i])[1]
            key = (aq + bq, at + bt)
            prev = out.get(key)
            if prev is None:
                out[key] = av[i] * c
            else:
                out[key] = prev + av[i] * c
    res = {}
    for key, c in out.items():
        if c:
            if type(c) is Fraction and c.denominator == 1:
                c = c.numerator
            res[key] = c
    return res


cdef inline long _inv(long x, long p):
    # Fermat inverse; p is prime
    cdef long r = 1, b = x % p, e = p - 2
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


cdef int _load(object a, long n, long* m) except -1:
    cdef Py_ssize_t i
    if n > MAXN or n < 0:
        raise ValueError("matrix too large for compiled kernel")
    for i in range(n * n):
        m[i] = a[i]
    return 0


def matmul_mod(a, b, long n, long p):
    cdef long A[MAXN * MAXN]
    cdef long B[MAXN * MAXN]
    cdef long i, j, k, s
    _load(a, n, A)
    _load(b, n, B)
    out = []
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s += A[i * n + k] * B[k * n + j]
            out.append(s % p)
    return tuple(out)


def inverse_mod(a, long n, long p):
    cdef long m[MAXN * 2 * MAXN]
    cdef long i, j, c, r, piv, f, inv, w = 2 * n, tmp
    if n > MAXN:
        raise ValueError("matrix too large for compiled kernel")
    for i in range(n):
        for j in range(n):
            m[i * w + j] = a[i * n + j]
            m[i * w + n + j] = 1 if i == j else 0
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if m[r * w + c] % p:
                piv = r
                break
        if piv < 0:
            return None
        if piv != c:
            for j in range(w):
                tmp = m[c * w + j]
                m[c * w + j] = m[piv * w + j]
                m[piv * w + j] = tmp
        inv = _inv(m[c * w + c], p)
        for j in range(w):
            m[c * w + j] = (m[c * w + j] * inv) % p
        for r in range(n):
            if r != c and m[r * w + c]:
                f = m[r * w + c]
                for j in range(w):
                    m[r * w + j] = ((m[r * w + j] - f * m[c * w + j]) % p + p) % p
    out = []
    for i in range(n):
        for j in range(n):
            out.append(m[i * w + n + j])
    return tuple(out)


def rank_mod(a, long nrows, long ncols, long p):
    cdef long m[MAXN * MAXN]
    cdef long i, j, c, r, piv, rank = 0, f, inv, tmp
    if nrows > MAXN or ncols > MAXN:
        raise ValueError("matrix too large for compiled kernel")
    for i in range(nrows * ncols):
        m[i] = a[i]
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r * ncols + c] % p:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(ncols):
                tmp = m[rank * ncols + j]
                m[rank * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        inv = _inv(m[rank * ncols + c], p)
        for r in range(rank + 1, nrows):
            if m[r * ncols + c]:
                f = (m[r * ncols + c] * inv) % p
                for j in range(ncols):
                    m[r * ncols + j] = ((m[r * ncols + j] - f * m[rank * ncols + j]) % p + p) % p
        rank += 1
        if rank == nrows:
            break
    return rank


cdef void _rank_row(long* a, long n, long p, long i, long* ranks):
    cdef long basis[MAXN * MAXN]
    cdef long pivs[MAXN]
    cdef long v[MAXN]
    cdef long nb = 0, r = 0, j, k, b, f, piv, inv, m = n - i
    for j in range(n):
        for k in range(m):
            v[k] = a[(i + k) * n + j]
        for b in range(nb):
            f = v[pivs[b]]
            if f:
                for k in range(m):
                    v[k] = ((v[k] - f * basis[b * MAXN + k]) % p + p) % p
        piv = -1
        for k in range(m):
            if v[k]:
                piv = k
                break
        if piv >= 0:
            inv = _inv(v[piv], p)
            for k in range(m):
                basis[nb * MAXN + k] = (v[k] * inv) % p
            pivs[nb] = piv
            nb += 1
            r += 1
        ranks[j] = r


def bruhat_word(a, long n, long p):
    cdef long A[MAXN * MAXN]
    cdef long R[(MAXN + 1) * MAXN]
    cdef long i, j, d
    _load(a, n, A)
    for i in range(n):
        _rank_row(A, n, p, i, &R[i * MAXN])
    for j in range(n):
        R[n * MAXN + j] = 0
    if R[n - 1] != n:
        return None
    images = [0] * n
    for i in range(n):
        for j in range(n):
            d = R[i * MAXN + j] - R[(i + 1) * MAXN + j]
            if j:
                d -= R[i * MAXN + j - 1] - R[(i + 1) * MAXN + j - 1]
            if d:
                images[j] = i + 1
    return tuple(images)


def flag_canonical(a, long n, long p):
    cdef long A[MAXN * MAXN]
    cdef long pivots[MAXN]
    cdef long i, j, k, r, f, inv
    _load(a, n, A)
    for j in range(n):
        for k in range(j):
            r = pivots[k]
            f = A[r * n + j]
            if f:
                for i in range(n):
                    A[i * n + j] = ((A[i * n + j] - f * A[i * n + k]) % p + p) % p
        r = -1
        for i in range(n - 1, -1, -1):
            if A[i * n + j]:
                r = i
                break
        if r < 0:
            raise ValueError("singular matrix has no flag")
        inv = _inv(A[r * n + j], p)
        for i in range(n):
            A[i * n + j] = (A[i * n + j] * inv) % p
        pivots[j] = r
    out = []
    for i in range(n * n):
        out.append(A[i])
    return tuple(out)
