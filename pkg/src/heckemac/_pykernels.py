"""Pure-Python inner loops.

Same API as the compiled ``_ckernels`` module; :mod:`heckemac.kernels`
picks one at import time.  Matrices over F_p are flat row-major tuples of
length n*n with entries in [0, p).  Laurent polynomials are dicts mapping
(q_exponent, t_exponent) to a nonzero rational coefficient.
"""

from fractions import Fraction


def poly_mul_terms(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    for (bq, bt), bc in b.items():
        for (aq, at), ac in a.items():
            key = (aq + bq, at + bt)
            out[key] = get(key, 0) + ac * bc
    return {k: _tidy(c) for k, c in out.items() if c}


def _tidy(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def matmul_mod(a, b, n, p):
    out = [0] * (n * n)
    for i in range(n):
        row = i * n
        for k in range(n):
            aik = a[row + k]
            if aik:
                col = k * n
                for j in range(n):
                    out[row + j] += aik * b[col + j]
    return tuple(x % p for x in out)


def inverse_mod(a, n, p):
    """Gauss-Jordan inverse mod p, or None when the matrix is singular."""
    m = [list(a[i * n:(i + 1) * n]) + [int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] % p), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = pow(m[c][c], p - 2, p)
        m[c] = [(x * inv) % p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
    return tuple(x for row in m for x in row[n:])


def rank_mod(a, nrows, ncols, p):
    m = [list(a[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        for r in range(rank + 1, nrows):
            if m[r][c]:
                f = (m[r][c] * inv) % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_row(a, n, p, i):
    # ranks of rows i..n-1 against columns 0..j, for every j
    basis = []  # reduced vectors (pivot index, vector) over rows i..n-1
    ranks = []
    r = 0
    for j in range(n):
        v = [a[k * n + j] for k in range(i, n)]
        for piv, b in basis:
            if v[piv]:
                f = v[piv]
                v = [(x - f * y) % p for x, y in zip(v, b)]
        piv = next((k for k, x in enumerate(v) if x), None)
        if piv is not None:
            inv = pow(v[piv], p - 2, p)
            basis.append((piv, [(x * inv) % p for x in v]))
            r += 1
        ranks.append(r)
    return ranks


def bruhat_word(a, n, p):
    """One-line notation of w with a in BwB, or None if a is singular.

    Uses the rank array r[i][j] = rank(rows i.., columns ..j); the
    permutation matrix has a 1 at (i, j) exactly where the second mixed
    difference of r is 1.
    """
    r = [_rank_row(a, n, p, i) for i in range(n)] + [[0] * n]
    if r[0][n - 1] != n:
        return None
    images = [0] * n
    for i in range(n):
        for j in range(n):
            d = r[i][j] - r[i + 1][j]
            if j:
                d -= r[i][j - 1] - r[i + 1][j - 1]
            if d:
                images[j] = i + 1
    return tuple(images)


def flag_canonical(a, n, p):
    """Normal form of the coset aB under right multiplication by B."""
    cols = [[a[i * n + j] for i in range(n)] for j in range(n)]
    pivots = []
    for j in range(n):
        v = cols[j]
        for k, r in enumerate(pivots):
            f = v[r]
            if f:
                w = cols[k]
                v = [(x - f * y) % p for x, y in zip(v, w)]
        r = max(i for i in range(n) if v[i])
        inv = pow(v[r], p - 2, p)
        v = [(x * inv) % p for x in v]
        cols[j] = v
        pivots.append(r)
    return tuple(cols[j][i] for i in range(n) for j in range(n))
