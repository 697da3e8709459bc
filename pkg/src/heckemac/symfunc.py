"""Symmetric functions of a fixed degree n over Q(q, t).

A symmetric function is a map from partitions of n to coefficients in one
of three bases: monomial (m), power sum (p) or Schur (s).  Transitions
between bases are exact matrices computed once per degree.  On top of that
sit the Macdonald inner product, the integral forms J_mu (by Gram-Schmidt),
the big Schur functions, the modified Macdonald functions and the
transition matrices K, L, F, a, b and R.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import (
    DegreeMismatch,
    InternalMismatch,
    NonPolynomialResult,
    NotDivisible,
    UnsupportedDegree,
)
from .exactring import ONE, ZERO, Q, QTFraction, QTLaurent, T, as_fraction, exact_div
from .matrices import LabeledMatrix, invert, simplify, solve
from .partitions import (
    Partition,
    dominates,
    hook_factor_q_t,
    kostka,
    n_stat,
    partitions_of,
)

MAX_DEGREE = 6
BASES = ("monomial", "powersum", "schur")
_SHORT = {"monomial": "m", "powersum": "p", "schur": "s"}


def _check_degree(n: int):
    if n < 0 or n > MAX_DEGREE:
        raise UnsupportedDegree(f"degree {n} is outside the supported range 0..{MAX_DEGREE}")


def _clean(x):
    return simplify(as_fraction(x))


class SymFunc:
    """Homogeneous symmetric function of degree n in a named basis."""

    __slots__ = ("basis", "n", "coeffs")

    def __init__(self, basis: str, n: int, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        _check_degree(n)
        self.basis = basis
        self.n = n
        out = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition.from_composition(lam)
            if lam.n != n:
                raise DegreeMismatch(f"{lam} does not have size {n}")
            c = as_fraction(c)
            if not c.is_zero():
                out[lam] = out[lam] + c if lam in out else c
        self.coeffs = {lam: c for lam, c in out.items() if not c.is_zero()}

    @classmethod
    def basis_vector(cls, basis: str, lam) -> "SymFunc":
        lam = Partition.from_composition(lam)
        return cls(basis, lam.n, {lam: 1})

    def coefficient(self, lam):
        c = self.coeffs.get(Partition.from_composition(lam))
        return ZERO if c is None else simplify(c)

    def vector(self) -> list:
        return [self.coefficient(lam) for lam in partitions_of(self.n)]

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def map_coefficients(self, fn) -> "SymFunc":
        return SymFunc(self.basis, self.n, {lam: fn(c) for lam, c in self.coeffs.items()})

    def scale(self, c) -> "SymFunc":
        c = as_fraction(c)
        return SymFunc(self.basis, self.n, {lam: x * c for lam, x in self.coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.n != self.n:
            raise DegreeMismatch("degrees differ")
        other = convert(other, self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFunc(self.basis, self.n, out)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.n != self.n:
            return False
        other = convert(other, self.basis)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, QTFraction()) == other.coeffs.get(k, QTFraction()) for k in keys)

    __hash__ = None

    def __str__(self):
        if not self.coeffs:
            return "0"
        tag = _SHORT[self.basis]
        pieces = []
        for lam in partitions_of(self.n):
            if lam in self.coeffs:
                c = simplify(self.coeffs[lam])
                text = str(c)
                if isinstance(c, QTLaurent) and len(c) > 1:
                    text = f"({text})"
                pieces.append(f"{text} * {tag}[{lam.label()}]")
        return " + ".join(pieces)

    def __repr__(self):
        return f"SymFunc({self.basis}, n={self.n}: {self})"


# ---------------------------------------------------------------------------
# transition matrices between the classical bases


def _count_assignments(rho: tuple, lam: tuple) -> int:
    """Maps from the parts of rho to the rows of lam whose fibre sums equal lam."""

    @lru_cache(maxsize=None)
    def rec(i: int, remaining: tuple) -> int:
        if i == len(rho):
            return 1 if not any(remaining) else 0
        total = 0
        for j, r in enumerate(remaining):
            if r >= rho[i]:
                nxt = remaining[:j] + (r - rho[i],) + remaining[j + 1:]
                total += rec(i + 1, nxt)
        return total

    return rec(0, tuple(lam))


@lru_cache(maxsize=None)
def p_to_m(n: int) -> tuple:
    """X with p_rho = sum_lam X[rho][lam] m_lam (coefficient of x^lam in p_rho)."""
    _check_degree(n)
    parts = partitions_of(n)
    return tuple(tuple(_count_assignments(rho, lam) for lam in parts) for rho in parts)


@lru_cache(maxsize=None)
def m_to_p(n: int) -> tuple:
    return tuple(tuple(row) for row in invert(p_to_m(n)))


@lru_cache(maxsize=None)
def s_to_m(n: int) -> tuple:
    _check_degree(n)
    parts = partitions_of(n)
    return tuple(tuple(kostka(lam, mu) for mu in parts) for lam in parts)


@lru_cache(maxsize=None)
def m_to_s(n: int) -> tuple:
    return tuple(tuple(row) for row in invert(s_to_m(n)))


def _to_monomial(f: SymFunc) -> dict:
    if f.basis == "monomial":
        return dict(f.coeffs)
    parts = partitions_of(f.n)
    mat = p_to_m(f.n) if f.basis == "powersum" else s_to_m(f.n)
    idx = {lam: k for k, lam in enumerate(parts)}
    out = {}
    for lam, c in f.coeffs.items():
        row = mat[idx[lam]]
        for j, x in enumerate(row):
            if x:
                mu = parts[j]
                v = c * x
                out[mu] = out[mu] + v if mu in out else v
    return out


def _from_monomial(n: int, coeffs: dict, basis: str) -> dict:
    if basis == "monomial":
        return coeffs
    parts = partitions_of(n)
    mat = m_to_p(n) if basis == "powersum" else m_to_s(n)
    idx = {lam: k for k, lam in enumerate(parts)}
    out = {}
    for lam, c in coeffs.items():
        row = mat[idx[lam]]
        for j, x in enumerate(row):
            if x:
                mu = parts[j]
                v = c * x
                out[mu] = out[mu] + v if mu in out else v
    return out


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express f in the target basis."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    return SymFunc(target, f.n, _from_monomial(f.n, _to_monomial(f), target))


def m(lam) -> SymFunc:
    return SymFunc.basis_vector("monomial", lam)


def p(lam) -> SymFunc:
    return SymFunc.basis_vector("powersum", lam)


def s(lam) -> SymFunc:
    return SymFunc.basis_vector("schur", lam)


# ---------------------------------------------------------------------------
# the q,t inner product


def z_lambda(lam) -> int:
    out = 1
    for part, mult in Partition.from_composition(lam).multiplicities().items():
        out *= part ** mult * factorial(mult)
    return out


def z_qt(lam) -> QTFraction:
    """<p_lam, p_lam> = z_lam prod_i (1 - q^lam_i)/(1 - t^lam_i)."""
    num = QTLaurent(z_lambda(lam))
    den = ONE
    for part in lam:
        num = num * (ONE - Q ** part)
        den = den * (ONE - T ** part)
    return QTFraction(num, den)


def inner_qt(f: SymFunc, g: SymFunc) -> QTFraction:
    if f.n != g.n:
        raise DegreeMismatch(f"degrees {f.n} and {g.n} differ")
    fp = convert(f, "powersum").coeffs
    gp = convert(g, "powersum").coeffs
    total = QTFraction()
    for rho, c in fp.items():
        d = gp.get(rho)
        if d is not None:
            total = total + c * d * z_qt(rho)
    return total


@lru_cache(maxsize=None)
def _gram_m(n: int) -> tuple:
    """Gram matrix of the monomial basis under inner_qt."""
    parts = partitions_of(n)
    mp = m_to_p(n)
    zs = [z_qt(rho) for rho in parts]
    k = len(parts)
    out = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            acc = QTFraction()
            for r in range(k):
                x, y = mp[a][r], mp[b][r]
                if x and y:
                    acc = acc + zs[r] * (Fraction(x) * y)
            out[a][b] = out[b][a] = acc
    return tuple(tuple(r) for r in out)


# ---------------------------------------------------------------------------
# Macdonald polynomials


@lru_cache(maxsize=None)
def _macdonald_P_vectors(n: int) -> tuple:
    """Monomial coordinates of P_mu for every mu, by Gram-Schmidt from (1^n) upward."""
    _check_degree(n)
    parts = partitions_of(n)
    k = len(parts)
    gram = _gram_m(n)
    built: dict[int, tuple] = {}
    norms: dict[int, QTFraction] = {}
    for a in reversed(range(k)):
        vec = [QTFraction() for _ in range(k)]
        vec[a] = as_fraction(1)
        for b in sorted(built):
            pb = built[b]
            # <m_a, P_b> = sum_j P_b[j] <m_a, m_j>
            proj = QTFraction()
            for j in range(k):
                if not pb[j].is_zero():
                    proj = proj + pb[j] * gram[a][j]
            if proj.is_zero():
                continue
            c = proj / norms[b]
            for j in range(k):
                if not pb[j].is_zero():
                    vec[j] = vec[j] - c * pb[j]
        norm = QTFraction()
        for j in range(k):
            if not vec[j].is_zero():
                norm = norm + vec[j] * gram[a][j]
        built[a] = tuple(vec)
        norms[a] = norm
    for a in range(k):
        for j in range(k):
            if not built[a][j].is_zero() and not dominates(parts[a], parts[j]):
                raise InternalMismatch(f"P_{parts[a]} has an m_{parts[j]} term outside dominance order")
    return tuple(built[a] for a in range(k))


def macdonald_P(mu) -> SymFunc:
    mu = Partition.from_composition(mu)
    parts = partitions_of(mu.n)
    vec = _macdonald_P_vectors(mu.n)[parts.index(mu)]
    return SymFunc("monomial", mu.n, dict(zip(parts, vec)))


@lru_cache(maxsize=None)
def _J_vectors(n: int) -> tuple:
    parts = partitions_of(n)
    out = []
    for mu, vec in zip(parts, _macdonald_P_vectors(n)):
        c = hook_factor_q_t(mu)
        row = []
        for x in vec:
            y = x * c
            if not y.is_laurent():
                raise NonPolynomialResult(f"J_{mu} has a non-polynomial coefficient {y}")
            row.append(y.to_laurent())
        out.append(tuple(row))
    return tuple(out)


def macdonald_J(mu) -> SymFunc:
    """Integral form J_mu in the monomial basis."""
    mu = Partition.from_composition(mu)
    parts = partitions_of(mu.n)
    return SymFunc("monomial", mu.n, dict(zip(parts, _J_vectors(mu.n)[parts.index(mu)])))


# ---------------------------------------------------------------------------
# plethysm and big Schur functions


def plethysm_scale(f: SymFunc, factor) -> SymFunc:
    """p_k -> p_k * factor(q^k, t^k), returned in the basis of f."""
    factor = as_fraction(factor)
    images = {}
    out = {}
    for rho, c in convert(f, "powersum").coeffs.items():
        w = as_fraction(1)
        for part in rho:
            if part not in images:
                images[part] = factor.substitute(Q ** part, T ** part)
            w = w * images[part]
        out[rho] = c * w
    return convert(SymFunc("powersum", f.n, out), f.basis)


def big_schur(lam) -> SymFunc:
    """S_lam(x; t) = s_lam[X(1 - t)] in the monomial basis."""
    return plethysm_scale(convert(s(lam), "monomial"), ONE - T)


def _strip_one_minus_t(value, nu, what: str) -> QTLaurent:
    try:
        return exact_div(as_fraction(value).to_laurent(), (ONE - T) ** len(nu))
    except NotDivisible:
        raise NotDivisible(f"{what} at {nu} is not divisible by (1-t)^{len(nu)}") from None


# ---------------------------------------------------------------------------
# transition matrices


def _pm(n, entries, name, rows=None, cols=None):
    parts = partitions_of(n)
    return LabeledMatrix(rows or parts, cols or parts, entries, name=name)


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> LabeledMatrix:
    """K_{lam pi}(0, 1): rows lam, columns pi."""
    return _pm(n, [list(r) for r in s_to_m(n)], "kostka")


@lru_cache(maxsize=None)
def L_matrix(n: int) -> LabeledMatrix:
    """S_lam = sum_nu L_{lam nu}(t) (1-t)^l(nu) m_nu."""
    parts = partitions_of(n)
    rows = []
    for lam in parts:
        S = big_schur(lam)
        rows.append([_strip_one_minus_t(S.coefficient(nu), nu, f"S_{lam}") for nu in parts])
    return _pm(n, rows, "L")


@lru_cache(maxsize=None)
def a_matrix(n: int) -> LabeledMatrix:
    """J_mu = sum_nu a_{mu nu}(q,t) (1-t)^l(nu) m_nu."""
    parts = partitions_of(n)
    rows = []
    for mu, vec in zip(parts, _J_vectors(n)):
        rows.append([_strip_one_minus_t(x, nu, f"J_{mu}") for x, nu in zip(vec, parts)])
    return _pm(n, rows, "a")


@lru_cache(maxsize=None)
def K_matrix(n: int) -> LabeledMatrix:
    """J_mu = sum_lam K_{lam mu}(q,t) S_lam: rows lam, columns mu."""
    parts = partitions_of(n)
    L = L_matrix(n)
    a = a_matrix(n)
    Lt = [[L[lam, nu] for lam in parts] for nu in parts]
    cols = []
    for mu in parts:
        x = solve(Lt, [a[mu, nu] for nu in parts])
        col = []
        for lam, v in zip(parts, x):
            if not v.is_laurent():
                raise NonPolynomialResult(f"K_{lam},{mu} = {v} is not a polynomial")
            col.append(v.to_laurent())
        cols.append(col)
    K = _pm(n, [list(r) for r in zip(*cols)], "K")
    # a_{mu nu} = sum_lam K_{lam mu} L_{lam nu}
    check = K.transpose() @ L
    if check.mismatches(a):
        raise InternalMismatch("K^t L does not reproduce a")
    return K


@lru_cache(maxsize=None)
def F_matrix(n: int) -> LabeledMatrix:
    """Inverse of the Kostka matrix: rows pi, columns lam."""
    parts = partitions_of(n)
    return _pm(n, invert(s_to_m(n)), "F", rows=parts, cols=parts)


def _t_inverse(x) -> QTFraction:
    return as_fraction(x).substitute(Q, T ** -1)


@lru_cache(maxsize=None)
def _modified_H_schur(n: int) -> tuple:
    parts = partitions_of(n)
    K = K_matrix(n)
    out = []
    for mu in parts:
        shift = T ** n_stat(mu)
        row = []
        for lam in parts:
            v = _t_inverse(K[lam, mu]) * shift
            if not v.is_laurent() or not v.to_laurent().is_polynomial():
                raise NonPolynomialResult(f"t^n(mu) K_{lam},{mu}(q,1/t) = {v} is not a polynomial")
            row.append(v.to_laurent())
        out.append(tuple(row))
    return tuple(out)


def modified_H(mu) -> SymFunc:
    """H~_mu in the Schur basis: coefficients t^n(mu) K_{lam mu}(q, 1/t)."""
    mu = Partition.from_composition(mu)
    parts = partitions_of(mu.n)
    return SymFunc("schur", mu.n, dict(zip(parts, _modified_H_schur(mu.n)[parts.index(mu)])))


@lru_cache(maxsize=None)
def b_matrix(n: int) -> LabeledMatrix:
    """H~_mu = sum_pi b_{mu pi}(q,t) m_pi."""
    parts = partitions_of(n)
    kos = s_to_m(n)
    rows = []
    for hrow in _modified_H_schur(n):
        row = []
        for j in range(len(parts)):
            acc = ZERO
            for i, c in enumerate(hrow):
                if kos[i][j]:
                    acc = acc + c * kos[i][j]
            row.append(acc)
        rows.append(row)
    return _pm(n, rows, "b")


@lru_cache(maxsize=None)
def R_matrix(n: int) -> tuple[LabeledMatrix, LabeledMatrix]:
    """(R, E R): m_nu[X/(1-1/q)] = sum_pi R_{nu pi}(q) m_pi, and its twist by
    E = diag((1 - 1/q)^l(nu))."""
    parts = partitions_of(n)
    factor = QTFraction(1, ONE - Q ** -1)
    rows = []
    for nu in parts:
        f = plethysm_scale(m(nu), factor)
        rows.append([simplify(f.coeffs.get(pi, QTFraction())) for pi in parts])
    R = _pm(n, rows, "R")
    E = LabeledMatrix.diagonal(parts, [(ONE - Q ** -1) ** len(nu) for nu in parts])
    twisted = E @ R
    twisted.name = "ER"
    return R, twisted


def macpl_side(mu) -> SymFunc:
    """t^n(mu) J_mu[X/(1 - 1/t); q, 1/t], in the Schur basis."""
    mu = Partition.from_composition(mu)
    J = macdonald_J(mu).map_coefficients(_t_inverse)
    out = plethysm_scale(J, QTFraction(1, ONE - T ** -1)).scale(T ** n_stat(mu))
    return convert(out, "schur")
