"""Iwahori-Hecke algebra of S_n with generic parameter q.

Basis T_w, w in S_n, with T_w T_s = T_{ws} when l(ws) > l(w) and
T_w T_s = (q-1) T_w + q T_{ws} otherwise (and the mirrored rule on the
left).  Also builds the expansion matrix kappa (coefficients of the
Geck-Rouquier central basis on the rescaled basis q^{-l(w)} T_{w^{-1}}),
the contraction matrix C, and the central elements built from them.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Mapping

from .errors import InconsistentPropagation, RankMismatch, ScaleExceeded
from .exactring import (
    ONE,
    ZERO,
    Q,
    QTFraction,
    QTLaurent,
    as_fraction,
    exact_div,
    pi_factorial,
)
from .matrices import LabeledMatrix
from .partitions import Partition, partitions_of
from .symgroup import (
    Permutation,
    all_permutations,
    apply_simple,
    class_minimal_length,
    cycle_type,
    in_young_subgroup,
    inverse,
    length,
    poincare,
    reduced_word,
    young_subgroup,
)

QM1 = Q - 1
MAX_RANK = 7


def check_rank(n: int):
    if n < 1 or n > MAX_RANK:
        raise ScaleExceeded(f"S_{n} is outside the supported range 1..{MAX_RANK}")


@lru_cache(maxsize=None)
def _tables(n: int):
    """Per generator i: w -> (w s_i, goes_up) and w -> (s_i w, goes_up)."""
    perms = all_permutations(n)
    right = {}
    left = {}
    for w in perms:
        r = []
        l_ = []
        for i in range(1, n):
            y, d = apply_simple(w, i, "right")
            r.append((y, d > 0))
            y, d = apply_simple(w, i, "left")
            l_.append((y, d > 0))
        right[w] = r
        left[w] = l_
    return right, left


def _add_into(out: dict, key, val):
    cur = out.get(key)
    new = val if cur is None else cur + val
    if new.is_zero():
        out.pop(key, None)
    else:
        out[key] = new


def _mul_generator(terms: dict, n: int, i: int, side: str) -> dict:
    right, left = _tables(n)
    table = right if side == "right" else left
    out: dict = {}
    for x, c in terms.items():
        y, up = table[x][i - 1]
        if up:
            _add_into(out, y, c)
        else:
            _add_into(out, x, c * QM1)
            _add_into(out, y, c * Q)
    return out


class HeckeElement:
    """Sparse combination sum_w c_w T_w over Q(q).

    Internally the coefficients share one denominator: c_w = num_w / den with
    each num_w a Laurent polynomial.  :attr:`coeffs` returns the reduced
    fractions.
    """

    __slots__ = ("n", "_terms", "_den")

    def __init__(self, n: int, coeffs: Mapping[Permutation, object] | None = None, den=ONE):
        self.n = n
        den = as_fraction(den)
        fracs = {}
        for w, c in (coeffs or {}).items():
            if len(w) != n:
                raise RankMismatch(f"{w!r} is not in S_{n}")
            c = as_fraction(c) / den
            if not c.is_zero():
                fracs[Permutation(w)] = c
        common = ONE
        for c in fracs.values():
            if c.den != ONE:
                try:
                    exact_div(common, c.den)
                except ArithmeticError:
                    common = common * c.den
        self._den = common
        self._terms = {w: exact_div(c.num * common, c.den) for w, c in fracs.items()}

    @classmethod
    def _raw(cls, n: int, terms: dict, den: QTLaurent) -> "HeckeElement":
        obj = object.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._den = den
        return obj

    @classmethod
    def basis(cls, w: Permutation) -> "HeckeElement":
        return cls._raw(len(w), {Permutation(w): ONE}, ONE)

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls.basis(Permutation.identity(n))

    @classmethod
    def generator(cls, n: int, i: int) -> "HeckeElement":
        return cls.basis(Permutation.simple(n, i))

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {}, ONE)

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> dict[Permutation, QTFraction]:
        return {w: QTFraction(c, self._den) for w, c in self._terms.items()}

    def coefficient(self, w) -> QTFraction:
        c = self._terms.get(Permutation(w))
        return QTFraction() if c is None else QTFraction(c, self._den)

    def support(self) -> list[Permutation]:
        return [w for w in all_permutations(self.n) if w in self._terms]

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, HeckeElement):
            raise TypeError("expected a HeckeElement")
        if other.n != self.n:
            raise RankMismatch(f"elements of H(S_{self.n}) and H(S_{other.n})")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        if self._den == other._den:
            out = dict(self._terms)
            for w, c in other._terms.items():
                _add_into(out, w, c)
            return HeckeElement._raw(self.n, out, self._den)
        out = {w: c * other._den for w, c in self._terms.items()}
        for w, c in other._terms.items():
            _add_into(out, w, c * self._den)
        return HeckeElement._raw(self.n, out, self._den * other._den)

    def __neg__(self):
        return HeckeElement._raw(self.n, {w: -c for w, c in self._terms.items()}, self._den)

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = as_fraction(c)
        if c.is_zero():
            return HeckeElement.zero(self.n)
        return HeckeElement._raw(self.n, {w: x * c.num for w, x in self._terms.items()},
                                 self._den * c.den)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(1 / as_fraction(other))

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self._terms) | set(other._terms)
        for w in keys:
            a = self._terms.get(w, ZERO) * other._den
            b = other._terms.get(w, ZERO) * self._den
            if a != b:
                return False
        return True

    __hash__ = None

    def mul_generator(self, i: int, side: str = "right") -> "HeckeElement":
        """h T_{s_i} (side='right') or T_{s_i} h (side='left')."""
        if not 1 <= i <= self.n - 1:
            raise RankMismatch(f"s{i} is not a generator of H(S_{self.n})")
        return HeckeElement._raw(self.n, _mul_generator(self._terms, self.n, i, side), self._den)

    def specialize_q1(self) -> dict[Permutation, object]:
        """Coefficients at q = 1 (the group algebra of S_n)."""
        out = {}
        for w, c in self._terms.items():
            v = c.evaluate(1) / self._den.evaluate(1)
            if v:
                out[w] = v
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for w in self.support():
            c = QTFraction(self._terms[w], self._den)
            text = str(c)
            if c.den == ONE and len(c.num) > 1:
                text = f"({text})"
            pieces.append(f"{text} * T[{w.label()}]")
        return " + ".join(pieces)

    def __repr__(self):
        return f"HeckeElement(n={self.n}, {self})"


def multiply(h1: HeckeElement, h2: HeckeElement) -> HeckeElement:
    """Product in the T_w basis; h1 T_w is built up one right generator at a time."""
    h1._check(h2)
    n = h1.n
    # h1 * T_w for every w in the support of h2, memoised along w = w' s_i
    cache: dict[Permutation, dict] = {Permutation.identity(n): dict(h1._terms)}

    def times(w: Permutation) -> dict:
        got = cache.get(w)
        if got is not None:
            return got
        word = reduced_word(w)
        i = word[-1]
        prev, _ = apply_simple(w, i, "right")
        got = _mul_generator(times(prev), n, i, "right")
        cache[w] = got
        return got

    out: dict = {}
    for w in sorted(h2._terms, key=length):
        c = h2._terms[w]
        for x, v in times(w).items():
            _add_into(out, x, v * c)
    return HeckeElement._raw(n, out, h1._den * h2._den)


def is_central(h: HeckeElement) -> bool:
    """h commutes with every T_{s_i}."""
    for i in range(1, h.n):
        if _mul_generator(h._terms, h.n, i, "right") != _mul_generator(h._terms, h.n, i, "left"):
            return False
    return True


# ---------------------------------------------------------------------------
# expansion and contraction matrices


class ExpansionMatrix(LabeledMatrix):
    """kappa: rows partitions nu, columns permutations w, entries in Z[q]."""

    def value(self, nu, w) -> QTLaurent:
        return self[Partition.from_composition(nu), Permutation(w)]


class ContractionMatrix(LabeledMatrix):
    """C: rows permutations w, columns compositions pi; 1 iff w in W_pi."""


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_scale(a, c):
    return tuple(x * c for x in a)


@lru_cache(maxsize=None)
def expansion_matrix(n: int) -> ExpansionMatrix:
    """Fixed-point propagation of the expansion matrix.

    Rows start as delta vectors on minimal-length class elements; longer
    elements are reached by kappa(s w s) = q kappa(w) + (q-1) kappa(w s)
    when the conjugation adds two to the length, and by equality across
    length-preserving conjugations s w s.  Every derivation of an already
    known entry is compared against it.
    """
    check_rank(n)
    parts = partitions_of(n)
    pidx = {p: k for k, p in enumerate(parts)}
    perms = all_permutations(n)
    by_len: dict[int, list] = defaultdict(list)
    for w in perms:
        by_len[length(w)].append(w)
    zero_vec = tuple(ZERO for _ in parts)
    val: dict[Permutation, tuple] = {}

    def conj(x, i):
        y, _ = apply_simple(x, i, "left")
        z, _ = apply_simple(y, i, "right")
        return y, z  # s_i x, s_i x s_i

    def assign(x, vec, how):
        old = val.get(x)
        if old is None:
            val[x] = vec
            return True
        if old != vec:
            raise InconsistentPropagation(f"kappa at {x.label()} disagrees between derivations ({how})")
        return False

    for L in sorted(by_len):
        level = by_len[L]
        for x in level:
            nu = cycle_type(x)
            if L == class_minimal_length(nu):
                vec = list(zero_vec)
                vec[pidx[nu]] = ONE
                assign(x, tuple(vec), "minimal length")
                continue
            for i in range(1, n):
                six, sixs = conj(x, i)
                if length(sixs) == L - 2:
                    # x = s_i w s_i with w = sixs and w s_i = six
                    vec = _vec_add(_vec_scale(val[sixs], Q), _vec_scale(val[six], QM1))
                    assign(x, vec, f"length-adding conjugation by s{i}")
        changed = True
        while changed:
            changed = False
            for x in level:
                if x not in val:
                    continue
                for i in range(1, n):
                    _, y = conj(x, i)
                    if y != x and length(y) == L:
                        changed |= assign(y, val[x], f"cyclic shift by s{i}")
        missing = [x for x in level if x not in val]
        if missing:
            raise InconsistentPropagation(
                f"propagation never reached {', '.join(w.label() for w in missing)}")
    for w in perms:
        if val[w] != val[inverse(w)]:
            raise InconsistentPropagation(f"kappa differs at {w.label()} and its inverse")
    entries = [[val[w][k] for w in perms] for k in range(len(parts))]
    return ExpansionMatrix(parts, perms, entries, name="kappa")


def check_expansion_rules(kappa: ExpansionMatrix) -> list[str]:
    """Every applicable instance of the three defining rules; returns violations."""
    perms = kappa.col_labels
    n = len(perms[0])
    bad = []
    for nu in kappa.row_labels:
        for w in perms:
            ct = cycle_type(w)
            if length(w) == class_minimal_length(ct):
                want = ONE if ct == nu else ZERO
                if kappa[nu, w] != want:
                    bad.append(f"(a) row {nu} at {w.label()}")
            for i in range(1, n):
                sw, dl = apply_simple(w, i, "left")
                ws, dr = apply_simple(w, i, "right")
                if dl > 0 and dr > 0 and sw != ws:
                    if kappa[nu, sw] != kappa[nu, ws]:
                        bad.append(f"(b) row {nu} at w={w.label()}, i={i}")
                sws, _ = apply_simple(sw, i, "right")
                if length(sws) == length(w) + 2:
                    want = Q * kappa[nu, w] + QM1 * kappa[nu, ws]
                    if kappa[nu, sws] != want:
                        bad.append(f"(c) row {nu} at w={w.label()}, i={i}")
    return bad


def contraction_matrix(n: int, columns=None) -> ContractionMatrix:
    """0/1 membership of permutations in Young subgroups; default columns are partitions."""
    check_rank(n)
    cols = tuple(partitions_of(n)) if columns is None else tuple(tuple(c) for c in columns)
    perms = all_permutations(n)
    entries = [[1 if in_young_subgroup(w, pi) else 0 for pi in cols] for w in perms]
    return ContractionMatrix(perms, cols, entries, name="C")


@lru_cache(maxsize=None)
def expansion_contraction(n: int) -> LabeledMatrix:
    """M kappa C D with M = diag(q^(n - l(nu))), D = diag(1/[pi]!)."""
    parts = partitions_of(n)
    M = LabeledMatrix.diagonal(parts, [Q ** (n - len(nu)) for nu in parts])
    D = LabeledMatrix.diagonal(parts, [QTFraction(1, pi_factorial(pi)) for pi in parts])
    out = M @ expansion_matrix(n) @ contraction_matrix(n) @ D
    out.name = "MkCD"
    return out


# ---------------------------------------------------------------------------
# central elements


def _from_rescaled_row(n: int, row: dict) -> HeckeElement:
    """sum_w c_w q^{-l(w)} T_{w^{-1}}."""
    fr = {}
    for w, c in row.items():
        c = as_fraction(c)
        if not c.is_zero():
            fr[inverse(w)] = c * Q ** (-length(w))
    return HeckeElement(n, fr)


def geck_rouquier(nu) -> HeckeElement:
    nu = Partition.from_composition(nu)
    n = nu.n
    kappa = expansion_matrix(n)
    return _from_rescaled_row(n, {w: kappa[nu, w] for w in kappa.col_labels})


def _combine(n: int, coeffs: dict) -> HeckeElement:
    """sum_nu c_nu kappa_nu."""
    kappa = expansion_matrix(n)
    row = {}
    for w in kappa.col_labels:
        acc = ZERO
        for nu, c in coeffs.items():
            k = kappa[nu, w]
            if not k.is_zero():
                acc = acc + as_fraction(c) * k
        row[w] = acc
    return _from_rescaled_row(n, row)


def central_idempotent(lam) -> HeckeElement:
    """z_lambda = chi_G^lambda(1)/|G/B| sum_nu chi_H^lambda(T_gamma_nu) kappa_nu."""
    from .counts import chi_G, chi_H

    lam = Partition.from_composition(lam)
    n = lam.n
    parts = partitions_of(n)
    degree = chi_G(n)[lam, parts[-1]]
    scale = QTFraction(degree, pi_factorial((n,)))
    chiH = chi_H(n)
    return _combine(n, {nu: scale * chiH[lam, nu] for nu in parts})


def central_A(mu) -> HeckeElement:
    """A_mu = sum_nu A_{mu nu} kappa_nu with A_{mu nu} the Lusztig counts."""
    from .counts import lusztig_count

    mu = Partition.from_composition(mu)
    n = mu.n
    return _combine(n, {nu: lusztig_count(mu, nu) for nu in partitions_of(n)})


def parabolic_sum(pi) -> HeckeElement:
    """sum over W_pi of T_w (the unnormalized projector)."""
    pi = tuple(pi)
    n = sum(pi)
    return HeckeElement(n, {w: 1 for w in young_subgroup(pi)})


def parabolic_idempotent(pi) -> HeckeElement:
    """1_{P_pi} = W_pi(q)^{-1} sum_{w in W_pi} T_w."""
    pi = tuple(pi)
    return parabolic_sum(pi).scale(QTFraction(1, poincare(pi)))
