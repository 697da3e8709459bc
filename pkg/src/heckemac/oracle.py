"""Brute-force counts over GL_n(F_p).

Flags gB are enumerated through a canonical column-reduced representative,
Bruhat cells are read off from rank conditions, and the counts of Lusztig
varieties, parabolic Springer fibers and class/cell intersections are
compared with the polynomial formulas evaluated at q = p.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from functools import lru_cache

from . import kernels
from .errors import ScaleExceeded, Singular
from .partitions import Partition, partitions_of
from .symgroup import (
    Permutation,
    all_permutations,
    in_young_subgroup,
    inverse,
    young_subgroup,
)

# largest p allowed for flag enumeration, per n
_FLAG_LIMITS = {2: 13, 3: 5}
# whole-group enumeration is allowed while p^(n^2) stays below this
_GROUP_LIMIT = 20000


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _check_field(p: int):
    if not _is_prime(p):
        raise ScaleExceeded(f"only prime fields are supported, got p={p}")


def check_flag_scale(n: int, p: int):
    _check_field(p)
    if n <= 1:
        return
    limit = _FLAG_LIMITS.get(n)
    if limit is None or p > limit:
        raise ScaleExceeded(f"flag enumeration for n={n}, p={p} is beyond desk scale")


def check_group_scale(n: int, p: int):
    _check_field(p)
    if p ** (n * n) > _GROUP_LIMIT:
        raise ScaleExceeded(f"enumerating GL_{n}(F_{p}) is beyond desk scale")


class FpMatrix:
    """n x n matrix over F_p, stored as a flat row-major tuple."""

    __slots__ = ("n", "p", "entries")

    def __init__(self, n: int, p: int, entries):
        entries = tuple(int(x) % p for x in entries)
        if len(entries) != n * n:
            raise ValueError("wrong number of entries")
        self.n = n
        self.p = p
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, p: int) -> "FpMatrix":
        rows = [list(r) for r in rows]
        return cls(len(rows), p, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(n, p, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def permutation(cls, w, p: int) -> "FpMatrix":
        """1 at (row w(j), column j)."""
        n = len(w)
        e = [0] * (n * n)
        for j, wj in enumerate(w):
            e[(wj - 1) * n + j] = 1
        return cls(n, p, e)

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.n, self.p, kernels.matmul_mod(self.entries, other.entries, self.n, self.p))

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix(self.n, self.p, [a - b for a, b in zip(self.entries, other.entries)])

    def __pow__(self, k: int) -> "FpMatrix":
        out = FpMatrix.identity(self.n, self.p)
        for _ in range(k):
            out = out @ self
        return out

    def rank(self) -> int:
        return kernels.rank_mod(self.entries, self.n, self.n, self.p)

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def inverse(self) -> "FpMatrix":
        inv = kernels.inverse_mod(self.entries, self.n, self.p)
        if inv is None:
            raise Singular("matrix is not invertible")
        return FpMatrix(self.n, self.p, inv)

    def __eq__(self, other):
        return isinstance(other, FpMatrix) and (self.p, self.entries) == (other.p, other.entries)

    def __hash__(self):
        return hash((self.p, self.entries))

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.rows()})"


def bruhat_word(g: FpMatrix) -> Permutation:
    """The w with g in BwB (B upper triangular)."""
    w = kernels.bruhat_word(g.entries, g.n, g.p)
    if w is None:
        raise Singular("bruhat_word needs an invertible matrix")
    return Permutation(w)


def flag_canonical(g: FpMatrix) -> FpMatrix:
    """Canonical representative of the coset gB."""
    if not g.is_invertible():
        raise Singular("flags come from invertible matrices")
    return FpMatrix(g.n, g.p, kernels.flag_canonical(g.entries, g.n, g.p))


@lru_cache(maxsize=None)
def _flags(n: int, p: int) -> tuple:
    """Canonical forms, generated directly: pivot of column j in row w(j),
    free entries above it outside earlier pivot rows, zeros elsewhere."""
    out = []
    for w in all_permutations(n):
        slots = []
        for j in range(n):
            used = {w[k] - 1 for k in range(j)}
            slots.extend((i, j) for i in range(w[j] - 1) if i not in used)
        for values in itertools.product(range(p), repeat=len(slots)):
            e = [0] * (n * n)
            for j in range(n):
                e[(w[j] - 1) * n + j] = 1
            for (i, j), v in zip(slots, values):
                e[i * n + j] = v
            out.append(tuple(e))
    return tuple(out)


def enumerate_flags(n: int, p: int) -> list[FpMatrix]:
    """One canonical representative for each coset in GL_n(F_p)/B."""
    check_flag_scale(n, p)
    return [FpMatrix(n, p, e) for e in _flags(n, p)]


def jordan_unipotent(mu, p: int) -> FpMatrix:
    """Upper unitriangular Jordan matrix with blocks of sizes mu."""
    mu = Partition.from_composition(mu)
    n = mu.n
    e = [0] * (n * n)
    start = 0
    for part in mu:
        for k in range(start, start + part):
            e[k * n + k] = 1
            if k + 1 < start + part:
                e[k * n + k + 1] = 1
        start += part
    return FpMatrix(n, p, e)


def _conjugated_words(g: FpMatrix) -> list:
    """bruhat_word(y^{-1} g y) for every flag y, in flag order."""
    n, p = g.n, g.p
    out = []
    for y in _flags(n, p):
        yinv = kernels.inverse_mod(y, n, p)
        x = kernels.matmul_mod(kernels.matmul_mod(yinv, g.entries, n, p), y, n, p)
        out.append(kernels.bruhat_word(x, n, p))
    return out


def oracle_lusztig(mu, w, p: int, inverse_element: bool = False) -> int:
    """#{yB : y^{-1} u_mu y in BwB} (u_mu^{-1} when inverse_element)."""
    mu = Partition.from_composition(mu)
    check_flag_scale(mu.n, p)
    u = jordan_unipotent(mu, p)
    if inverse_element:
        u = u.inverse()
    target = tuple(w)
    return sum(1 for x in _conjugated_words(u) if x == target)


@lru_cache(maxsize=None)
def _parabolic_cosets(n: int, p: int, pi: tuple) -> tuple:
    """Flags grouped into P_pi cosets: y ~ y' iff y^{-1} y' lies in B W_pi B."""
    flags = _flags(n, p)
    reps: list = []
    members: list = []
    for k, y in enumerate(flags):
        for r, rep in enumerate(reps):
            d = kernels.matmul_mod(kernels.inverse_mod(rep, n, p), y, n, p)
            if in_young_subgroup(kernels.bruhat_word(d, n, p), pi):
                members[r].append(k)
                break
        else:
            reps.append(y)
            members.append([k])
    return tuple(tuple(m) for m in members)


def oracle_springer(mu, pi, p: int, inverse_element: bool = False) -> int:
    """#{yP_pi : y^{-1} u_mu y in P_pi}."""
    mu = Partition.from_composition(mu)
    n = mu.n
    pi = tuple(pi)
    check_flag_scale(n, p)
    u = jordan_unipotent(mu, p)
    if inverse_element:
        u = u.inverse()
    words = _conjugated_words(u)
    return sum(1 for coset in _parabolic_cosets(n, p, pi) if in_young_subgroup(words[coset[0]], pi))


def _unipotent_type(g: tuple, n: int, p: int) -> Partition | None:
    """Jordan type if g is unipotent, from the ranks of (g - 1)^k."""
    nil = tuple((g[k] - (1 if k // n == k % n else 0)) % p for k in range(n * n))
    ranks = [n]
    power = tuple(int(i == j) for i in range(n) for j in range(n))
    for _ in range(n):
        power = kernels.matmul_mod(power, nil, n, p)
        ranks.append(kernels.rank_mod(power, n, n, p))
    if ranks[-1]:
        return None
    # number of blocks of size >= k is ranks[k-1] - ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, n + 1)]
    parts = []
    for k in range(n, 0, -1):
        bigger = at_least[k] if k < n else 0
        parts.extend([k] * (at_least[k - 1] - bigger))
    return Partition.from_composition(parts)


@lru_cache(maxsize=None)
def _unipotent_census(n: int, p: int) -> dict:
    """For each Jordan type: (class size, {w: #(class in BwB)})."""
    check_group_scale(n, p)
    out: dict = {}
    for e in itertools.product(range(p), repeat=n * n):
        mu = _unipotent_type(e, n, p)
        if mu is None:
            continue
        w = kernels.bruhat_word(e, n, p)
        size, cells = out.setdefault(mu, [0, {}])
        out[mu][0] = size + 1
        cells[w] = cells.get(w, 0) + 1
    return {mu: (size, cells) for mu, (size, cells) in out.items()}


@dataclass
class ClassIntersection:
    n: int
    p: int
    mu: Partition
    w: Permutation
    class_size: int
    intersection: int
    flag_count: int
    lusztig: int

    @property
    def holds(self) -> bool:
        # Card Y_{BwB}(u^{-1}) * |C| == |G/B| * Card(C cap B w^{-1} B)
        return self.lusztig * self.class_size == self.flag_count * self.intersection


def oracle_class_intersection(mu, w, p: int) -> ClassIntersection:
    mu = Partition.from_composition(mu)
    n = mu.n
    w = Permutation(w)
    check_group_scale(n, p)
    check_flag_scale(n, p)
    size, cells = _unipotent_census(n, p)[mu]
    return ClassIntersection(
        n=n, p=p, mu=mu, w=w,
        class_size=size,
        intersection=cells.get(tuple(inverse(w)), 0),
        flag_count=len(_flags(n, p)),
        lusztig=oracle_lusztig(mu, w, p, inverse_element=True),
    )


# ---------------------------------------------------------------------------
# comparison reports


@dataclass
class OracleRecord:
    n: int
    p: int
    mu: str
    w_or_pi: str
    oracle_count: int
    polynomial_value: int
    match: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _value(poly, p: int) -> int:
    v = poly.evaluate(p)
    return int(v) if v.denominator == 1 else v


def compare_lusztig(n: int, p: int) -> list[OracleRecord]:
    from .counts import lusztig_count_w

    check_flag_scale(n, p)
    out = []
    for mu in partitions_of(n):
        words = _conjugated_words(jordan_unipotent(mu, p))
        for w in all_permutations(n):
            got = sum(1 for x in words if x == tuple(w))
            want = _value(lusztig_count_w(mu, w), p)
            out.append(OracleRecord(n, p, mu.label(), w.label(), got, want, got == want))
    return out


def compare_springer(n: int, p: int, compositions=None) -> list[OracleRecord]:
    from .counts import springer_count

    check_flag_scale(n, p)
    cols = partitions_of(n) if compositions is None else compositions
    out = []
    for mu in partitions_of(n):
        for pi in cols:
            got = oracle_springer(mu, pi, p)
            want = _value(springer_count(mu, pi), p)
            out.append(OracleRecord(n, p, mu.label(), ",".join(map(str, pi)), got, want, got == want))
    return out


def compare_class_intersection(n: int, p: int) -> list[OracleRecord]:
    """Records whose counts are Card Y_{BwB}(u^{-1}) |C| and |G/B| Card(C cap Bw^{-1}B)."""
    out = []
    for mu in partitions_of(n):
        for w in all_permutations(n):
            r = oracle_class_intersection(mu, w, p)
            lhs = r.lusztig * r.class_size
            rhs = r.flag_count * r.intersection
            out.append(OracleRecord(n, p, mu.label(), w.label(), lhs, rhs, lhs == rhs))
    return out


__all__ = [
    "ClassIntersection",
    "FpMatrix",
    "OracleRecord",
    "bruhat_word",
    "compare_class_intersection",
    "compare_lusztig",
    "compare_springer",
    "enumerate_flags",
    "flag_canonical",
    "jordan_unipotent",
    "oracle_class_intersection",
    "oracle_lusztig",
    "oracle_springer",
    "young_subgroup",
]
