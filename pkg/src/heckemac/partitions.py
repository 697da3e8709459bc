"""Integer partitions, diagram statistics, dominance and Kostka numbers."""

from __future__ import annotations

import re
from functools import lru_cache
from math import comb

from .errors import CellOutOfRange, ParseError, SizeMismatch


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Tuples compare lexicographically, so ``sorted(..., reverse=True)`` gives
    the canonical index order used for every matrix in the package.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_composition(cls, parts) -> "Partition":
        return cls(sorted((int(x) for x in parts), reverse=True))

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for part in self:
            out[part] = out.get(part, 0) + 1
        return out

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield (i, j)

    def label(self) -> str:
        """Export label, e.g. ``2,1``."""
        return ",".join(str(x) for x in self)

    def compact(self) -> str:
        """Exponent notation, e.g. ``21`` or ``1^3``."""
        if not self:
            return "()"
        groups = []
        for part, mult in sorted(self.multiplicities().items(), reverse=True):
            groups.append(str(part) if mult == 1 else f"{part}^{mult}")
        if all("^" not in g for g in groups) and all(len(g) == 1 for g in groups):
            return "".join(groups)
        return " ".join(groups)

    def __repr__(self):
        return f"Partition({', '.join(str(x) for x in self)})" if self else "Partition()"

    def __str__(self):
        return f"({self.compact()})"


def parse_partition(text: str) -> Partition:
    """Accepts ``2,1``, ``2 1``, ``1^3``, ``3,1^2`` and the like."""
    text = text.strip().strip("()")
    if not text:
        return Partition()
    parts: list[int] = []
    for chunk in re.split(r"[,\s]+", text):
        if not chunk:
            continue
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", chunk)
        if not m:
            raise ParseError(f"bad partition text {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    try:
        return Partition.from_composition(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_composition(text: str) -> tuple[int, ...]:
    """Like :func:`parse_partition` but keeps the order of the parts."""
    text = text.strip().strip("()")
    parts: list[int] = []
    for chunk in re.split(r"[,\s]+", text):
        if not chunk:
            continue
        m = re.fullmatch(r"(\d+)(?:\^(\d+))?", chunk)
        if not m or int(m.group(1)) <= 0:
            raise ParseError(f"bad composition text {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return tuple(parts)


def _generate(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _generate(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _generate(n, n))


def compositions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All compositions of n with positive parts, in descending lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return tuple(out)


def n_stat(lam) -> int:
    """n(lambda) = sum_i (i-1) lambda_i."""
    return sum(i * part for i, part in enumerate(lam))


def conjugate(lam) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


def dominates(lam, mu) -> bool:
    """True when lam >= mu in dominance order (both of the same size)."""
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"{lam} and {mu} have different sizes")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def _check_cell(lam, cell):
    i, j = cell
    if i < 0 or j < 0 or i >= len(lam) or j >= lam[i]:
        raise CellOutOfRange(f"cell {cell} is not in the diagram of {tuple(lam)}")


def arm(lam, cell) -> int:
    """Cells strictly to the right of (row i, column j), 0-based."""
    _check_cell(lam, cell)
    i, j = cell
    return lam[i] - j - 1


def leg(lam, cell) -> int:
    """Cells strictly below (row i, column j), 0-based."""
    _check_cell(lam, cell)
    i, j = cell
    return sum(1 for row in lam[i + 1:] if row > j)


def hook_factor_q_t(lam):
    """prod over cells of (1 - q^arm t^(leg+1)), the J normalization."""
    from .exactring import ONE, QTLaurent

    out = ONE
    for cell in Partition(lam).cells():
        out = out * (ONE - QTLaurent.monomial(1, arm(lam, cell), leg(lam, cell) + 1))
    return out


@lru_cache(maxsize=None)
def _ssyt_count(shape: tuple, content: tuple) -> int:
    # strip the largest letter as a horizontal strip, recurse on the rest
    if not content:
        return 1 if not shape else 0
    k = content[-1]
    rest = content[:-1]
    total = 0
    for inner in _horizontal_strips(shape, k):
        total += _ssyt_count(inner, rest)
    return total


def _horizontal_strips(shape: tuple, k: int):
    """Shapes mu inside shape with shape/mu a horizontal strip of size k."""
    rows = len(shape)

    def rec(i, remaining, acc):
        if i == rows:
            if remaining == 0:
                mu = tuple(x for x in acc if x > 0)
                yield mu
            return
        lower = shape[i + 1] if i + 1 < rows else 0
        for take in range(0, min(remaining, shape[i] - lower) + 1):
            yield from rec(i + 1, remaining - take, acc + (shape[i] - take,))

    yield from rec(0, k, ())


def kostka(lam, mu) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return _ssyt_count(lam, tuple(x for x in mu if x))


def binomial_sum(lam) -> int:
    return sum(comb(part, 2) for part in lam)
