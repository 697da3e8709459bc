"""Exact matrices with labeled rows and columns."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Sequence

from .errors import SingularSystem, SizeMismatch
from .exactring import ONE, ZERO, QTFraction, QTLaurent, as_fraction


def _is_zero(x) -> bool:
    if isinstance(x, (QTLaurent, QTFraction)):
        return x.is_zero()
    return x == 0


def simplify(x):
    """QTFraction with trivial denominator -> QTLaurent; ints stay ints."""
    if isinstance(x, QTFraction) and x.den == ONE:
        return x.num
    return x


class LabeledMatrix:
    """Dense matrix whose rows and columns carry hashable labels.

    Entries are ints, Fractions, QTLaurent or QTFraction values.
    """

    def __init__(self, row_labels: Sequence[Hashable], col_labels: Sequence[Hashable],
                 entries: Sequence[Sequence], name: str = ""):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        rows = [list(r) for r in entries]
        if len(rows) != len(self.row_labels) or any(len(r) != len(self.col_labels) for r in rows):
            raise SizeMismatch("entry grid does not match the label counts")
        self.entries = rows
        self.name = name
        self._rix = {lab: i for i, lab in enumerate(self.row_labels)}
        self._cix = {lab: j for j, lab in enumerate(self.col_labels)}

    @classmethod
    def from_function(cls, row_labels, col_labels, fn: Callable, name: str = ""):
        return cls(row_labels, col_labels, [[fn(r, c) for c in col_labels] for r in row_labels], name)

    @classmethod
    def diagonal(cls, labels, values, name: str = ""):
        labels = tuple(labels)
        values = list(values)
        return cls(labels, labels,
                   [[values[i] if i == j else 0 for j in range(len(labels))] for i in range(len(labels))],
                   name)

    @classmethod
    def identity(cls, labels, name: str = ""):
        return cls.diagonal(labels, [1] * len(tuple(labels)), name)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def __getitem__(self, key):
        r, c = key
        return self.entries[self._rix[r]][self._cix[c]]

    def row(self, r) -> list:
        return list(self.entries[self._rix[r]])

    def column(self, c) -> list:
        j = self._cix[c]
        return [row[j] for row in self.entries]

    def items(self):
        for i, r in enumerate(self.row_labels):
            for j, c in enumerate(self.col_labels):
                yield (r, c), self.entries[i][j]

    def map(self, fn: Callable, name: str | None = None) -> "LabeledMatrix":
        return LabeledMatrix(self.row_labels, self.col_labels,
                             [[fn(x) for x in row] for row in self.entries],
                             self.name if name is None else name)

    def transpose(self) -> "LabeledMatrix":
        return LabeledMatrix(self.col_labels, self.row_labels,
                             [list(col) for col in zip(*self.entries)] if self.entries else [],
                             self.name + "^t" if self.name else "")

    def __matmul__(self, other: "LabeledMatrix") -> "LabeledMatrix":
        if self.col_labels != other.row_labels:
            raise SizeMismatch("inner labels do not agree")
        out = []
        ncols = len(other.col_labels)
        for row in self.entries:
            acc = [ZERO] * ncols
            for k, x in enumerate(row):
                if _is_zero(x):
                    continue
                orow = other.entries[k]
                for j in range(ncols):
                    y = orow[j]
                    if not _is_zero(y):
                        acc[j] = acc[j] + x * y
            out.append([simplify(v) for v in acc])
        return LabeledMatrix(self.row_labels, other.col_labels, out)

    def mismatches(self, other: "LabeledMatrix") -> list:
        """Cells (row, col, mine, theirs) where the entries differ."""
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise SizeMismatch("labels differ")
        bad = []
        for i, r in enumerate(self.row_labels):
            for j, c in enumerate(self.col_labels):
                a, b = self.entries[i][j], other.entries[i][j]
                if not _entries_equal(a, b):
                    bad.append((r, c, a, b))
        return bad

    def __eq__(self, other):
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return (self.row_labels == other.row_labels and self.col_labels == other.col_labels
                and not self.mismatches(other))

    __hash__ = None

    def is_identity(self) -> bool:
        if self.row_labels != self.col_labels:
            return False
        return not self.mismatches(LabeledMatrix.identity(self.row_labels))

    def inverse(self) -> "LabeledMatrix":
        """Exact Gauss-Jordan inverse; SingularSystem if not invertible."""
        if len(self.row_labels) != len(self.col_labels):
            raise SizeMismatch("only square matrices have inverses")
        cols = invert(self.entries)
        return LabeledMatrix(self.col_labels, self.row_labels, cols)

    def __repr__(self):
        return f"LabeledMatrix({self.name!r}, shape={self.shape})"


def _entries_equal(a, b) -> bool:
    if isinstance(a, (QTLaurent, QTFraction)) or isinstance(b, (QTLaurent, QTFraction)):
        return as_fraction(a) == as_fraction(b)
    return a == b


def _is_plain(x) -> bool:
    return isinstance(x, (int, Fraction))


def invert(rows: Sequence[Sequence]) -> list[list]:
    """Inverse of a square matrix over Q or Q(q, t)."""
    n = len(rows)
    plain = all(_is_plain(x) for r in rows for x in r)
    conv = (lambda x: Fraction(x)) if plain else as_fraction
    one = Fraction(1) if plain else as_fraction(1)
    zero = Fraction(0) if plain else as_fraction(0)
    m = [[conv(x) for x in r] + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not _is_zero(m[r][c])), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = one / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and not _is_zero(m[r][c]):
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    out = [row[n:] for row in m]
    if plain:
        return [[x.numerator if x.denominator == 1 else x for x in row] for row in out]
    return [[simplify(x) for x in row] for row in out]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list:
    """x with rows @ x == rhs, over Q(q, t)."""
    n = len(rows)
    m = [[as_fraction(x) for x in r] + [as_fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
        if piv is None:
            raise SingularSystem("linear system is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and not m[r][c].is_zero():
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n] for row in m]
