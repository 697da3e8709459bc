"""The symmetric group S_n as a Coxeter group.

Permutations are stored in one-line notation with values 1..n.  Products
compose as functions, ``compose(u, v)(j) == u(v(j))``, so the word
``s1 s2`` means ``s1 ∘ s2``.  The permutation matrix of w has a 1 at
(row w(j), column j), which makes matrix multiplication agree with
``compose``.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import BadComposition, IndexOutOfRange, ParseError
from .exactring import ONE, QTLaurent
from .partitions import Partition


class Permutation(tuple):
    __slots__ = ()

    def __new__(cls, images=()):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"s{i} is not a generator of S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @classmethod
    def from_word(cls, n: int, word) -> "Permutation":
        w = cls.identity(n)
        for i in word:
            w = compose(w, cls.simple(n, i))
        return w

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, j: int) -> int:
        return self[j - 1]

    def length(self) -> int:
        return length(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(self)

    def label(self) -> str:
        """Generator form, e.g. ``s1s2s1``; the identity is ``1``."""
        word = reduced_word(self)
        return "".join(f"s{i}" for i in word) if word else "1"

    def __repr__(self):
        return f"Permutation({self.label()})"

    def __str__(self):
        return self.label()


def compose(u: Permutation, v: Permutation) -> Permutation:
    if len(u) != len(v):
        raise ValueError("permutations of different sizes")
    return Permutation(u[v[j] - 1] for j in range(len(v)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for j, wj in enumerate(w):
        out[wj - 1] = j + 1
    return Permutation(out)


def length(w) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def apply_simple(w: Permutation, i: int, side: str = "left") -> tuple[Permutation, int]:
    """s_i w (side='left') or w s_i (side='right'), with the length change."""
    n = len(w)
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s{i} is not a generator of S_{n}")
    images = list(w)
    if side == "left":
        a = images.index(i)
        b = images.index(i + 1)
        images[a], images[b] = i + 1, i
        delta = 1 if a < b else -1
    elif side == "right":
        delta = 1 if images[i - 1] < images[i] else -1
        images[i - 1], images[i] = images[i], images[i - 1]
    else:
        raise ValueError("side must be 'left' or 'right'")
    return Permutation(images), delta


def left_descent(w, i: int) -> bool:
    """l(s_i w) < l(w)."""
    return w.index(i + 1) < w.index(i)


def right_descent(w, i: int) -> bool:
    """l(w s_i) < l(w)."""
    return w[i - 1] > w[i]


@lru_cache(maxsize=None)
def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Lexicographically first reduced word (peeling smallest left descents)."""
    word = []
    cur = w
    n = len(w)
    while True:
        for i in range(1, n):
            if left_descent(cur, i):
                word.append(i)
                cur, _ = apply_simple(cur, i, "left")
                break
        else:
            return tuple(word)


def cycle_type(w) -> Partition:
    seen = [False] * len(w)
    sizes = []
    for start in range(len(w)):
        if seen[start]:
            continue
        size = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            size += 1
        sizes.append(size)
    return Partition.from_composition(sizes)


def min_class_rep(nu) -> Permutation:
    """gamma_nu: a product of consecutive-generator cycles, one per part of nu."""
    nu = Partition.from_composition(nu)
    n = nu.n
    word = []
    a = 1
    for part in nu:
        word.extend(range(a, a + part - 1))
        a += part
    return Permutation.from_word(n, word)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """S_n in canonical column order: descending length, then reduced word."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    perms.sort(key=lambda w: (-length(w), reduced_word(w)))
    return tuple(perms)


def _check_composition(pi, n=None) -> tuple[int, ...]:
    pi = tuple(int(x) for x in pi)
    if any(x <= 0 for x in pi):
        raise BadComposition(f"composition parts must be positive: {pi}")
    if n is not None and sum(pi) != n:
        raise BadComposition(f"{pi} is not a composition of {n}")
    return pi


@lru_cache(maxsize=None)
def young_subgroup(pi) -> tuple[Permutation, ...]:
    """All elements of W_pi = S_{pi_1} x ... x S_{pi_l}, blocks in the given order."""
    pi = _check_composition(pi)
    blocks = []
    start = 1
    for part in pi:
        blocks.append(list(itertools.permutations(range(start, start + part))))
        start += part
    out = []
    for choice in itertools.product(*blocks):
        out.append(Permutation(x for block in choice for x in block))
    return tuple(sorted(out, key=lambda w: (-length(w), reduced_word(w))))


def in_young_subgroup(w, pi) -> bool:
    pi = _check_composition(pi, len(w))
    start = 0
    for part in pi:
        block = w[start:start + part]
        if min(block) != start + 1 or max(block) != start + part:
            return False
        start += part
    return True


def poincare(pi) -> QTLaurent:
    """W_pi(q) = sum over W_pi of q^length."""
    out = {}
    for w in young_subgroup(tuple(pi)):
        k = length(w)
        out[(k, 0)] = out.get((k, 0), 0) + 1
    return QTLaurent(out)


def poincare_sn(n: int) -> QTLaurent:
    return poincare((n,)) if n else ONE


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Generator words ``s1 s2 s1`` / ``s1s2s1`` / ``1`` or one-line ``2 3 1``."""
    text = text.strip()
    if "s" in text:
        word = [int(x) for x in re.findall(r"s\s*(\d+)", text)]
        if re.sub(r"s\s*\d+|\s|\*", "", text):
            raise ParseError(f"bad permutation word {text!r}")
        size = n if n is not None else (max(word) + 1 if word else 1)
        return Permutation.from_word(size, word)
    pieces = [x for x in re.split(r"[,\s]+", text) if x]
    if n is not None and pieces == ["1"] and n != 1:
        return Permutation.identity(n)
    try:
        w = Permutation(int(x) for x in pieces)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if n is not None and len(w) != n:
        raise ParseError(f"{text!r} is not a permutation of size {n}")
    return w


def class_minimal_length(nu) -> int:
    """Minimal length in the class of cycle type nu, which is n - l(nu)."""
    return sum(nu) - len(nu)


def is_minimal_in_class(w) -> bool:
    return length(w) == class_minimal_length(cycle_type(w))

