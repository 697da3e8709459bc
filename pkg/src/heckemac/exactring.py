"""Exact Laurent polynomials in q, t over the rationals and their fraction field.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing here
ever touches floating point.  Both classes are immutable.

Text form (used by every export)::

    term := [sign] coefficient ['*' 'q' ['^' int]] ['*' 't' ['^' int]]

with terms ordered by descending total degree, then descending q-exponent,
e.g. ``q^2*t - 2*q + 1``.  A fraction prints as ``(num)/(den)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Union

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dmp_rr_prs_gcd
from sympy.polys.polyerrors import HeuristicGCDFailed
from sympy.polys.rings import ring

from .errors import NonPolynomialResult, NotDivisible, ParseError, ZeroDenominator
from .kernels import poly_mul_terms

Exps = tuple[int, int]
Scalar = Union[int, Fraction]

_GCD_RING, _, _ = ring("q,t", ZZ)


def _tidy(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _coerce_coeff(c) -> Scalar:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _tidy(c)
    if isinstance(c, Rational):
        return _tidy(Fraction(c.numerator, c.denominator))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _sort_key(e: Exps):
    return (-(e[0] + e[1]), -e[0])


class QTLaurent:
    """Finite sum of c * q^a * t^b with rational c and integer a, b."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Scalar] | Scalar | None = None):
        if terms is None:
            clean = {}
        elif isinstance(terms, Mapping):
            clean = {}
            for (a, b), c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    clean[(int(a), int(b))] = c
        else:
            c = _coerce_coeff(terms)
            clean = {(0, 0): c} if c else {}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QTLaurent":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: Scalar = 1, q_exp: int = 0, t_exp: int = 0) -> "QTLaurent":
        return cls({(q_exp, t_exp): coeff})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[Exps, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), 0)

    def coefficient(self, q_exp: int, t_exp: int = 0) -> Scalar:
        return self._terms.get((q_exp, t_exp), 0)

    def min_exponents(self) -> Exps:
        if not self._terms:
            return (0, 0)
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def max_exponents(self) -> Exps:
        if not self._terms:
            return (0, 0)
        return (max(a for a, _ in self._terms), max(b for _, b in self._terms))

    def involves_t(self) -> bool:
        return any(b for _, b in self._terms)

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self._terms.values())

    def is_polynomial(self) -> bool:
        """No negative exponents."""
        return all(a >= 0 and b >= 0 for a, b in self._terms)

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return QTLaurent._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _to_laurent_or_none(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _tidy(v)
            else:
                out.pop(k, None)
        return QTLaurent._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_laurent_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _to_laurent_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return QTLaurent._raw({k: _tidy(c * other) for k, c in self._terms.items()})
        other = _to_laurent_or_none(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        return QTLaurent._raw(poly_mul_terms(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                return QTFraction(ONE, self ** (-k))
            ((a, b), c), = self._terms.items()
            return QTLaurent({(a * k, b * k): Fraction(c) ** k})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDenominator("division by zero")
            return self * (Fraction(1) / other)
        other_l = _to_laurent_or_none(other)
        if other_l is not None:
            if other_l.is_monomial():
                return self * other_l ** -1
            return QTFraction(self, other_l)
        if isinstance(other, QTFraction):
            return QTFraction(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        other = _to_laurent_or_none(other)
        if other is None:
            return NotImplemented
        return QTFraction(other, self)

    def __eq__(self, other):
        if isinstance(other, QTLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): other} if other else {})
        if isinstance(other, QTFraction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- transformations --------------------------------------------------
    def shift(self, q_exp: int = 0, t_exp: int = 0) -> "QTLaurent":
        return QTLaurent._raw({(a + q_exp, b + t_exp): c for (a, b), c in self._terms.items()})

    def map_exponents(self, fn) -> "QTLaurent":
        out: dict = {}
        for e, c in self._terms.items():
            k = fn(*e)
            v = out.get(k, 0) + c
            if v:
                out[k] = _tidy(v)
            else:
                out.pop(k, None)
        return QTLaurent._raw(out)

    def swap_qt(self) -> "QTLaurent":
        return QTLaurent._raw({(b, a): c for (a, b), c in self._terms.items()})

    def substitute(self, q_image, t_image) -> "QTFraction":
        return substitute(self, q_image, t_image)

    def evaluate(self, q, t=0) -> Fraction:
        """Numeric value at rational q, t (negative powers need nonzero values)."""
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            if (a < 0 and q == 0) or (b < 0 and t == 0):
                raise ZeroDenominator(f"cannot evaluate {self} at q={q}, t={t}")
            total += c * Fraction(q) ** a * Fraction(t) ** b
        return total

    def exact_div(self, other) -> "QTLaurent":
        return exact_div(self, other)

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self._terms:
            return Fraction(0)
        nums = 0
        dens = 1
        for c in self._terms.values():
            c = Fraction(c)
            nums = gcd(nums, c.numerator)
            dens = dens * c.denominator // gcd(dens, c.denominator)
        return Fraction(nums, dens)

    def leading_exponent(self) -> Exps:
        return min(self._terms, key=_sort_key)

    # -- text -------------------------------------------------------------
    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"QTLaurent({str(self)!r})"

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))


def _to_laurent_or_none(x):
    if isinstance(x, QTLaurent):
        return x
    if isinstance(x, (int, Fraction)) or (isinstance(x, Rational) and not isinstance(x, bool)):
        return QTLaurent(x)
    if isinstance(x, bool):
        return QTLaurent(int(x))
    return None


ZERO = QTLaurent()
ONE = QTLaurent(1)
Q = QTLaurent.monomial(1, 1, 0)
T = QTLaurent.monomial(1, 0, 1)


def as_laurent(x) -> QTLaurent:
    if isinstance(x, QTFraction):
        return x.to_laurent()
    out = _to_laurent_or_none(x)
    if out is None:
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")
    return out


def as_fraction(x) -> "QTFraction":
    if isinstance(x, QTFraction):
        return x
    return QTFraction(as_laurent(x))


# ---------------------------------------------------------------------------
# polynomial gcd (via sympy's integer polynomial ring) and normalization


def _integer_scale(terms: dict) -> Fraction:
    """Return s > 0 such that s * terms has coprime integer coefficients."""
    num = 0
    den = 1
    for c in terms.values():
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(den, num)


def _poly_gcd(a: dict, b: dict) -> dict:
    """gcd of two integer-coefficient polynomials with nonnegative exponents."""
    if len(a) == 1 or len(b) == 1:
        return {(0, 0): 1}
    fa = _GCD_RING.from_dict(a)
    fb = _GCD_RING.from_dict(b)
    try:
        g = fa.gcd(fb)
    except HeuristicGCDFailed:
        h, _, _ = dmp_rr_prs_gcd(fa.to_dense(), fb.to_dense(), 1, ZZ)
        g = _GCD_RING.from_dense(h)
    return {k: int(v) for k, v in g.items()}


class QTFraction:
    """num/den with den a nonzero Laurent polynomial.

    Stored in a canonical form: den is a polynomial with coprime integer
    coefficients, not divisible by q or t, with positive leading coefficient
    in print order, and gcd(num, den) = 1.  Equality is cross-multiplication,
    which for the canonical form coincides with structural equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, reduce: bool = True):
        num = _to_laurent_or_none(num) if not isinstance(num, QTFraction) else num
        den = _to_laurent_or_none(den) if not isinstance(den, QTFraction) else den
        if isinstance(num, QTFraction) or isinstance(den, QTFraction):
            n = as_fraction(num) if not isinstance(num, QTFraction) else num
            d = as_fraction(den) if not isinstance(den, QTFraction) else den
            if d.num.is_zero():
                raise ZeroDenominator("zero denominator")
            num, den = n.num * d.den, n.den * d.num
        if num is None or den is None:
            raise TypeError("QTFraction needs exact numerator and denominator")
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        self._hash = None
        self._normalize(num, den, reduce)

    @classmethod
    def _raw(cls, num: QTLaurent, den: QTLaurent) -> "QTFraction":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    def _normalize(self, num: QTLaurent, den: QTLaurent, reduce: bool):
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if den.is_monomial():
            ((a, b), c), = den.items()
            self.num = num.shift(-a, -b) * (Fraction(1) / c)
            self.den = ONE
            return
        a, b = den.min_exponents()
        den = den.shift(-a, -b)
        num = num.shift(-a, -b)
        scale = _integer_scale(den._terms)
        lead = den._terms[den.leading_exponent()]
        if lead < 0:
            scale = -scale
        if scale != 1:
            den = den * scale
            num = num * scale
        if reduce:
            na, nb = num.min_exponents()
            shifted = num.shift(-na, -nb)
            s = _integer_scale(shifted._terms)
            g = _poly_gcd({k: int(c * s) for k, c in shifted.items()}, den._terms)
            if len(g) > 1:
                gl = QTLaurent._raw(g)
                num = exact_div(num, gl)
                den = exact_div(den, gl)
                lead = den._terms[den.leading_exponent()]
                if lead < 0:
                    num, den = -num, -den
            if den.is_monomial():
                ((a, b), c), = den.items()
                num, den = num.shift(-a, -b) * (Fraction(1) / c), ONE
        self.num = num
        self.den = den

    # -- inspection -------------------------------------------------------
    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def to_laurent(self) -> QTLaurent:
        if self.den == ONE:
            return self.num
        try:
            return exact_div(self.num, self.den)
        except NotDivisible:
            raise NonPolynomialResult(f"{self} is not a Laurent polynomial") from None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return QTFraction._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den == ONE:
                return QTFraction._raw(self.num + other.num, ONE)
            return QTFraction(self.num + other.num, self.den)
        return QTFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return QTFraction._raw(ZERO, ONE)
        if self.den == ONE and other.den == ONE:
            return QTFraction._raw(self.num * other.num, ONE)
        return QTFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDenominator("division by zero")
        return QTFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self.num.is_zero():
                raise ZeroDenominator("zero to a negative power")
            return QTFraction(self.den ** (-k), self.num ** (-k))
        if self.den == ONE:
            return QTFraction._raw(self.num ** k, ONE)
        return QTFraction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = _fraction_or_none(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.num) if self.den == ONE else hash((self.num, self.den))
        return self._hash

    # -- transformations --------------------------------------------------
    def substitute(self, q_image, t_image) -> "QTFraction":
        return substitute(self.num, q_image, t_image) / substitute(self.den, q_image, t_image)

    def evaluate(self, q, t=0) -> Fraction:
        d = self.den.evaluate(q, t)
        if d == 0:
            raise ZeroDenominator(f"denominator of {self} vanishes at q={q}, t={t}")
        return self.num.evaluate(q, t) / d

    def swap_qt(self) -> "QTFraction":
        return QTFraction(self.num.swap_qt(), self.den.swap_qt())

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QTFraction({str(self)!r})"


def _fraction_or_none(x):
    if isinstance(x, QTFraction):
        return x
    lx = _to_laurent_or_none(x)
    if lx is None:
        return None
    return QTFraction._raw(lx, ONE)


# ---------------------------------------------------------------------------
# operations


def poly_mul(a: QTLaurent, b: QTLaurent) -> QTLaurent:
    return as_laurent(a) * as_laurent(b)


def _split_monomial(img):
    """(coeff, q_exp, t_exp) if img is zero or a monomial Laurent, else None."""
    if isinstance(img, QTFraction):
        if img.den != ONE:
            return None
        img = img.num
    img = as_laurent(img)
    if img.is_zero():
        return (0, 0, 0)
    if img.is_monomial():
        ((a, b), c), = img.items()
        return (c, a, b)
    return None


def substitute(f, q_image, t_image) -> QTFraction:
    """Replace q and t in f by the given fractions."""
    if isinstance(f, QTFraction):
        return f.substitute(q_image, t_image)
    f = as_laurent(f)
    mq = _split_monomial(q_image)
    mt = _split_monomial(t_image)
    if mq is not None and mt is not None:
        out: dict = {}
        cq, aq, bq = mq
        ct, at, bt = mt
        for (i, j), c in f.items():
            if (i < 0 and cq == 0) or (j < 0 and ct == 0):
                raise ZeroDenominator(f"substitution makes a negative power of zero in {f}")
            if (i and cq == 0) or (j and ct == 0):
                continue
            coeff = c * (Fraction(cq) ** i if i else 1) * (Fraction(ct) ** j if j else 1)
            key = (aq * i + at * j, bq * i + bt * j)
            v = out.get(key, 0) + coeff
            if v:
                out[key] = _tidy(v)
            else:
                out.pop(key, None)
        return QTFraction._raw(QTLaurent._raw(out), ONE)
    A = as_fraction(q_image)
    B = as_fraction(t_image)
    if f.is_zero():
        return QTFraction()
    imin = min(0, min(i for i, _ in f._terms))
    imax = max(0, max(i for i, _ in f._terms))
    jmin = min(0, min(j for _, j in f._terms))
    jmax = max(0, max(j for _, j in f._terms))
    if (imin < 0 and A.num.is_zero()) or (jmin < 0 and B.num.is_zero()):
        raise ZeroDenominator(f"substitution makes a negative power of zero in {f}")

    @lru_cache(maxsize=None)
    def pw(poly_id, k):
        base = (A.num, A.den, B.num, B.den)[poly_id]
        return base ** k

    total = ZERO
    for (i, j), c in f.items():
        term = pw(0, i - imin) * pw(1, imax - i) * pw(2, j - jmin) * pw(3, jmax - j)
        total = total + term * c
    den = pw(0, -imin) * pw(1, imax) * pw(2, -jmin) * pw(3, jmax)
    return QTFraction(total, den)


def exact_div(f, g) -> QTLaurent:
    """The Laurent polynomial h with h * g == f; NotDivisible if none exists."""
    f = as_laurent(f)
    g = as_laurent(g)
    if g.is_zero():
        raise ZeroDenominator("exact_div by zero")
    if f.is_zero():
        return ZERO
    fa, fb = f.min_exponents()
    ga, gb = g.min_exponents()
    if g.is_monomial():
        ((_, _), c), = g.items()
        return f.shift(-ga, -gb) * (Fraction(1) / c)
    g0 = g.shift(-ga, -gb)._terms
    r = dict(f.shift(-fa, -fb)._terms)
    lg = max(g0)
    lc = g0[lg]
    out = {}
    while r:
        lt = max(r)
        if lt[0] < lg[0] or lt[1] < lg[1]:
            raise NotDivisible(f"({f}) is not divisible by ({g})")
        c = _tidy(Fraction(r[lt]) / lc)
        da, db = lt[0] - lg[0], lt[1] - lg[1]
        out[(da, db)] = c
        for (a, b), gc in g0.items():
            k = (a + da, b + db)
            v = r.get(k, 0) - c * gc
            if v:
                r[k] = _tidy(v)
            else:
                r.pop(k, None)
    return QTLaurent._raw(out).shift(fa - ga, fb - gb)


def q_integer(k: int) -> QTLaurent:
    """[k] = 1 + q + ... + q^(k-1)."""
    if k < 1:
        raise ValueError("q_integer needs k >= 1")
    return QTLaurent({(i, 0): 1 for i in range(k)})


def q_factorial(k: int) -> QTLaurent:
    if k < 0:
        raise ValueError("q_factorial needs k >= 0")
    out = ONE
    for i in range(2, k + 1):
        out = out * q_integer(i)
    return out


def pi_factorial(composition: Iterable[int]) -> QTLaurent:
    """[pi]! = [pi_1]! ... [pi_l]!."""
    out = ONE
    for part in composition:
        if part < 1:
            raise ValueError("composition parts must be positive")
        out = out * q_factorial(part)
    return out


# ---------------------------------------------------------------------------
# text


def _format_coeff(c) -> str:
    return str(c)


def format_laurent(f: QTLaurent) -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for (a, b), c in f.sorted_items():
        neg = c < 0
        mag = -c if neg else c
        mono = []
        if a:
            mono.append("q" if a == 1 else f"q^{a}")
        if b:
            mono.append("t" if b == 1 else f"t^{b}")
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(mono)
        else:
            body = "*".join([_format_coeff(mag)] + mono)
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def format_scalar(x) -> str:
    if isinstance(x, (QTLaurent, QTFraction)):
        return str(x)
    return str(as_laurent(x))


_TOKEN = re.compile(r"\s*(?:(\d+)|([qt])|(\*\*|[()+\-*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"cannot parse {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            exp = sign * self.take("num")[1]
            base = base ** exp
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return QTFraction._raw(QTLaurent(val), ONE)
        if kind == "var":
            self.take()
            return QTFraction._raw(Q if val == "q" else T, ONE)
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"cannot parse {self.text!r}")


def parse_fraction(text: str) -> QTFraction:
    """Parse the polynomial/fraction text form (a superset of the export grammar)."""
    return as_fraction(_Parser(text).parse())


def parse_laurent(text: str) -> QTLaurent:
    return parse_fraction(text).to_laurent()


def parse_scalar(text: str):
    """Laurent polynomial when the text denotes one, otherwise a fraction."""
    f = parse_fraction(text)
    return f.num if f.den == ONE else f
