"""Character tables and point-count polynomials.

Every count here is computed twice, by two independent routes, and the
results are compared; a disagreement raises InternalMismatch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InternalMismatch, NotDivisible
from .exactring import (
    ZERO,
    Q,
    QTFraction,
    QTLaurent,
    T,
    as_fraction,
    exact_div,
    pi_factorial,
)
from .hecke import contraction_matrix, expansion_matrix
from .matrices import LabeledMatrix
from .partitions import Partition, n_stat, partitions_of
from .symfunc import K_matrix, L_matrix, a_matrix, b_matrix
from .symgroup import (
    Permutation,
    all_permutations,
    apply_simple,
    class_minimal_length,
    cycle_type,
    length,
    poincare,
    young_subgroup,
)


def _laurent(x) -> QTLaurent:
    return as_fraction(x).to_laurent()


def _partition(x) -> Partition:
    return Partition.from_composition(x)


@lru_cache(maxsize=None)
def chi_G(n: int) -> LabeledMatrix:
    """chi^lam_G(u_mu) = q^n(mu) K_{lam mu}(0, 1/q): rows lam, columns mu."""
    parts = partitions_of(n)
    K = K_matrix(n)
    rows = [[_laurent(as_fraction(K[lam, mu]).substitute(ZERO, Q ** -1)) * Q ** n_stat(mu)
             for mu in parts] for lam in parts]
    return LabeledMatrix(parts, parts, rows, name="chiG")


@lru_cache(maxsize=None)
def chi_H(n: int) -> LabeledMatrix:
    """chi^lam_H(T_gamma_nu) = q^(n - l(nu)) L_{lam nu}(1/q): rows lam, columns nu."""
    parts = partitions_of(n)
    L = L_matrix(n)
    rows = [[_laurent(as_fraction(L[lam, nu]).substitute(Q, Q ** -1)) * Q ** (n - len(nu))
             for nu in parts] for lam in parts]
    return LabeledMatrix(parts, parts, rows, name="chiH")


@lru_cache(maxsize=None)
def lusztig_table(n: int) -> LabeledMatrix:
    """A_{mu nu} = Card Y_{B gamma_nu B}(u_mu), from the a-matrix and from characters."""
    parts = partitions_of(n)
    a = a_matrix(n)
    formula = [[_laurent(as_fraction(a[mu, nu]).substitute(ZERO, Q ** -1))
                * Q ** (n_stat(mu) + n - len(nu)) for nu in parts] for mu in parts]
    A = LabeledMatrix(parts, parts, formula, name="A")
    via_chars = chi_G(n).transpose() @ chi_H(n)
    bad = A.mismatches(via_chars)
    if bad:
        mu, nu, x, y = bad[0]
        raise InternalMismatch(f"A at ({mu}, {nu}): formula gives {x}, characters give {y}")
    return A


def lusztig_count(mu, nu) -> QTLaurent:
    mu = _partition(mu)
    return lusztig_table(mu.n)[mu, _partition(nu)]


def _lusztig_recursive(n: int, mu: Partition):
    """Card Y_{BwB}(u_mu) for every w by the length recursion alone."""
    A = lusztig_table(n)
    memo: dict[Permutation, QTLaurent] = {}

    def conj(x, i):
        y, _ = apply_simple(x, i, "left")
        z, _ = apply_simple(y, i, "right")
        return y, z

    def value(w: Permutation) -> QTLaurent:
        if w in memo:
            return memo[w]
        # search the length-preserving cyclic-shift class of w for an element
        # that is either minimal in its conjugacy class or shortens by s_i . s_i
        L = length(w)
        seen = {w}
        queue = deque([w])
        result = None
        while queue and result is None:
            x = queue.popleft()
            if x in memo:
                result = memo[x]
                break
            if L == class_minimal_length(cycle_type(x)):
                result = A[mu, cycle_type(x)]
                break
            for i in range(1, n):
                six, sixs = conj(x, i)
                if length(sixs) == L - 2:
                    # x = s_i y s_i with y = sixs and y s_i = six
                    result = Q * value(sixs) + (Q - 1) * value(six)
                    break
                if length(sixs) == L and sixs not in seen:
                    seen.add(sixs)
                    queue.append(sixs)
        if result is None:
            raise InternalMismatch(f"no reduction path from {w.label()}")
        for x in seen:
            memo[x] = result
        return result

    return {w: value(w) for w in sorted(all_permutations(n), key=length)}


@lru_cache(maxsize=None)
def lusztig_table_w(n: int) -> LabeledMatrix:
    """A_{mu w} = sum_nu A_{mu nu} kappa_{nu w}, checked against the recursion."""
    A = lusztig_table(n)
    kappa = expansion_matrix(n)
    Aw = A @ kappa
    Aw = LabeledMatrix(Aw.row_labels, Aw.col_labels,
                       [[_laurent(x) for x in row] for row in Aw.entries], name="Aw")
    for mu in A.row_labels:
        rec = _lusztig_recursive(n, mu)
        for w in kappa.col_labels:
            if rec[w] != Aw[mu, w]:
                raise InternalMismatch(
                    f"A at ({mu}, {w.label()}): kappa product gives {Aw[mu, w]}, recursion gives {rec[w]}")
    return Aw


def lusztig_count_w(mu, w) -> QTLaurent:
    mu = _partition(mu)
    return lusztig_table_w(mu.n)[mu, Permutation(w)]


def springer_count(mu, pi) -> QTLaurent:
    """Card Y_{P_pi}(u_mu) = W_pi(q)^{-1} sum_{w in W_pi} Card Y_{BwB}(u_mu)."""
    mu = _partition(mu)
    pi = tuple(pi)
    n = mu.n
    Aw = lusztig_table_w(n)
    total = ZERO
    for w in young_subgroup(pi):
        total = total + Aw[mu, w]
    try:
        value = exact_div(total, poincare(pi))
    except NotDivisible:
        raise NotDivisible(f"sum over W_{pi} for {mu} is not divisible by W_pi(q)") from None
    b = b_matrix(n)[mu, _partition(pi)]
    expected = _laurent(as_fraction(b).substitute(ZERO, Q))
    if expected != value:
        raise InternalMismatch(f"springer count at ({mu}, {pi}) is {value}, but b(0,q) is {expected}")
    return value


@lru_cache(maxsize=None)
def springer_table(n: int) -> LabeledMatrix:
    parts = partitions_of(n)
    return LabeledMatrix(parts, parts, [[springer_count(mu, pi) for pi in parts] for mu in parts],
                         name="springer")


@lru_cache(maxsize=None)
def affine_table(n: int) -> LabeledMatrix:
    """q^n(mu) a_{mu nu}(t, 1/q) q^(n - l(nu))."""
    parts = partitions_of(n)
    a = a_matrix(n)
    rows = [[_laurent(as_fraction(a[mu, nu]).substitute(T, Q ** -1)) * Q ** (n_stat(mu) + n - len(nu))
             for nu in parts] for mu in parts]
    return LabeledMatrix(parts, parts, rows, name="affine")


def affine_count(mu, nu) -> QTLaurent:
    mu = _partition(mu)
    return affine_table(mu.n)[mu, _partition(nu)]


@dataclass
class AtobReport:
    n: int
    product: LabeledMatrix
    expected: LabeledMatrix
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        if self.ok:
            return [f"n={self.n}: all {self.product.shape[0] * self.product.shape[1]} cells agree"]
        return [f"n={self.n}: cell ({mu}, {pi}) product {x} != b(t,q) {y}"
                for mu, pi, x, y in self.failures]


def verify_atob(n: int) -> AtobReport:
    """A'(t, 1/q) M kappa C D against b(t, q), as exact fractions."""
    parts = partitions_of(n)
    a = a_matrix(n)
    Aprime = LabeledMatrix(parts, parts,
                           [[as_fraction(a[mu, nu]).substitute(T, Q ** -1) * Q ** n_stat(mu)
                             for nu in parts] for mu in parts], name="A'")
    M = LabeledMatrix.diagonal(parts, [Q ** (n - len(nu)) for nu in parts])
    D = LabeledMatrix.diagonal(parts, [QTFraction(1, pi_factorial(pi)) for pi in parts])
    product = Aprime @ M @ expansion_matrix(n) @ contraction_matrix(n) @ D
    b = b_matrix(n)
    expected = LabeledMatrix(parts, parts, [[b[mu, pi].swap_qt() for pi in parts] for mu in parts])
    return AtobReport(n, product, expected, product.mismatches(expected))


def all_nonnegative(table: LabeledMatrix) -> bool:
    """Every entry a polynomial with nonnegative integer coefficients."""
    return all(_laurent(x).has_nonnegative_integer_coefficients() and _laurent(x).is_polynomial()
               for _, x in table.items())
