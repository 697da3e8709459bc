"""Named verification suites.

Each suite returns a list of :class:`Check` results; nothing here raises on
a failed identity, so callers can print a full report.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import golden
from .counts import (
    affine_table,
    chi_G,
    chi_H,
    lusztig_table,
    lusztig_table_w,
    springer_count,
    verify_atob,
)
from .exactring import (
    ONE,
    ZERO,
    Q,
    QTFraction,
    T,
    as_fraction,
    parse_fraction,
    q_factorial,
)
from .hecke import (
    HeckeElement,
    central_A,
    central_idempotent,
    check_expansion_rules,
    contraction_matrix,
    expansion_contraction,
    expansion_matrix,
    geck_rouquier,
    is_central,
    parabolic_idempotent,
    parabolic_sum,
)
from .matrices import LabeledMatrix
from .partitions import (
    conjugate,
    dominates,
    parse_composition,
    parse_partition,
    partitions_of,
)
from .symfunc import (
    F_matrix,
    K_matrix,
    L_matrix,
    R_matrix,
    a_matrix,
    b_matrix,
    big_schur,
    convert,
    kostka_matrix,
    m,
    macpl_side,
    modified_H,
    plethysm_scale,
    s,
)
from .symgroup import cycle_type, parse_permutation, poincare

SUITES = ("golden", "central", "idempotent", "atob", "plethysm", "symmetry", "triangularity")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _same(a, b) -> bool:
    return as_fraction(a) == as_fraction(b)


# ---------------------------------------------------------------------------
# golden tables


def fl_matrix(n: int) -> LabeledMatrix:
    """F . L with t = 1/q."""
    L = L_matrix(n).map(lambda x: as_fraction(x).substitute(Q, Q ** -1))
    out = F_matrix(n) @ L
    out.name = "FL"
    return out


def springer_unnormalized(mu, pi):
    return springer_count(mu, pi) * poincare(pi)


def htilde_schur(n: int) -> LabeledMatrix:
    parts = partitions_of(n)
    return LabeledMatrix.from_function(parts, parts, lambda lam, mu: modified_H(mu).coefficient(lam),
                                       name="Htilde_schur")


def _computed_table(n: int, name: str):
    """(value function taking parsed labels) for every stored golden table."""
    simple = {
        "kappa": expansion_matrix,
        "C": contraction_matrix,
        "chiH": chi_H,
        "chiG": chi_G,
        "A": lusztig_table,
        "Aw": lusztig_table_w,
        "K": K_matrix,
        "L": L_matrix,
        "a": a_matrix,
        "kostka": kostka_matrix,
        "Htilde_schur": htilde_schur,
        "b": b_matrix,
        "MkCD": expansion_contraction,
        "FL": fl_matrix,
        "affine": affine_table,
    }
    if name == "springer_unnormalized":
        return springer_unnormalized
    M = simple[name](n)
    return lambda r, c: M[r, c]


def _parse_label(text: str, n: int, kind: str):
    if kind == "perm":
        return parse_permutation(text, n)
    if kind == "composition":
        return parse_composition(text)
    return parse_partition(text)


def _label_kind(name: str, axis: int) -> str:
    if name == "C":
        return "perm" if axis == 0 else "partition"
    if name in ("kappa", "Aw") and axis == 1:
        return "perm"
    if name == "springer_unnormalized" and axis == 1:
        return "composition"
    return "partition"


def golden_table_mismatches(n: int, name: str) -> list[str]:
    rows, cols, grid = golden.TABLES[n][name]
    value = _computed_table(n, name)
    bad = []
    for r_text, row in zip(rows, grid):
        r = _parse_label(r_text, n, _label_kind(name, 0))
        for c_text, entry in zip(cols, row):
            c = _parse_label(c_text, n, _label_kind(name, 1))
            got = value(r, c)
            want = parse_fraction(entry)
            if not _same(got, want):
                bad.append(f"[{r_text}, {c_text}] computed {got}, table {entry}")
    return bad


def _hecke_from_words(n: int, coeffs: dict) -> HeckeElement:
    return HeckeElement(n, {parse_permutation(w, n): parse_fraction(c) for w, c in coeffs.items()})


def _kappa_combination(n: int, vec) -> HeckeElement:
    out = HeckeElement.zero(n)
    for nu, c in zip(partitions_of(n), vec):
        out = out + geck_rouquier(nu).scale(parse_fraction(c))
    return out


def golden_hecke_mismatches(n: int) -> list[str]:
    makers = {
        "geck_rouquier": geck_rouquier,
        "central_idempotent": central_idempotent,
        "central_A": central_A,
        "parabolic_sum": parabolic_sum,
    }
    bad = []
    for what, entries in golden.HECKE.get(n, {}).items():
        for label, coeffs in entries.items():
            got = makers[what](parse_partition(label) if what != "parabolic_sum" else parse_composition(label))
            want = _hecke_from_words(n, coeffs)
            if got != want:
                bad.append(f"{what}[{label}]: computed {got}")
    for what, entries in golden.IN_KAPPA_BASIS.get(n, {}).items():
        for label, vec in entries.items():
            got = makers[what](parse_partition(label))
            if got != _kappa_combination(n, vec):
                bad.append(f"{what}[{label}] in the kappa basis: computed {got}")
    return bad


def suite_golden(n: int) -> list[Check]:
    if n not in golden.TABLES:
        return [Check(f"golden n={n}", True, "no stored tables for this n")]
    out = []
    for name in golden.TABLES[n]:
        bad = golden_table_mismatches(n, name)
        out.append(Check(f"golden table {name} n={n}", not bad, "; ".join(bad[:3])))
    bad = golden_hecke_mismatches(n)
    out.append(Check(f"golden Hecke elements n={n}", not bad, "; ".join(bad[:3])))
    return out


# ---------------------------------------------------------------------------
# centrality and the expansion matrix


def kappa_at_q1_is_class_indicator(n: int) -> bool:
    kappa = expansion_matrix(n)
    for (nu, w), x in kappa.items():
        want = 1 if cycle_type(w) == nu else 0
        if as_fraction(x).evaluate(1) != want:
            return False
    return True


def suite_central(n: int) -> list[Check]:
    out = []
    bad = check_expansion_rules(expansion_matrix(n))
    out.append(Check(f"kappa satisfies rules (a)(b)(c) everywhere n={n}", not bad, "; ".join(bad[:3])))
    out.append(Check(f"kappa at q=1 is the class indicator n={n}", kappa_at_q1_is_class_indicator(n)))
    kappa = expansion_matrix(n)
    sym = all(_same(kappa[nu, w], kappa[nu, w.inverse()]) for nu, w in
              ((nu, w) for nu in kappa.row_labels for w in kappa.col_labels))
    out.append(Check(f"kappa_(nu,w) = kappa_(nu,w^-1) n={n}", sym))
    parts = partitions_of(n)
    bad = [str(nu) for nu in parts if not is_central(geck_rouquier(nu))]
    out.append(Check(f"Geck-Rouquier elements are central n={n}", not bad, ", ".join(bad)))
    bad = [str(mu) for mu in parts if not is_central(central_A(mu))]
    out.append(Check(f"A_mu elements are central n={n}", not bad, ", ".join(bad)))
    return out


# ---------------------------------------------------------------------------
# idempotents


def suite_idempotent(n: int) -> list[Check]:
    parts = partitions_of(n)
    z = {lam: central_idempotent(lam) for lam in parts}
    out = []
    total = HeckeElement.zero(n)
    for lam in parts:
        total = total + z[lam]
    out.append(Check(f"sum of z_lambda is T_1 n={n}", total == HeckeElement.one(n)))
    bad = []
    for lam in parts:
        for mu in parts:
            prod = z[lam] * z[mu]
            want = z[lam] if lam == mu else HeckeElement.zero(n)
            if prod != want:
                bad.append(f"z{lam} z{mu}")
    out.append(Check(f"z_lambda z_mu = delta z_lambda n={n}", not bad, ", ".join(bad[:3])))
    bad = []
    for pi in parts:
        e = parabolic_idempotent(pi)
        if e * e != e:
            bad.append(str(pi))
    out.append(Check(f"parabolic projectors are idempotent n={n}", not bad, ", ".join(bad)))
    # A_mu = |G/B| sum_lam chi_G(u_mu)/chi_G(1) z_lam
    cg = chi_G(n)
    one = parts[-1]
    flag_count = q_factorial(n)
    bad = []
    for mu in parts:
        rhs = HeckeElement.zero(n)
        for lam in parts:
            rhs = rhs + z[lam].scale(QTFraction(cg[lam, mu] * flag_count, cg[lam, one]))
        if rhs != central_A(mu):
            bad.append(str(mu))
    out.append(Check(f"A_mu = |G/B| sum chi(u_mu)/chi(1) z_lambda n={n}", not bad, ", ".join(bad)))
    return out


# ---------------------------------------------------------------------------
# expansion-contraction identities


def suite_atob(n: int) -> list[Check]:
    rep = verify_atob(n)
    out = [Check(f"A'(t,1/q) M kappa C D = b(t,q) n={n}", rep.ok, "; ".join(rep.lines()))]
    prod = expansion_contraction(n) @ fl_matrix(n)
    out.append(Check(f"(M kappa C D)(F L)|t=1/q is the identity n={n}", prod.is_identity()))
    _, twisted = R_matrix(n)
    bad = twisted.mismatches(expansion_contraction(n))
    out.append(Check(f"diag((1-1/q)^l) R = M kappa C D n={n}", not bad,
                     "; ".join(f"[{r}, {c}]" for r, c, _, _ in bad[:3])))
    return out


def suite_plethysm(n: int) -> list[Check]:
    parts = partitions_of(n)
    bad = [str(mu) for mu in parts if macpl_side(mu) != modified_H(mu)]
    out = [Check(f"t^n(mu) J_mu[X/(1-1/t); q, 1/t] = H~_mu n={n}", not bad, ", ".join(bad))]
    bad = []
    for lam in parts:
        for f in (m(lam), s(lam)):
            back = plethysm_scale(plethysm_scale(f, ONE - T), QTFraction(1, ONE - T))
            if back != f:
                bad.append(f"{f.basis}{lam}")
    out.append(Check(f"scaling by (1-t) then 1/(1-t) is the identity n={n}", not bad, ", ".join(bad)))
    bad = []
    for lam in parts:
        S0 = big_schur(lam).map_coefficients(lambda c: as_fraction(c).substitute(Q, ZERO))
        if S0 != convert(s(lam), "monomial"):
            bad.append(str(lam))
    out.append(Check(f"S_lambda at t=0 is s_lambda n={n}", not bad, ", ".join(bad)))
    return out


def suite_symmetry(n: int) -> list[Check]:
    b = b_matrix(n)
    bad = []
    for mu in b.row_labels:
        for pi in b.col_labels:
            if not _same(b[mu, pi], as_fraction(b[conjugate(mu), pi]).swap_qt()):
                bad.append(f"[{mu}, {pi}]")
    return [Check(f"b_(mu,pi)(q,t) = b_(mu',pi)(t,q) n={n}", not bad, ", ".join(bad[:3]))]


def suite_triangularity(n: int) -> list[Check]:
    parts = partitions_of(n)
    a = a_matrix(n)
    bad = []
    for mu in parts:
        if as_fraction(a[mu, mu]).is_zero():
            bad.append(f"diagonal {mu}")
        for nu in parts:
            if not as_fraction(a[mu, nu]).is_zero() and not dominates(mu, nu):
                bad.append(f"[{mu}, {nu}]")
    out = [Check(f"a is dominance triangular n={n}", not bad, ", ".join(bad[:3]))]
    kos = kostka_matrix(n)
    ok = all((x == 0 or dominates(lam, pi)) and (lam != pi or x == 1) for (lam, pi), x in kos.items())
    out.append(Check(f"Kostka matrix is unitriangular n={n}", ok))
    out.append(Check(f"F times Kostka is the identity n={n}", (F_matrix(n) @ kos).is_identity()))
    Aw = lusztig_table_w(n)
    fact = q_factorial(n)
    bad = []
    for mu in Aw.row_labels:
        total = ZERO
        for x in Aw.row(mu):
            total = total + x
        if total != fact:
            bad.append(str(mu))
    out.append(Check(f"rows of A_(mu,w) sum to [n]! n={n}", not bad, ", ".join(bad)))
    springer = LabeledMatrix.from_function(parts, parts, springer_count)
    tables = {"A_(mu,nu)": lusztig_table(n), "A_(mu,w)": Aw, "Springer": springer}
    for k, M in tables.items():
        bad = [f"[{r.label()} | {c.label()}] = {x}" for (r, c), x in M.items()
               if not (x.is_polynomial() and x.has_nonnegative_integer_coefficients())]
        out.append(Check(f"{k} counts have nonnegative integer coefficients n={n}", not bad,
                         "; ".join(bad[:3])))
    return out


RUNNERS = {
    "golden": suite_golden,
    "central": suite_central,
    "idempotent": suite_idempotent,
    "atob": suite_atob,
    "plethysm": suite_plethysm,
    "symmetry": suite_symmetry,
    "triangularity": suite_triangularity,
}


def run_suite(name: str, n: int) -> list[Check]:
    names = SUITES if name == "all" else (name,)
    out = []
    for suite in names:
        out.extend(RUNNERS[suite](n))
    return out
