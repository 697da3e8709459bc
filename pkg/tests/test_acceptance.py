"""Acceptance criteria 1 to 9, all checked exactly.

Each test prints one PASS/FAIL line (collected again in the terminal
summary) and fails when any of its sub-checks fails.
"""

import time

from heckemac import golden
from heckemac.counts import (
    affine_table,
    lusztig_table,
    lusztig_table_w,
    springer_count,
    verify_atob,
)
from heckemac.exactring import Q, as_fraction
from heckemac.hecke import central_A, expansion_contraction, geck_rouquier, is_central
from heckemac.oracle import compare_class_intersection, oracle_lusztig, oracle_springer
from heckemac.partitions import compositions_of, conjugate, partitions_of
from heckemac.suites import (
    fl_matrix,
    golden_hecke_mismatches,
    golden_table_mismatches,
    kappa_at_q1_is_class_indicator,
    suite_idempotent,
    suite_triangularity,
)
from heckemac.symfunc import R_matrix, b_matrix, macpl_side, modified_H
from heckemac.symgroup import all_permutations


def verdict(report, number, title, failures, started, budget):
    elapsed = time.perf_counter() - started
    if elapsed > budget:
        failures = failures + [f"took {elapsed:.1f}s, budget {budget}s"]
    status = "PASS" if not failures else "FAIL"
    detail = f"{elapsed:.2f}s" if not failures else "; ".join(failures[:4])
    report(f"{status}  criterion {number}: {title}  ({detail})")
    assert not failures, failures


def test_criterion_1_golden_tables(report):
    t0 = time.perf_counter()
    bad = []
    for n in (2, 3):
        for name in golden.TABLES[n]:
            if name == "affine":
                continue
            bad += [f"n={n} {name} {m}" for m in golden_table_mismatches(n, name)]
        bad += [f"n={n} {m}" for m in golden_hecke_mismatches(n)]
    verdict(report, 1, "reference tables for n=2,3 reproduced", bad, t0, 5)


def test_criterion_2_atob(report):
    t0 = time.perf_counter()
    bad = []
    for n in (2, 3, 4, 5):
        rep = verify_atob(n)
        if not rep.ok:
            bad += rep.lines()
    verdict(report, 2, "A'(t,1/q) M kappa C D = b(t,q) for n=2..5", bad, t0, 120)


def test_criterion_3_glinv(report):
    t0 = time.perf_counter()
    bad = [f"n={n}" for n in range(1, 6)
           if not (expansion_contraction(n) @ fl_matrix(n)).is_identity()]
    verdict(report, 3, "(M kappa C D)(F L)|t=1/q = I for n<=5", bad, t0, 60)


def test_criterion_4_twisted_plethysm(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 5):
        _, twisted = R_matrix(n)
        bad += [f"n={n} [{r}, {c}]" for r, c, _, _ in twisted.mismatches(expansion_contraction(n))]
    verdict(report, 4, "diag((1-1/q)^l) R = M kappa C D for n<=4", bad, t0, 30)


def test_criterion_5_plethystic_identity(report):
    t0 = time.perf_counter()
    bad = [f"mu={mu}" for n in range(1, 5) for mu in partitions_of(n) if macpl_side(mu) != modified_H(mu)]
    verdict(report, 5, "t^n(mu) J_mu[X/(1-1/t); q, 1/t] = H~_mu for n<=4", bad, t0, 30)


def test_criterion_6_conjugation_symmetry(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 6):
        b = b_matrix(n)
        for mu in b.row_labels:
            for pi in b.col_labels:
                if b[mu, pi] != as_fraction(b[conjugate(mu), pi]).swap_qt():
                    bad.append(f"n={n} [{mu}, {pi}]")
    verdict(report, 6, "b_(mu,pi)(q,t) = b_(mu',pi)(t,q) for n<=5", bad, t0, 60)


def test_criterion_7_oracle(report):
    t0 = time.perf_counter()
    bad = []
    for n, p in ((2, 2), (2, 3), (2, 5), (3, 2), (3, 3)):
        Aw = lusztig_table_w(n)
        for mu in partitions_of(n):
            for w in all_permutations(n):
                got = oracle_lusztig(mu, w, p, inverse_element=True)
                if got != Aw[mu, w].evaluate(p):
                    bad.append(f"Lusztig n={n} p={p} {mu} {w.label()}: {got}")
            for pi in compositions_of(n):
                got = oracle_springer(mu, pi, p, inverse_element=True)
                if got != springer_count(mu, pi).evaluate(p):
                    bad.append(f"Springer n={n} p={p} {mu} {pi}: {got}")
    for n, p in ((2, 2), (2, 3), (3, 2)):
        bad += [f"class intersection n={n} p={p} {r.mu} {r.w_or_pi}"
                for r in compare_class_intersection(n, p) if not r.match]
    verdict(report, 7, "brute-force counts over F_p equal the polynomials", bad, t0, 120)


def test_criterion_8_properties(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 6):
        if not kappa_at_q1_is_class_indicator(n):
            bad.append(f"kappa(q=1) n={n}")
        for nu in partitions_of(n):
            if not is_central(geck_rouquier(nu)) or not is_central(central_A(nu)):
                bad.append(f"centrality n={n} {nu}")
        if n <= 4:
            bad += [f"{c.name}" for c in suite_idempotent(n) if not c.ok]
        bad += [f"{c.name}, first {c.detail.split(';')[0]}" for c in suite_triangularity(n) if not c.ok]
    verdict(report, 8, "property suites for n<=5", bad, t0, 120)


def test_criterion_9_affine(report):
    t0 = time.perf_counter()
    bad = [f"n=2 {m}" for m in golden_table_mismatches(2, "affine")]
    for n in range(1, 5):
        A, aff = lusztig_table(n), affine_table(n)
        bad += [f"n={n} [{mu}, {nu}]" for (mu, nu), x in aff.items() if x.substitute(Q, 0) != A[mu, nu]]
    verdict(report, 9, "affine counts: n=2 table and t=0 gives the Lusztig table", bad, t0, 30)
