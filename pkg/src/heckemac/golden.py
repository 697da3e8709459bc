"""Worked tables for n = 2 and n = 3, stored as text.

Every entry is a string in the polynomial grammar of :mod:`heckemac.exactring`.
Row and column labels are partitions ("2,1"), compositions ("1,2") or
permutation words ("s1s2", identity "1"); the label order is the one of
the reference layout, which is not always the canonical order of this
package, so comparisons go through the labels.

Conventions worth knowing:

* ``springer_unnormalized`` holds W_pi(q) * Card Y_{P_pi}(u_mu), i.e. the sum
  over W_pi of the Lusztig counts before dividing by W_pi(q).
* ``parabolic_sum`` holds sum_{w in W_pi} T_w without the 1/W_pi(q) factor.
* For n = 3 the idempotents z_(3) and z_(1^3) are stored under the labels
  given by their defining formula; the reference layout has the two labels
  exchanged.
"""

from __future__ import annotations

TABLES: dict[int, dict[str, tuple]] = {
    2: {
        "kappa": (["2", "1,1"], ["s1", "1"], [
            ["1", "0"],
            ["0", "1"],
        ]),
        "C": (["s1", "1"], ["2", "1,1"], [
            ["1", "0"],
            ["1", "1"],
        ]),
        "chiH": (["2", "1,1"], ["2", "1,1"], [
            ["q", "1"],
            ["-1", "1"],
        ]),
        "chiG": (["2", "1,1"], ["2", "1,1"], [
            ["1", "1"],
            ["0", "q"],
        ]),
        "A": (["2", "1,1"], ["2", "1,1"], [
            ["q", "1"],
            ["0", "q + 1"],
        ]),
        "K": (["2", "1,1"], ["2", "1,1"], [
            ["1", "t"],
            ["q", "1"],
        ]),
        "L": (["2", "1,1"], ["2", "1,1"], [
            ["1", "1"],
            ["-t", "1"],
        ]),
        "a": (["2", "1,1"], ["2", "1,1"], [
            ["1 - q*t", "1 + q"],
            ["0", "1 + t"],
        ]),
        "kostka": (["2", "1,1"], ["2", "1,1"], [
            ["1", "1"],
            ["0", "1"],
        ]),
        # Schur coefficients of the modified Macdonald functions: rows lambda, columns mu
        "Htilde_schur": (["2", "1,1"], ["2", "1,1"], [
            ["1", "1"],
            ["q", "t"],
        ]),
        "b": (["2", "1,1"], ["2", "1,1"], [
            ["1", "1 + q"],
            ["1", "1 + t"],
        ]),
        "MkCD": (["2", "1,1"], ["2", "1,1"], [
            ["q/(1 + q)", "0"],
            ["1/(1 + q)", "1"],
        ]),
        "FL": (["2", "1,1"], ["2", "1,1"], [
            ["1 + q^-1", "0"],
            ["-q^-1", "1"],
        ]),
        "affine": (["2", "1,1"], ["2", "1,1"], [
            ["q*(1 - t*q^-1)", "1 + t"],
            ["0", "1 + q"],
        ]),
    },
    3: {
        "kappa": (["3", "2,1", "1,1,1"], ["s1s2", "s2s1", "s1s2s1", "s2", "s1", "1"], [
            ["1", "1", "q - 1", "0", "0", "0"],
            ["0", "0", "q", "1", "1", "0"],
            ["0", "0", "0", "0", "0", "1"],
        ]),
        "C": (["s1s2", "s2s1", "s1s2s1", "s2", "s1", "1"], ["3", "2,1", "1,1,1"], [
            ["1", "0", "0"],
            ["1", "0", "0"],
            ["1", "0", "0"],
            ["1", "0", "0"],
            ["1", "1", "0"],
            ["1", "1", "1"],
        ]),
        "chiH": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["q^2", "q", "1"],
            ["-q", "q - 1", "2"],
            ["1", "-1", "1"],
        ]),
        "chiG": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["1", "1", "1"],
            ["0", "q", "q^2 + q"],
            ["0", "0", "q^3"],
        ]),
        "A": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["q^2", "q", "1"],
            ["0", "q^2", "2*q + 1"],
            ["0", "0", "(1 + q + q^2)*(1 + q)"],
        ]),
        "Aw": (["3", "2,1", "1,1,1"], ["s1s2", "s2s1", "s1s2s1", "s2", "s1", "1"], [
            ["q^2", "q^2", "q^3", "q", "q", "1"],
            ["0", "0", "q^3", "q^2", "q^2", "2*q + 1"],
            ["0", "0", "0", "0", "0", "(1 + q + q^2)*(1 + q)"],
        ]),
        "springer_unnormalized": (["3", "2,1", "1,1,1"], ["1,1,1", "2,1", "1,2", "3"], [
            ["1", "1 + q", "1 + q", "(1 + q + q^2)*(1 + q)"],
            ["2*q + 1", "q^2 + 2*q + 1", "q^2 + 2*q + 1", "(1 + q + q^2)*(1 + q)"],
            ["(1 + q + q^2)*(1 + q)", "(1 + q + q^2)*(1 + q)", "(1 + q + q^2)*(1 + q)",
             "(1 + q + q^2)*(1 + q)"],
        ]),
        "K": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["1", "t", "t^3"],
            ["q + q^2", "1 + q*t", "t + t^2"],
            ["q^3", "q", "1"],
        ]),
        "L": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["1", "1", "1"],
            ["-t", "1 - t", "2"],
            ["(-t)^2", "-t", "1"],
        ]),
        "a": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["(1 - q*t)*(1 - q^2*t)", "(1 - q*t)*(1 + q + q^2)", "(1 + q)*(1 + q + q^2)"],
            ["0", "1 - q*t^2", "2 + t + q + 2*q*t"],
            ["0", "0", "(1 + t)*(1 + t + t^2)"],
        ]),
        "kostka": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["1", "1", "1"],
            ["0", "1", "2"],
            ["0", "0", "1"],
        ]),
        "Htilde_schur": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["1", "1", "1"],
            ["q^2 + q", "q + t", "t^2 + t"],
            ["q^3", "q*t", "t^3"],
        ]),
        "b": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["1", "1 + q + q^2", "1 + 2*(q^2 + q) + q^3"],
            ["1", "1 + q + t", "1 + 2*(q + t) + q*t"],
            ["1", "1 + t + t^2", "1 + 2*(t + t^2) + t^3"],
        ]),
        "MkCD": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["q^2/(1 + q + q^2)", "0", "0"],
            ["(q^2 + 2*q)/((1 + q + q^2)*(1 + q))", "q/(1 + q)", "0"],
            ["1/((1 + q + q^2)*(1 + q))", "1/(1 + q)", "1"],
        ]),
        "FL": (["3", "2,1", "1,1,1"], ["3", "2,1", "1,1,1"], [
            ["q^-2*(1 + q + q^2)", "0", "0"],
            ["-q^-2*(q + 2)", "q^-1*(q + 1)", "0"],
            ["q^-2", "-q^-1", "1"],
        ]),
    },
}

# Hecke elements as {permutation word: coefficient}
HECKE: dict[int, dict[str, dict[str, dict[str, str]]]] = {
    2: {
        "geck_rouquier": {
            "2": {"s1": "q^-1", "1": "0"},
            "1,1": {"s1": "0", "1": "1"},
        },
        "central_idempotent": {
            "2": {"s1": "1/(1 + q)", "1": "1/(1 + q)"},
            "1,1": {"s1": "-1/(1 + q)", "1": "q/(1 + q)"},
        },
        "central_A": {
            "2": {"s1": "1", "1": "1"},
            "1,1": {"1": "1 + q"},
        },
        "parabolic_sum": {
            "2": {"s1": "1", "1": "1"},
            "1,1": {"1": "1"},
        },
    },
    3: {
        "geck_rouquier": {
            "3": {"s1s2": "q^-2", "s2s1": "q^-2", "s1s2s1": "(q - 1)*q^-3"},
            "2,1": {"s1s2s1": "q*q^-3", "s1": "q^-1", "s2": "q^-1"},
            "1,1,1": {"1": "1"},
        },
        "central_A": {
            "3": {w: "1" for w in ("s1s2", "s2s1", "s1s2s1", "s1", "s2", "1")},
            "2,1": {"s1s2s1": "1", "s1": "q", "s2": "q", "1": "1 + 2*q"},
            "1,1,1": {"1": "(1 + q + q^2)*(1 + q)"},
        },
        "parabolic_sum": {
            "3": {w: "1" for w in ("s1s2", "s2s1", "s1s2s1", "s1", "s2", "1")},
            "2,1": {"s1": "1", "1": "1"},
            "1,1,1": {"1": "1"},
        },
    },
}

# Central elements as coefficient vectors over the Geck-Rouquier basis,
# indexed by the classes in canonical order.
IN_KAPPA_BASIS: dict[int, dict[str, dict[str, list[str]]]] = {
    2: {
        "central_idempotent": {
            "2": ["q/(1 + q)", "1/(1 + q)"],
            "1,1": ["-q/(1 + q)", "q/(1 + q)"],
        },
        "central_A": {
            "2": ["q", "1"],
            "1,1": ["0", "1 + q"],
        },
    },
    3: {
        "central_idempotent": {
            "3": ["q^2/((1 + q + q^2)*(1 + q))", "q/((1 + q + q^2)*(1 + q))", "1/((1 + q + q^2)*(1 + q))"],
            "2,1": ["q*(1 + q)*(-q)/((1 + q + q^2)*(1 + q))",
                    "q*(1 + q)*(q - 1)/((1 + q + q^2)*(1 + q))",
                    "q*(1 + q)*2/((1 + q + q^2)*(1 + q))"],
            "1,1,1": ["q^3/((1 + q + q^2)*(1 + q))", "-q^3/((1 + q + q^2)*(1 + q))",
                      "q^3/((1 + q + q^2)*(1 + q))"],
        },
        "central_A": {
            "3": ["q^2", "q", "1"],
            "2,1": ["0", "q^2", "1 + 2*q"],
            "1,1,1": ["0", "0", "(1 + q + q^2)*(1 + q)"],
        },
    },
}
