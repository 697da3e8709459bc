"""Command-line front end.

    heckemac tables --n 3 --matrix kappa --format json
    heckemac verify --n 4 --suite atob
    heckemac oracle --n 3 --p 2 --check lusztig

Exit status: 0 success, 1 a verification failed, 2 usage error, 3 the
requested size is out of range.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass

from .errors import HeckeMacError, ScaleExceeded
from .exactring import QTFraction, QTLaurent, format_scalar, parse_fraction
from .matrices import LabeledMatrix
from .partitions import Partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3

MATRICES = ("kappa", "C", "A", "Aw", "a", "b", "K", "L", "F", "R", "chiH", "chiG", "MkCD", "springer")
FORMATS = ("json", "csv", "latex")
CHECKS = ("lusztig", "springer", "class-intersection", "all")


def _label(x) -> str:
    if isinstance(x, Partition):
        return x.label()
    if hasattr(x, "label"):
        return x.label()
    if isinstance(x, tuple):
        return ",".join(str(v) for v in x)
    return str(x)


def _entry_text(x) -> str:
    if isinstance(x, (QTLaurent, QTFraction)):
        return str(x)
    return format_scalar(x)


@dataclass
class ExportEnvelope:
    n: int
    matrix_name: str
    row_labels: list[str]
    col_labels: list[str]
    entries: list[list[str]]

    @classmethod
    def from_matrix(cls, n: int, name: str, M: LabeledMatrix) -> "ExportEnvelope":
        return cls(n, name, [_label(r) for r in M.row_labels], [_label(c) for c in M.col_labels],
                   [[_entry_text(x) for x in row] for row in M.entries])

    def to_json(self) -> str:
        body = {
            "n": self.n,
            "matrix_name": self.matrix_name,
            "row_labels": self.row_labels,
            "col_labels": self.col_labels,
            "entries": self.entries,
        }
        return json.dumps(body, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExportEnvelope":
        d = json.loads(text)
        env = cls(d["n"], d["matrix_name"], d["row_labels"], d["col_labels"], d["entries"])
        if len(env.entries) != len(env.row_labels) or any(len(r) != len(env.col_labels) for r in env.entries):
            raise ValueError("entry grid does not match the labels")
        return env

    def values(self) -> list[list[QTFraction]]:
        return [[parse_fraction(x) for x in row] for row in self.entries]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([self.matrix_name] + self.col_labels)
        for r, row in zip(self.row_labels, self.entries):
            w.writerow([r] + row)
        return buf.getvalue()

    def to_latex(self) -> str:
        cols = "c|" + "c" * len(self.col_labels)
        lines = [f"\\begin{{array}}{{{cols}}}",
                 " & ".join([f"\\mathrm{{{self.matrix_name}}}"] + [_latex_label(c) for c in self.col_labels])
                 + " \\\\", "\\hline"]
        for r, row in zip(self.row_labels, self.entries):
            lines.append(" & ".join([_latex_label(r)] + [latex_entry(x) for x in row]) + " \\\\")
        lines.append("\\end{array}")
        return "\n".join(lines) + "\n"


def _latex_label(text: str) -> str:
    if re.search(r"s\d", text):
        return re.sub(r"s(\d+)", r"s_{\1}", text)
    parts = text.split(",")
    return f"({''.join(parts)})" if all(len(x) == 1 for x in parts) else f"({text})"


def latex_entry(text: str) -> str:
    """Polynomial text to LaTeX: drop '*', brace exponents, fractions as frac."""
    def poly(s: str) -> str:
        s = re.sub(r"\^(-?\d+)", r"^{\1}", s)
        return s.replace("*", "")

    m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
    if m:
        return f"\\frac{{{poly(m.group(1))}}}{{{poly(m.group(2))}}}"
    return poly(text)


# ---------------------------------------------------------------------------
# matrices by name


def build_matrix(n: int, name: str) -> LabeledMatrix:
    from . import counts, hecke, symfunc

    if n < 1:
        raise ScaleExceeded("n must be at least 1")
    builders = {
        "kappa": hecke.expansion_matrix,
        "C": hecke.contraction_matrix,
        "MkCD": hecke.expansion_contraction,
        "A": counts.lusztig_table,
        "Aw": counts.lusztig_table_w,
        "springer": counts.springer_table,
        "chiH": counts.chi_H,
        "chiG": counts.chi_G,
        "a": symfunc.a_matrix,
        "b": symfunc.b_matrix,
        "K": symfunc.K_matrix,
        "L": symfunc.L_matrix,
        "F": symfunc.F_matrix,
        "R": lambda k: symfunc.R_matrix(k)[0],
    }
    if name in ("kappa", "C", "MkCD"):
        hecke.check_rank(n)
    else:
        symfunc._check_degree(n)
    return builders[name](n)


def export(n: int, name: str, fmt: str) -> str:
    env = ExportEnvelope.from_matrix(n, name, build_matrix(n, name))
    if fmt == "json":
        return env.to_json()
    if fmt == "csv":
        return env.to_csv()
    return env.to_latex()


# ---------------------------------------------------------------------------
# commands


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_tables(args) -> int:
    _write(export(args.n, args.matrix, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suites import run_suite

    checks = run_suite(args.suite, args.n)
    lines = [c.line() for c in checks]
    failed = sum(1 for c in checks if not c.ok)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oracle(args) -> int:
    from . import oracle

    runners = {
        "lusztig": oracle.compare_lusztig,
        "springer": oracle.compare_springer,
        "class-intersection": oracle.compare_class_intersection,
    }
    names = ("lusztig", "springer", "class-intersection") if args.check == "all" else (args.check,)
    records = []
    for name in names:
        records.extend((name, r) for r in runners[name](args.n, args.p))
    failed = sum(1 for _, r in records if not r.match)
    if args.format == "json":
        text = json.dumps([r.as_dict() for _, r in records]) + "\n"
    else:
        lines = [f"{'ok  ' if r.match else 'BAD '} {name:<18} mu={r.mu:<8} {r.w_or_pi:<14} "
                 f"oracle={r.oracle_count} polynomial={r.polynomial_value}" for name, r in records]
        lines.append(f"{len(records) - failed}/{len(records)} cells match (n={args.n}, p={args.p})")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckemac", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="print one matrix in canonical label order")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--matrix", choices=MATRICES, required=True)
    t.add_argument("--format", choices=FORMATS, default="json")
    t.add_argument("--out")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run an identity suite and print PASS/FAIL lines")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--suite", choices=("all", "golden", "central", "idempotent", "atob", "plethysm",
                                       "symmetry", "triangularity"), default="all")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="compare brute-force counts over F_p with the polynomials")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--check", choices=CHECKS, default="all")
    o.add_argument("--format", choices=("text", "json"), default="text")
    o.add_argument("--out")
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ScaleExceeded as exc:
        print(f"heckemac: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except HeckeMacError as exc:
        print(f"heckemac: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
