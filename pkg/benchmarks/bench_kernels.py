"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads: multiplying two dense bivariate Laurent polynomials (144 by 90
terms, integer or rational coefficients), and
locating the Bruhat cell of y^{-1} u y for every flag y of GL_3(F_3) and
every unipotent class u.
"""

import argparse
import itertools
import timeit
from fractions import Fraction

from heckemac import _pykernels
from heckemac.oracle import _flags, jordan_unipotent
from heckemac.partitions import partitions_of

try:
    from heckemac import _ckernels
except ImportError:
    _ckernels = None


def poly_workload(k, rational=False):
    a = {(i, j): Fraction(i + 2 * j + 1, j + 1) if rational else i + 2 * j + 1
         for i in range(12) for j in range(12)}
    b = {(i - 3, j): i - j for i in range(10) for j in range(10) if i != j}
    return lambda: k.poly_mul_terms(a, b)


def bruhat_workload(k, n=3, p=3):
    flags = _flags(n, p)
    units = [jordan_unipotent(mu, p).entries for mu in partitions_of(n)]

    def run():
        for u, y in itertools.product(units, flags):
            x = k.matmul_mod(k.matmul_mod(k.inverse_mod(y, n, p), u, n, p), y, n, p)
            k.bruhat_word(x, n, p)
    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    if _ckernels is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'workload':<28}{'backend':<10}{'best of ' + str(args.repeat):>14}")
    for name, make in (("poly_mul integer", poly_workload),
                       ("poly_mul rational", lambda k: poly_workload(k, rational=True)),
                       ("bruhat cells GL_3(F_3)", bruhat_workload)):
        best = {}
        for label, k in backends:
            fn = make(k)
            number = 20
            best[label] = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            print(f"{name:<28}{label:<10}{best[label] * 1e3:>11.3f} ms")
        if "cython" in best:
            print(f"{'':<28}{'speedup':<10}{best['python'] / best['cython']:>11.2f} x")


if __name__ == "__main__":
    main()
