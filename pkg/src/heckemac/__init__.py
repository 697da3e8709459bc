"""Expansion-contraction between integral-form and modified Macdonald polynomials.

Exact symbolic engine: Iwahori-Hecke algebra of S_n with generic q, the
Geck-Rouquier central basis, Macdonald transition matrices, point-count
polynomials for Lusztig varieties and parabolic Springer fibers, and a
brute-force finite-field oracle that checks them.
"""

from .exactring import (
    ONE,
    ZERO,
    Q,
    QTFraction,
    QTLaurent,
    T,
    parse_fraction,
    parse_laurent,
)
from .kernels import BACKEND
from .partitions import Partition, partitions_of
from .symgroup import Permutation

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ONE",
    "Partition",
    "Permutation",
    "Q",
    "QTFraction",
    "QTLaurent",
    "T",
    "ZERO",
    "parse_fraction",
    "parse_laurent",
    "partitions_of",
]
