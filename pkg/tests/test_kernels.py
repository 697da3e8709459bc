"""The compiled kernels and the pure-Python fallback must agree exactly."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckemac import _pykernels as py

ck = pytest.importorskip("heckemac._ckernels", reason="compiled extension not built")

coeff = st.one_of(st.integers(-9, 9).filter(bool), st.builds(Fraction, st.integers(1, 7), st.integers(2, 5)))
terms = st.dictionaries(st.tuples(st.integers(-4, 6), st.integers(-4, 6)), coeff, max_size=8)


def square(n, p):
    return st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n).map(tuple)


@settings(max_examples=100)
@given(terms, terms)
def test_poly_mul_terms(a, b):
    assert ck.poly_mul_terms(a, b) == py.poly_mul_terms(a, b)


@given(st.sampled_from([(2, 2), (3, 2), (3, 3), (4, 2), (2, 5)]).flatmap(
    lambda np_: st.tuples(st.just(np_), square(*np_), square(*np_))))
def test_matrix_kernels(data):
    (n, p), a, b = data
    assert ck.matmul_mod(a, b, n, p) == py.matmul_mod(a, b, n, p)
    assert ck.inverse_mod(a, n, p) == py.inverse_mod(a, n, p)
    assert ck.rank_mod(a, n, n, p) == py.rank_mod(a, n, n, p)
    assert ck.bruhat_word(a, n, p) == py.bruhat_word(a, n, p)
    if py.inverse_mod(a, n, p) is not None:
        assert ck.flag_canonical(a, n, p) == py.flag_canonical(a, n, p)


def test_backend_flag():
    from heckemac import kernels
    assert kernels.BACKEND in ("cython", "python")
