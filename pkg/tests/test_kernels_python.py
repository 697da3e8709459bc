"""Direct checks of the pure-Python kernels against naive definitions."""

import itertools

from hypothesis import given
from hypothesis import strategies as st

from heckemac import _pykernels as py
from heckemac.symgroup import Permutation


def perm_matrix(w):
    n = len(w)
    return tuple(1 if w[j] == i + 1 else 0 for i in range(n) for j in range(n))


def upper(n, p, diag, off):
    a = [0] * (n * n)
    k = 0
    for i in range(n):
        for j in range(i, n):
            a[i * n + j] = diag[i] if i == j else off[k]
            k += 1 if i != j else 0
    return tuple(a)


def test_inverse_of_singular_is_none():
    assert py.inverse_mod((1, 2, 2, 4), 2, 5) is None


def test_permutation_matrix_bruhat_cell():
    for w in itertools.permutations((1, 2, 3)):
        assert py.bruhat_word(perm_matrix(w), 3, 3) == w


@given(st.permutations((1, 2, 3)),
       st.lists(st.integers(1, 2), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.lists(st.integers(1, 2), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_bruhat_word_is_double_coset_invariant(w, d1, o1, d2, o2):
    n, p = 3, 3
    b1, b2 = upper(n, p, d1, o1), upper(n, p, d2, o2)
    g = py.matmul_mod(py.matmul_mod(b1, perm_matrix(w), n, p), b2, n, p)
    assert py.bruhat_word(g, n, p) == tuple(w)
    assert Permutation(py.bruhat_word(g, n, p)) == Permutation(w)


@given(st.lists(st.integers(1, 2), min_size=3, max_size=3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_flag_canonical_is_right_b_invariant(d, o):
    n, p = 3, 3
    g = (0, 1, 2, 1, 1, 0, 2, 0, 1)
    assert py.inverse_mod(g, n, p) is not None
    b = upper(n, p, d, o)
    assert py.flag_canonical(py.matmul_mod(g, b, n, p), n, p) == py.flag_canonical(g, n, p)


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    code = ("from heckemac import kernels; from heckemac.oracle import compare_lusztig; "
            "print(kernels.BACKEND, all(r.match for r in compare_lusztig(3, 2)))")
    env = dict(os.environ, HECKEMAC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "True"]
