from fractions import Fraction

import numpy as np
import pytest

from heckejones import _kernels
from heckejones.braids import BraidWord
from heckejones.jones import build_jones
from heckejones.search import (
    MODULUS,
    count_reduced_words,
    kernel_search,
    screen_value,
    screen_words,
    specialize_mod,
)
from heckejones.tableaux import YoungDiagram


def test_backends_agree_on_primitives():
    rng = np.random.default_rng(1)
    a = rng.integers(0, 7, size=(50, 4, 4))
    b = rng.integers(0, 7, size=(4, 4))
    kn, kp = _kernels.get_backend("numba"), _kernels.get_backend("numpy")
    assert np.array_equal(kn["matmul_mod"](a, b, 7), kp["matmul_mod"](a, b, 7))
    codes = kp["encode"](a, 7)
    assert np.array_equal(codes, kn["encode"](a, 7))
    assert np.array_equal(kn["decode"](codes, 7, 4), a)


def test_screen_backends_agree():
    gens = specialize_mod(build_jones(YoungDiagram((2, 2))), Fraction(5, 3))
    hits = {name: screen_words(gens, 5, MODULUS, 1, name) for name in ("numba", "numpy")}
    assert hits["numba"] == hits["numpy"]
    assert hits["numba"] == screen_words(gens, 5, MODULUS, 4, "numba")


def test_screen_value_matches_symbolic():
    rep = build_jones(YoungDiagram((2, 2)))
    w = BraidWord(4, (1, 2, -3, 2))
    t0 = Fraction(7, 11)
    exact = rep.evaluate(w).evaluate_at(t0)
    expected = [[x.numerator * pow(x.denominator, -1, MODULUS) % MODULUS for x in row] for row in exact]
    assert screen_value(rep, w, t0).tolist() == expected


def test_n4_search():
    res = kernel_search(YoungDiagram((2, 2)), 4, seed=0)
    words = {str(h.word) for h in res.hits}
    assert "s1 -s3" in words and "-s1 s3" in words
    assert all(h.confirmed for h in res.hits)
    nontrivial = [h for h in res.hits if not h.trivial_braid]
    assert nontrivial and all(str(h.permutation) == "(1 2)(3 4)" for h in nontrivial if len(h.word) == 2)
    assert res.words_screened == count_reduced_words(6, 4)


def test_search_is_deterministic_across_threads():
    a = kernel_search(YoungDiagram((2, 2)), 4, seed=3, threads=1).to_json_obj()
    b = kernel_search(YoungDiagram((2, 2)), 4, seed=3, threads=4).to_json_obj()
    assert a == b


def test_modulus_bound():
    with pytest.raises(ValueError):
        kernel_search(YoungDiagram((2, 2)), 2, modulus=1 << 29)


def test_env_flag_selects_numpy_fallback():
    import os
    import subprocess
    import sys

    code = (
        "from heckejones import _kernels; from heckejones.search import kernel_search; "
        "from heckejones.tableaux import YoungDiagram; "
        "print(_kernels.DEFAULT_BACKEND, kernel_search(YoungDiagram((2, 2)), 3).to_json_obj()['hit_count'])"
    )
    env = dict(os.environ, HECKEJONES_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, hits = out.stdout.split()
    assert backend == "numpy"
    assert int(hits) == kernel_search(YoungDiagram((2, 2)), 3).to_json_obj()["hit_count"]
