import numpy as np
import pytest

from heckejones import finite
from heckejones.symplectic import J


@pytest.fixture(scope="module")
def table3():
    return finite.bfs_enumerate(3)


def test_order_formula():
    assert finite.sp_order(3) == 51840
    assert finite.sp_order(5) == 9360000


def test_bfs_order(table3):
    assert len(table3) == 51840
    assert len(np.unique(table3.codes)) == 51840


def test_elements_symplectic(table3):
    mats = table3.matrices()
    jp = finite.mod_p(J, 3)
    lhs = np.matmul(np.matmul(mats.transpose(0, 2, 1), jp), mats) % 3
    assert np.all(lhs == jp)


def test_closure_and_words(table3, rng):
    mats = table3.matrices()
    for _ in range(50):
        i, j = rng.randrange(len(table3)), rng.randrange(len(table3))
        assert table3.contains(mats[i] @ mats[j] % 3)
    from heckejones.symplectic import rho0

    for i in range(0, len(table3), 5000):
        w = table3.word(i)
        assert np.array_equal(finite.mod_p(rho0(w), 3), mats[i])
    assert table3.contains(np.eye(4, dtype=np.int64) * 2)


def test_lambda_kernel(table3):
    kern = table3.matrices(finite.kernel_of_lambda_p(table3))
    assert sorted(int(m[0, 0]) for m in kern) == [1, 2]
    assert all(np.array_equal(m, m[0, 0] * np.eye(4, dtype=np.int64)) for m in kern)


def test_psp(table3):
    r = finite.psp_checks(table3)
    assert r.psp_order == 25920
    assert r.center_trivial
    assert sum(r.class_sizes) == 25920 and len(r.class_sizes) == 20
    assert r.simple


def test_budget_and_prime_checks():
    with pytest.raises(finite.ResourceBudgetError):
        finite.bfs_enumerate(7)
    with pytest.raises(ValueError):
        finite.bfs_enumerate(9)


def test_backends_agree():
    a = finite.bfs_enumerate(3, backend="numpy")
    b = finite.bfs_enumerate(3, backend="numba", threads=4)
    assert np.array_equal(a.codes, b.codes) and np.array_equal(a.parent, b.parent)
