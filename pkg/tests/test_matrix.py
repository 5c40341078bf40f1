import random

import pytest
import sympy

from heckejones.matrix import ExactMatrix, ShapeError, SingularMatrixError, matrix_ops
from heckejones.ratfunc import RationalFunction


def random_matrix(rng, n):
    pool = ["0", "1", "-1", "q", "q^-1", "q + 1", "2*q - 3", "1/(q + 2)", "(q^2 + 1)/(q - 1)"]
    return ExactMatrix.from_rows("q", [[rng.choice(pool) for _ in range(n)] for _ in range(n)])


def to_sympy(m: ExactMatrix):
    q = sympy.Symbol("q")
    n, k = m.shape
    return sympy.Matrix(n, k, lambda i, j: sympy.sympify(str(m[i, j]).replace("^", "**"), locals={"q": q}))


def test_determinant_matches_sympy(rng):
    for _ in range(5):
        m = random_matrix(rng, 3)
        diff = sympy.simplify(to_sympy(m).det() - to_sympy(ExactMatrix.diag("q", [m.determinant()]))[0, 0])
        assert diff == 0


def test_inverse_and_rank(rng):
    for _ in range(5):
        m = random_matrix(rng, 3)
        if m.determinant().is_zero():
            assert m.rank() < 3
            continue
        assert m @ m.inverse() == ExactMatrix.identity("q", 3)
        assert m.rank() == 3


def test_singular():
    m = ExactMatrix.from_rows("q", [["q", "1"], ["q^2", "q"]])
    assert m.rank() == 1
    with pytest.raises(SingularMatrixError):
        m.inverse()


def test_shape_errors():
    a = ExactMatrix.identity("q", 2)
    b = ExactMatrix.identity("q", 3)
    with pytest.raises(ShapeError):
        a @ b
    with pytest.raises(ShapeError):
        a + b


def test_scalar_and_identity():
    m = ExactMatrix.identity("q", 3).scale(RationalFunction.parse("q^2"))
    assert m.is_scalar() == RationalFunction.parse("q^2")
    assert not m.is_identity()
    assert ExactMatrix.from_rows("q", [["1", "1"], ["0", "1"]]).is_scalar() is None


def test_json_roundtrip(rng):
    m = random_matrix(rng, 3)
    assert ExactMatrix.from_json("q", m.to_json()) == m


def test_substitute_and_evaluate():
    m = ExactMatrix.from_rows("q", [["q", "1"], ["0", "1/q"]])
    t = m.substitute_power(2, "t")
    assert t == ExactMatrix.from_rows("t", [["t^2", "1"], ["0", "t^-2"]])
    assert m.evaluate_at(2)[1][1] == sympy.Rational(1, 2)


def test_matrix_ops():
    a = ExactMatrix.from_rows("q", [["q", "0"], ["1", "1"]])
    assert matrix_ops(a, a, "mul") == a @ a
    assert matrix_ops(a, None, "trace") == RationalFunction.parse("q + 1")
