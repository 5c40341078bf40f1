import pytest

from heckejones.braids import BraidWord, full_twist, random_word, sphere_relator
from heckejones.jones import (
    NotRectangularError,
    T,
    build_jones,
    descent_report,
    evaluate_mcg,
    twisted_hecke_image,
)
from heckejones.matrix import ExactMatrix
from heckejones.ratfunc import RationalFunction
from heckejones.tableaux import YoungDiagram


def test_generator_images():
    rep = build_jones(YoungDiagram((2, 2)))
    t = RationalFunction.monomial(T)
    assert rep.gen[0] == ExactMatrix.diag(T, [t, -t.inverse()])
    assert rep.d == 2 and rep.r == 1


def test_rectangular_required():
    with pytest.raises(NotRectangularError):
        build_jones(YoungDiagram((2, 1)))
    assert build_jones(YoungDiagram((2, 1)), require_rectangular=False).d == 2


@pytest.mark.parametrize(
    "rows,sphere", [((2, 2), True), ((3, 3), True), ((2, 2, 2), True), ((2, 1), False), ((3, 1), False), ((2, 2, 1), False)]
)
def test_descent(rows, sphere):
    r = descent_report(YoungDiagram(rows))
    assert r.twist_ok
    assert r.sphere_ok == sphere


def test_abelian_twist_route_agrees(rng):
    rep = build_jones(YoungDiagram((3, 3)))
    for _ in range(10):
        w = random_word(6, rng.randint(0, 6), rng)
        assert evaluate_mcg(rep, w) == twisted_hecke_image(rep, w)


def test_characters_are_laurent(rng):
    rep = build_jones(YoungDiagram((2, 2, 2)))
    for _ in range(10):
        rep.character(random_word(6, rng.randint(0, 8), rng))


def test_n4_exception():
    rep = build_jones(YoungDiagram((2, 2)))
    assert evaluate_mcg(rep, BraidWord(4, (1, -3))).is_identity()
    assert evaluate_mcg(rep, full_twist(4)).is_identity()
    assert evaluate_mcg(rep, sphere_relator(4)).is_identity()
