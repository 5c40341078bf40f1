from math import factorial

import pytest

from heckejones.tableaux import (
    StandardTableau,
    YoungDiagram,
    axial,
    content,
    dimension,
    partitions,
    standard_tableaux,
)

# number of partitions p(n)
PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15}


@pytest.mark.parametrize("n", range(1, 8))
def test_partitions_and_dimensions(n):
    ys = list(partitions(n))
    assert len(ys) == PARTITION_COUNTS[n]
    # sum of squared dimensions is n!
    assert sum(dimension(y) ** 2 for y in ys) == factorial(n)
    for y in ys:
        assert len(standard_tableaux(y)) == dimension(y)


def test_known_dimensions():
    assert dimension(YoungDiagram((2, 2, 2))) == 5
    assert dimension(YoungDiagram((3, 3))) == 5
    assert dimension(YoungDiagram((3, 2, 1))) == 16
    assert dimension(YoungDiagram((2, 1, 1))) == 3


def test_parse():
    assert YoungDiagram.parse("[3,3]") == YoungDiagram((3, 3))
    assert YoungDiagram.parse("[2^3]") == YoungDiagram((2, 2, 2))
    with pytest.raises(ValueError):
        YoungDiagram.parse("[1,2]")
    with pytest.raises(ValueError):
        YoungDiagram.parse("3,3")


def test_shape_queries():
    y = YoungDiagram((3, 2))
    assert not y.is_rectangular()
    assert YoungDiagram((2, 2, 2)).is_rectangular()
    assert y.transpose() == YoungDiagram((2, 2, 1))
    assert sorted(y.removable_corners()) == [YoungDiagram((2, 2)), YoungDiagram((3, 1))]
    assert y.hook_length((1, 1)) == 4


def test_basis_order_and_axial():
    basis = standard_tableaux(YoungDiagram((2, 2)))
    assert [t.filling for t in basis] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]
    t = basis[0]
    assert axial(t, 1) == 1  # 2 sits right of 1
    assert axial(t, 2) == -2
    assert content((2, 1)) == -1


def test_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau(YoungDiagram((2, 1)), ((2, 1), (3,)))
    t = StandardTableau(YoungDiagram((2, 1)), ((1, 2), (3,)))
    assert t.swap(2) == StandardTableau(YoungDiagram((2, 1)), ((1, 3), (2,)))
    assert t.swap(1) is None
