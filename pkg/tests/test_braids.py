import random

import pytest

from heckejones.braids import (
    BraidWord,
    Permutation,
    StrandMismatchError,
    apply_braid_relation,
    enumerate_words,
    exponent_sum,
    free_reduce,
    full_twist,
    hyperelliptic_word,
    is_trivial_braid,
    permutation_of,
    random_word,
    sphere_relator,
    substitute,
)


def test_parse_and_str():
    w = BraidWord.parse("s1 -s2 s3^2 t1^-1", 4)
    assert w.letters == (1, -2, 3, 3, -1)
    assert str(BraidWord(4, (1, -3))) == "s1 -s3"
    with pytest.raises(ValueError):
        BraidWord.parse("s4", 4)
    with pytest.raises(ValueError):
        BraidWord.parse("x1", 4)


def test_group_operations():
    a = BraidWord(4, (1, 2))
    assert (a * a.inverse()).reduced().letters == ()
    assert (a**-2).letters == (-2, -1, -2, -1)
    with pytest.raises(StrandMismatchError):
        a * BraidWord(3, (1,))


def test_permutation_is_homomorphism(rng):
    for _ in range(50):
        a, b = random_word(5, 6, rng), random_word(5, 6, rng)
        assert permutation_of(a * b) == permutation_of(a).then(permutation_of(b))
    assert str(permutation_of(BraidWord(4, (1, -3)))) == "(1 2)(3 4)"
    assert Permutation((2, 1, 4, 3)).cycle_type() == (2, 2)


def test_named_words():
    assert len(full_twist(4)) == 12
    assert sphere_relator(4).letters == (1, 2, 3, 3, 2, 1)
    assert hyperelliptic_word() == sphere_relator(6)
    assert permutation_of(full_twist(5)).is_identity()
    assert exponent_sum(BraidWord(3, (1, -2, -2))) == -1


def test_enumeration_counts():
    words = list(enumerate_words(3, 3))
    # 4 letters, freely reduced: 4 + 12 + 36
    assert len(words) == 52
    assert all(free_reduce(w) == w for w in words)
    assert all(exponent_sum(w) == 0 for w in enumerate_words(3, 4, exponent_sum_zero=True))


def test_artin_action_detects_relations(rng):
    for _ in range(30):
        w = random_word(5, 5, rng)
        v = apply_braid_relation(w, rng)
        assert is_trivial_braid(v * w.inverse())
    assert is_trivial_braid(BraidWord(4, (1, 2, 1, -2, -1, -2)))
    assert not is_trivial_braid(BraidWord(4, (1, -3)))
    assert not is_trivial_braid(full_twist(3))


def test_substitute():
    w = BraidWord(4, (1, -3, 2))
    v = substitute(w, lambda i: (1,) if i in (1, 3) else (2,), 3)
    assert v == BraidWord(3, (1, -1, 2))
