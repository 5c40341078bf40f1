"""Integral symplectic side of the genus-2 picture.

Homology basis (a1, b1, a2, b2) with <a_i, b_i> = 1.  The Dehn twists t_1..t_5
about a chain of curves act by transvections x -> x + <x, c> c.  Words in the
t_i reuse :class:`BraidWord` on six strands (t_i <-> s_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braids import BraidWord
from .jones import build_jones
from .tableaux import YoungDiagram

J = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], dtype=object)
I4 = np.eye(4, dtype=np.int64).astype(object)
I5 = np.eye(5, dtype=np.int64).astype(object)

# chain c1..c5 with <c_i, c_{i+1}> = 1 and all other pairings 0
CHAIN = (
    (0, -1, 0, 0),  # -b1
    (1, 0, 0, 0),  # a1
    (0, 1, 0, -1),  # b1 - b2
    (0, 0, 1, 0),  # a2
    (0, 0, 0, 1),  # b2
)

# quotient basis of Lambda^2 H / omega: a1^a2, a1^b2, b1^a2, b1^b2, a1^b1
_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
_QUOTIENT = [(0, 2), (0, 3), (1, 2), (1, 3), (0, 1)]
_OMEGA = np.array([1, 0, 0, 0, 0, 1], dtype=object)  # a1^b1 + a2^b2 in _PAIRS order


def _projection() -> np.ndarray:
    p = np.zeros((5, 6), dtype=np.int64).astype(object)
    for k, pair in enumerate(_QUOTIENT):
        p[k, _PAIRS.index(pair)] = 1
    p[4, _PAIRS.index((2, 3))] = -1  # a2^b2 = -a1^b1 mod omega
    return p


def _lift() -> np.ndarray:
    l = np.zeros((6, 5), dtype=np.int64).astype(object)
    for k, pair in enumerate(_QUOTIENT):
        l[_PAIRS.index(pair), k] = 1
    return l


PROJ = _projection()
LIFT = _lift()


def pairing(x, y) -> int:
    return int(np.asarray(x, dtype=object) @ J @ np.asarray(y, dtype=object))


def transvection(c) -> np.ndarray:
    """Matrix of x -> x + <x, c> c."""
    c = np.asarray(c, dtype=object)
    # <x, c> = x^T J c, so the map is I + c (J c)^T
    return I4 + np.outer(c, J @ c)


def rho0_generators() -> tuple[np.ndarray, ...]:
    return tuple(transvection(c) for c in CHAIN)


_GENS = rho0_generators()
_GENS_INV = tuple(2 * I4 - g for g in _GENS)  # (I + N)^-1 = I - N since N^2 = 0


def is_symplectic(x: np.ndarray) -> bool:
    return np.array_equal(x.T @ J @ x, J)


def rho0(w: BraidWord) -> np.ndarray:
    """Symplectic image of a word in t_1..t_5 (product in word order)."""
    if w.strands != 6:
        raise ValueError("genus-2 words live on 6 strands (letters t1..t5)")
    m = I4.copy()
    for x in w.letters:
        m = m @ (_GENS[x - 1] if x > 0 else _GENS_INV[-x - 1])
    return m


def exterior_square(x: np.ndarray) -> np.ndarray:
    """Lambda^2 x on the basis e_i ^ e_j (i < j)."""
    out = np.zeros((6, 6), dtype=np.int64).astype(object)
    for r, (i, j) in enumerate(_PAIRS):
        for c, (k, l) in enumerate(_PAIRS):
            out[r, c] = x[i, k] * x[j, l] - x[i, l] * x[j, k]
    return out


def lambda_of(x: np.ndarray) -> np.ndarray:
    """Action of a symplectic matrix on Lambda^2 H / omega Z, in the quotient basis."""
    x = np.asarray(x, dtype=object)
    e2 = exterior_square(x)
    # omega must be fixed for the action to descend
    if not np.array_equal(e2 @ _OMEGA, _OMEGA):
        raise ValueError("matrix does not preserve the symplectic class")
    return PROJ @ e2 @ LIFT


def sgn_of_word(w: BraidWord) -> int:
    return -1 if len(w.letters) % 2 else 1


def is_torelli(w: BraidWord) -> bool:
    return np.array_equal(rho0(w), I4)


def cor_b_check(w: BraidWord) -> bool:
    """rho0 of the genus-2 lift of ``w`` lies in {I, -I}."""
    m = rho0(w)
    return np.array_equal(m, I4) or np.array_equal(m, -I4)


@dataclass(frozen=True)
class TMinusOneRow:
    word: BraidWord
    character_at_minus_one: Fraction
    sgn: int
    lambda_trace: int

    @property
    def rhs(self) -> int:
        return self.sgn * self.lambda_trace

    @property
    def ok(self) -> bool:
        return self.character_at_minus_one == self.rhs


def t_minus1_rows(words: list[BraidWord]) -> list[TMinusOneRow]:
    """Both sides of the t = -1 character comparison for [2,2,2], word by word.

    The left side is the trace of the Jones image (a Laurent polynomial, so no
    pole can arise) evaluated at t = -1.  The right side uses sgn per word,
    (-1)^(number of letters).
    """
    rep = build_jones(YoungDiagram((2, 2, 2)))
    rows = []
    for w in words:
        chi = rep.character(w).evaluate(-1)
        lam = lambda_of(rho0(w))
        rows.append(TMinusOneRow(w, chi, sgn_of_word(w), int(np.trace(lam))))
    return rows


def t_minus1_check(words: list[BraidWord]) -> bool:
    return all(row.ok for row in t_minus1_rows(words))


def escape_prime(x: np.ndarray, primes=(3, 5, 7, 11, 13)) -> int | None:
    """Smallest listed prime p with x mod p != I (None if x = I mod all of them)."""
    x = np.asarray(x, dtype=object)
    for p in primes:
        if not np.array_equal(x % p, I4 % p):
            return p
    return None


def intersection_escape_check(samples: list[np.ndarray], primes=(3, 5, 7, 11, 13)) -> tuple[bool, list[int | None]]:
    """Every non-identity sample survives reduction mod some listed prime."""
    witnesses = [escape_prime(x, primes) for x in samples]
    ok = all(
        w is not None for x, w in zip(samples, witnesses) if not np.array_equal(np.asarray(x, dtype=object), I4)
    )
    return ok, witnesses
