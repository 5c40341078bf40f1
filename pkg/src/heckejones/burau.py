"""Reduced Burau matrices and their comparison with small Hecke representations."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .braids import BraidWord, exponent_sum, full_twist, random_word, substitute
from .hecke import Q, build_rep, evaluate as hecke_evaluate
from .matrix import ExactMatrix
from .ratfunc import RationalFunction
from .tableaux import YoungDiagram


@dataclass(frozen=True)
class BurauRep:
    n: int
    gen: tuple[ExactMatrix, ...]
    gen_inv: tuple[ExactMatrix, ...]
    identification: str

    def image(self, letter: int) -> ExactMatrix:
        return self.gen[letter - 1] if letter > 0 else self.gen_inv[-letter - 1]

    def evaluate(self, w: BraidWord) -> ExactMatrix:
        if w.strands != self.n:
            raise ValueError(f"word on {w.strands} strands, Burau on {self.n}")
        m = ExactMatrix.identity(Q, self.n - 1)
        for x in w.letters:
            m = m @ self.image(x)
        return m

    def metadata(self) -> dict:
        return {"n": self.n, "variable": Q, "identification": self.identification}


def _burau_generator(n: int, i: int, s: RationalFunction) -> ExactMatrix:
    """sigma_i acts as the identity off rows i-1..i+1 (1-based, size n-1)."""
    one = RationalFunction.one(Q)
    zero = RationalFunction.zero(Q)
    rows = [[one if r == c else zero for c in range(n - 1)] for r in range(n - 1)]
    k = i - 1
    rows[k][k] = -s
    if k > 0:
        rows[k - 1][k] = s
    if k < n - 2:
        rows[k + 1][k] = one
    return ExactMatrix(Q, rows)


_VARIABLES = {
    "s=q": RationalFunction.monomial(Q, 1),
    "s=1/q": RationalFunction.monomial(Q, -1),
}


def reduced_burau(n: int, identification: str = "s=q") -> BurauRep:
    """Reduced Burau on n strands with Burau variable s tied to q; trace(sigma_1) = (n-2) - s.

    ``identification`` is one of "s=q", "s=1/q", optionally suffixed ",transpose".
    """
    if n < 3:
        raise ValueError("reduced Burau needs n >= 3")
    var, _, tr = identification.partition(",")
    if var not in _VARIABLES or tr not in ("", "transpose"):
        raise ValueError(f"unknown identification {identification!r}")
    s = _VARIABLES[var]
    gen = [_burau_generator(n, i, s) for i in range(1, n)]
    if tr:
        gen = [g.transpose() for g in gen]
    return BurauRep(n, tuple(gen), tuple(g.inverse() for g in gen), identification)


IDENTIFICATIONS = ("s=q", "s=1/q", "s=q,transpose", "s=1/q,transpose")


def calibration_basket() -> list[BraidWord]:
    return [
        BraidWord(4, (1,)),
        BraidWord(4, (1, 2)),
        BraidWord(4, (1, 2, 3)),
        full_twist(4),
    ]


def _equivalent_on(burau: BurauRep, words: list[BraidWord]) -> bool:
    hecke = build_rep(YoungDiagram((2, 1, 1)))
    for w in words:
        lhs = hecke.character(w)
        rhs = burau.evaluate(w).trace()
        if exponent_sum(w) % 2:
            rhs = -rhs
        if RationalFunction.from_laurent(lhs) != rhs:
            return False
    return True


def choose_identification() -> str:
    """First candidate identification that passes on the calibration basket."""
    for ident in IDENTIFICATIONS:
        if _equivalent_on(reduced_burau(4, ident), calibration_basket()):
            return ident
    raise AssertionError("no Burau identification matches the [2,1,1] characters")


def burau_equivalence_check(words: list[BraidWord], identification: str | None = None) -> bool:
    """chi_[2,1,1](w) = (-1)^e(w) * trace Burau(w) for every sampled 4-strand word."""
    burau = reduced_burau(4, identification or choose_identification())
    return _equivalent_on(burau, words)


def kernel_biconditional_check(words: list[BraidWord], identification: str | None = None) -> bool:
    """pi_[2,1,1](w) = I iff (-1)^e(w) Burau(w) = I on the sampled words."""
    burau = reduced_burau(4, identification or choose_identification())
    hecke = build_rep(YoungDiagram((2, 1, 1)))
    for w in words:
        b = burau.evaluate(w)
        if exponent_sum(w) % 2:
            b = -b
        if hecke_evaluate(hecke, w).is_identity() != b.is_identity():
            return False
    return True


def collapse_b4(w: BraidWord) -> BraidWord:
    """B_4 -> B_3 sending s1, s3 to s1 and s2 to s2."""
    return substitute(w, lambda i: (1,) if i in (1, 3) else (2,), 3)


@dataclass(frozen=True)
class FactorizationReport:
    generators_equal: bool
    characters_match: bool
    matrices_match: bool

    @property
    def ok(self) -> bool:
        return self.generators_equal and self.characters_match


def factorization_report(words: list[BraidWord]) -> FactorizationReport:
    r22 = build_rep(YoungDiagram((2, 2)))
    r21 = build_rep(YoungDiagram((2, 1)))
    gens_equal = r22.gen[0] == r22.gen[2]
    chars = mats = True
    for w in words:
        v = collapse_b4(w)
        m22, m21 = hecke_evaluate(r22, w), hecke_evaluate(r21, v)
        chars &= m22.trace() == m21.trace()
        mats &= m22 == m21
    return FactorizationReport(gens_equal, chars, mats)


def b4_to_b3_factorization_check(words: list[BraidWord] | None = None) -> bool:
    """pi_[2,2](s1) = pi_[2,2](s3), and chi_[2,2](w) = chi_[2,1](collapse(w)) on the words."""
    if words is None:
        words = factorization_basket()
    return factorization_report(words).ok


def factorization_basket() -> list[BraidWord]:
    return [
        BraidWord(4, ()),
        BraidWord(4, (1,)),
        BraidWord(4, (1, 2)),
        BraidWord(4, (1, -3)),
        BraidWord(4, (2, 1, 2, -1)),
        full_twist(4),
    ]


def random_b4_words(count: int, seed: int, max_len: int = 12) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_word(4, rng.randint(0, max_len), rng) for _ in range(count)]
