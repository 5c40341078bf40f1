"""Seminormal Iwahori-Hecke representations of the braid group over Q(q).

Eigenvalue convention: every generator G satisfies (G - q)(G + 1) = 0, so the
one-row diagram gives s -> q and the one-column diagram gives s -> -1.

Basis vectors are the standard tableaux of the diagram, ordered by row word.
For the axial distance rho of i in tableau tau:

* rho = 1  (i, i+1 in one row):    G v = q v
* rho = -1 (i, i+1 in one column): G v = -v
* |rho| >= 2: tau and tau' = s_i tau span a block.  With rho >= 2 on the tau side,
  G v_tau = a v_tau + v_tau' and G v_tau' = c v_tau + b v_tau', where
  a = (q-1)/(1-q^-rho), b = (q-1)/(1-q^rho),
  c = q (q^(rho+1)-1)(q^(rho-1)-1)/(q^rho-1)^2.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import flint

from .braids import BraidWord, full_twist, include, random_word
from .matrix import ExactMatrix
from .ratfunc import LaurentPolynomial, PoleError, RationalFunction
from .tableaux import StandardTableau, YoungDiagram, axial, dimension, standard_tableaux

Q = "q"


class ConstructionError(AssertionError):
    """An identity that must hold for a correct construction failed."""


def _q_pow_minus_one(k: int) -> RationalFunction:
    """q^k - 1 for k >= 1."""
    return RationalFunction.from_coeffs(Q, [-1] + [0] * (k - 1) + [1])


@lru_cache(maxsize=None)
def seminormal_block(rho: int) -> tuple[RationalFunction, RationalFunction, RationalFunction]:
    """(a, b, c) for axial distance ``rho >= 2``."""
    if rho < 2:
        raise ValueError("block entries are defined for rho >= 2")
    q = RationalFunction.monomial(Q)
    qm1 = q - 1
    a = qm1 * q**rho / _q_pow_minus_one(rho)
    b = -qm1 / _q_pow_minus_one(rho)
    c = q * _q_pow_minus_one(rho + 1) * _q_pow_minus_one(rho - 1) / _q_pow_minus_one(rho) ** 2
    return a, b, c


def _generator_matrix(basis: tuple[StandardTableau, ...], i: int) -> ExactMatrix:
    d = len(basis)
    index = {t: k for k, t in enumerate(basis)}
    zero = RationalFunction.zero(Q)
    m = [[zero] * d for _ in range(d)]
    q = RationalFunction.monomial(Q)
    for k, tau in enumerate(basis):
        rho = axial(tau, i)
        if rho == 1:
            m[k][k] = q
        elif rho == -1:
            m[k][k] = RationalFunction.constant(Q, -1)
        elif rho >= 2:
            other = tau.swap(i)
            j = index[other]
            a, b, c = seminormal_block(rho)
            # columns are images: column k is G v_tau
            m[k][k] = a
            m[j][k] = RationalFunction.one(Q)
            m[k][j] = c
            m[j][j] = b
    return ExactMatrix(Q, m)


def _inverse_from_quadratic(g: ExactMatrix) -> ExactMatrix:
    """G^-1 = q^-1 G - (1 - q^-1) I, valid because (G - q)(G + 1) = 0."""
    qinv = RationalFunction.monomial(Q, -1)
    shift = RationalFunction.one(Q) - qinv
    d = g.rows
    return ExactMatrix(
        Q,
        [[qinv * g.entries[r][c] - (shift if r == c else 0) for c in range(d)] for r in range(d)],
    )


@dataclass(frozen=True)
class HeckeRep:
    diagram: YoungDiagram
    n: int
    d: int
    basis: tuple[StandardTableau, ...]
    gen: tuple[ExactMatrix, ...]
    gen_inv: tuple[ExactMatrix, ...]

    def image(self, letter: int) -> ExactMatrix:
        return self.gen[letter - 1] if letter > 0 else self.gen_inv[-letter - 1]

    def evaluate(self, w: BraidWord) -> ExactMatrix:
        return evaluate(self, w)

    def character(self, w: BraidWord) -> LaurentPolynomial:
        return character(self, w)


@lru_cache(maxsize=None)
def build_rep(y: YoungDiagram) -> HeckeRep:
    n = y.n
    basis = standard_tableaux(y)
    if n == 1:
        return HeckeRep(y, 1, 1, basis, (), ())
    gen = tuple(_generator_matrix(basis, i) for i in range(1, n))
    gen_inv = tuple(_inverse_from_quadratic(g) for g in gen)
    return HeckeRep(y, n, len(basis), basis, gen, gen_inv)


def evaluate(rep: HeckeRep, w: BraidWord) -> ExactMatrix:
    if w.strands != rep.n:
        raise ValueError(f"word on {w.strands} strands, representation of B_{rep.n}")
    if not w.letters:
        return ExactMatrix.identity(Q, rep.d)
    m = rep.image(w.letters[0])
    for x in w.letters[1:]:
        m = m @ rep.image(x)
    return m


def character(rep: HeckeRep, w: BraidWord) -> LaurentPolynomial:
    tr = evaluate(rep, w).trace()
    if not tr.is_laurent():
        raise ConstructionError(f"character of {w} in {rep.diagram} is not a Laurent polynomial: {tr}")
    return tr.to_laurent()


@lru_cache(maxsize=None)
def r_of(y: YoungDiagram) -> int:
    rep = build_rep(y)
    if rep.n < 2:
        return 0
    return (ExactMatrix.identity(Q, rep.d) + rep.gen[0]).rank()


def r_combinatorial(y: YoungDiagram) -> int:
    """Number of standard tableaux with 2 in the first row."""
    if y.n < 2:
        return 0
    return sum(1 for t in standard_tableaux(y) if t.positions[2][0] == 1)


def full_twist_scalar_check(y: YoungDiagram) -> int:
    """Exponent e with pi_Y(full twist) = q^e I; checks e = r n(n-1)/d."""
    rep = build_rep(y)
    n, d = rep.n, rep.d
    r = r_of(y)
    img = evaluate(rep, full_twist(n))
    c = img.is_scalar()
    if c is None or not c.is_laurent():
        raise ConstructionError(f"full twist image for {y} is not scalar")
    lp = c.to_laurent()
    terms = lp.terms
    if len(terms) != 1 or next(iter(terms.values())) != 1:
        raise ConstructionError(f"full twist scalar for {y} is {c}, not a power of q")
    e = next(iter(terms))
    if (r * n * (n - 1)) % d != 0:
        raise ConstructionError(f"r n(n-1)/d is not an integer for {y}")
    if e != r * n * (n - 1) // d:
        raise ConstructionError(f"full twist exponent {e} != r n(n-1)/d = {r * n * (n - 1) // d} for {y}")
    return e


def branching_check(y: YoungDiagram, sample_words: list[BraidWord]) -> bool:
    """Restriction characters agree with the sum over removable corners."""
    rep = build_rep(y)
    parts = [build_rep(y0) for y0 in y.removable_corners()]
    for w in sample_words:
        lhs = character(rep, include(w, rep.n))
        rhs = LaurentPolynomial.constant(Q, 0)
        for p in parts:
            rhs = rhs + character(p, w)
        if lhs != rhs:
            return False
    return True


def random_branching_words(n: int, count: int, seed: int, max_len: int = 10) -> list[BraidWord]:
    """Random words over n - 1 strands, lengths 0..max_len."""
    rng = random.Random(seed)
    return [random_word(n - 1, rng.randint(0, max_len), rng) for _ in range(count)]


# -- q = 1 specialization ---------------------------------------------------


def specialize(m: ExactMatrix, x) -> flint.fmpq_mat:
    """Exact value of ``m`` at a rational point, as an fmpq matrix."""
    vals = m.evaluate_at(x)
    return flint.fmpq_mat([[flint.fmpq(v.numerator, v.denominator) for v in row] for row in vals])


def symmetric_group_words(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(permutation, shortest word) for all of S_n via breadth-first search over adjacent transpositions."""
    start = tuple(range(1, n + 1))
    seen = {start: ()}
    order = [start]
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for i in range(1, n):
            nxt = list(p)
            nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
            nxt = tuple(nxt)
            if nxt not in seen:
                seen[nxt] = seen[p] + (i,)
                order.append(nxt)
                queue.append(nxt)
    return [(p, seen[p]) for p in order]


@dataclass
class Q1Report:
    pole_free: bool
    involutions: bool
    descends: bool
    sum_chi_squared: int | None
    group_order: int

    @property
    def ok(self) -> bool:
        irreducible = self.sum_chi_squared is None or self.sum_chi_squared == self.group_order
        return self.pole_free and self.involutions and self.descends and irreducible


def q1_specialization(y: YoungDiagram, full_enumeration_max_n: int = 5) -> Q1Report:
    rep = build_rep(y)
    n, d = rep.n, rep.d
    order = 1
    for k in range(2, n + 1):
        order *= k
    try:
        gens = [specialize(g, 1) for g in rep.gen]
    except PoleError:
        return Q1Report(False, False, False, None, order)
    ident = flint.fmpq_mat(d, d, [1 if i == j else 0 for i in range(d) for j in range(d)])
    involutions = all(g * g == ident for g in gens)
    if n > full_enumeration_max_n and n > 1:
        return Q1Report(True, involutions, involutions, None, order)
    # walk the Cayley graph; every edge must land on the matrix already recorded for its endpoint
    mats = {tuple(range(1, n + 1)): ident}
    queue = deque([tuple(range(1, n + 1))])
    descends = True
    while queue:
        p = queue.popleft()
        for i in range(1, n):
            nxt = list(p)
            nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
            nxt = tuple(nxt)
            m = mats[p] * gens[i - 1]
            if nxt in mats:
                descends &= mats[nxt] == m
            else:
                mats[nxt] = m
                queue.append(nxt)
    total = Fraction(0)
    for m in mats.values():
        tr = sum((m[i, i] for i in range(d)), flint.fmpq(0))
        total += Fraction(int(tr.p), int(tr.q)) ** 2
    if total.denominator != 1:
        descends = False
    return Q1Report(True, involutions, descends, int(total), order)


def q1_specialization_check(y: YoungDiagram) -> bool:
    return q1_specialization(y).ok


# -- relation checks ----------------------------------------------------------


def quadratic_relation_holds(rep: HeckeRep, i: int) -> bool:
    g = rep.gen[i - 1]
    ident = ExactMatrix.identity(Q, rep.d)
    q = RationalFunction.monomial(Q)
    lhs = (g - ident.scale(q)) @ (g + ident)
    return lhs == ExactMatrix.zeros(Q, rep.d)


def braid_relations_hold(rep: HeckeRep) -> list[tuple[int, int]]:
    """Pairs (i, j) whose braid or commutation relation fails; empty when all hold."""
    bad = []
    for i, j in itertools.combinations(range(1, rep.n), 2):
        gi, gj = rep.gen[i - 1], rep.gen[j - 1]
        if j == i + 1:
            ok = gi @ gj @ gi == gj @ gi @ gj
        else:
            ok = gi @ gj == gj @ gi
        if not ok:
            bad.append((i, j))
    return bad


def inverse_letters_hold(rep: HeckeRep) -> bool:
    ident = ExactMatrix.identity(Q, rep.d)
    return all(g @ gi == ident for g, gi in zip(rep.gen, rep.gen_inv))


def generator_determinant(rep: HeckeRep, i: int = 1) -> RationalFunction:
    return rep.gen[i - 1].determinant()


def expected_generator_determinant(y: YoungDiagram) -> RationalFunction:
    r, d = r_of(y), dimension(y)
    return RationalFunction.monomial(Q, r, (-1) ** (d - r))
