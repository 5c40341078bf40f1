"""Jones representations of punctured-sphere mapping class groups over Q(t).

Each generator image is t^-r * G(q := t^d), with d the dimension and r the rank
of I + G.  The rescaling kills the full twist for every diagram; the sphere
relator dies only for rectangular diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braids import BraidWord, exponent_sum, full_twist, sphere_relator
from .hecke import HeckeRep, build_rep, evaluate as hecke_evaluate, r_of
from .matrix import ExactMatrix
from .ratfunc import LaurentPolynomial, RationalFunction
from .tableaux import YoungDiagram

T = "t"


class NotRectangularError(ValueError):
    pass


@dataclass(frozen=True)
class JonesRep:
    diagram: YoungDiagram
    n: int
    d: int
    r: int
    gen: tuple[ExactMatrix, ...]
    gen_inv: tuple[ExactMatrix, ...]
    hecke: HeckeRep

    @property
    def degenerate(self) -> bool:
        """One-row or one-column diagram."""
        return len(self.diagram.rows) == 1 or self.diagram.rows[0] == 1

    def image(self, letter: int) -> ExactMatrix:
        return self.gen[letter - 1] if letter > 0 else self.gen_inv[-letter - 1]

    def evaluate(self, w: BraidWord) -> ExactMatrix:
        return evaluate_mcg(self, w)

    def character(self, w: BraidWord) -> LaurentPolynomial:
        tr = evaluate_mcg(self, w).trace()
        if not tr.is_laurent():
            raise AssertionError(f"character of {w} is not a Laurent polynomial: {tr}")
        return tr.to_laurent()


def rescale(m: ExactMatrix, d: int, power: int) -> ExactMatrix:
    """t^power * m(q := t^d)."""
    scale = RationalFunction.monomial(T, power)
    return m.map(lambda x: scale * x.substitute_power(d, T), T)


@lru_cache(maxsize=None)
def _build(y: YoungDiagram) -> JonesRep:
    rep = build_rep(y)
    r = r_of(y)
    gen = tuple(rescale(g, rep.d, -r) for g in rep.gen)
    gen_inv = tuple(rescale(g, rep.d, r) for g in rep.gen_inv)
    return JonesRep(y, rep.n, rep.d, r, gen, gen_inv, rep)


def build_jones(y: YoungDiagram, *, require_rectangular: bool = True) -> JonesRep:
    if require_rectangular and not y.is_rectangular():
        raise NotRectangularError(f"{y} is not rectangular; the rescaled representation does not descend")
    return _build(y)


def evaluate_mcg(rep: JonesRep, w: BraidWord) -> ExactMatrix:
    if w.strands != rep.n:
        raise ValueError(f"word on {w.strands} strands, representation on {rep.n} punctures")
    if not w.letters:
        return ExactMatrix.identity(T, rep.d)
    m = rep.image(w.letters[0])
    for x in w.letters[1:]:
        m = m @ rep.image(x)
    return m


def alpha(rep: JonesRep, w: BraidWord) -> RationalFunction:
    """The abelian twist t^(-r * exponent_sum)."""
    return RationalFunction.monomial(T, -rep.r * exponent_sum(w))


def twisted_hecke_image(rep: JonesRep, w: BraidWord) -> ExactMatrix:
    """alpha(w) * pi_Y(w)|_{q = t^d}, computed through the Hecke route."""
    return rescale(hecke_evaluate(rep.hecke, w), rep.d, -rep.r * exponent_sum(w))


@dataclass(frozen=True)
class DescentReport:
    diagram: YoungDiagram
    twist_ok: bool
    sphere_ok: bool


def descent_report(y: YoungDiagram) -> DescentReport:
    rep = build_jones(y, require_rectangular=False)
    n = rep.n
    return DescentReport(
        y,
        evaluate_mcg(rep, full_twist(n)).is_identity(),
        evaluate_mcg(rep, sphere_relator(n)).is_identity(),
    )
