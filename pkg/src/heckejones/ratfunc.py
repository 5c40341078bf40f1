"""Exact univariate arithmetic over Q: Laurent polynomials and rational functions.

Polynomial multiplication and gcd are delegated to FLINT's ``fmpq_poly``; this
module owns the canonical forms layered on top.

A :class:`LaurentPolynomial` is stored as ``x**val * poly`` where ``poly`` has a
nonzero constant term.  A :class:`RationalFunction` is stored as
``x**val * num / den`` where ``num`` and ``den`` are coprime, both have nonzero
constant terms, and ``den`` is monic.  With that normalization equality is a
structural comparison.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

import flint

_P = flint.fmpq_poly
_ONE = _P([1])
_ZERO = _P([])


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


class VariableMismatchError(ValueError):
    pass


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, Rational):
        return flint.fmpq(int(x.numerator), int(x.denominator))
    if isinstance(x, str):
        return _to_fmpq(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _to_fraction(x: flint.fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def _strip(poly: _P) -> tuple[int, _P]:
    """Split ``poly`` as ``x**k * rest`` with ``rest(0) != 0``."""
    if poly[0] != 0 or poly.is_zero():
        return 0, poly
    k = 1
    while poly[k] == 0:
        k += 1
    return k, poly.right_shift(k)


def _poly_key(poly: _P) -> tuple:
    return tuple((int(c.p), int(c.q)) for c in poly.coeffs())


def _check_var(a: str, b: str) -> None:
    if a != b:
        raise VariableMismatchError(f"variable mismatch: {a!r} vs {b!r}")


def _format_coeff_term(c: Fraction, exp: int, var: str, first: bool) -> str:
    neg = c < 0
    mag = -c if neg else c
    if exp == 0:
        body = str(mag)
    else:
        mono = var if exp == 1 else f"{var}^{exp}"
        body = mono if mag == 1 else f"{mag}*{mono}"
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def _format_terms(terms: list[tuple[int, Fraction]], var: str) -> str:
    if not terms:
        return "0"
    out = []
    for k, (exp, c) in enumerate(sorted(terms, reverse=True)):
        out.append(_format_coeff_term(c, exp, var, k == 0))
    return "".join(out)


class LaurentPolynomial:
    """Element of Q[x, x^-1] in a named variable."""

    __slots__ = ("var", "val", "poly")

    def __init__(self, var: str, val: int, poly: _P):
        # callers guarantee poly(0) != 0 unless poly == 0
        self.var = var
        self.val = val if not poly.is_zero() else 0
        self.poly = poly

    @classmethod
    def from_terms(cls, var: str, terms: dict[int, object]) -> LaurentPolynomial:
        terms = {e: _to_fmpq(c) for e, c in terms.items() if c != 0}
        if not terms:
            return cls(var, 0, _ZERO)
        lo = min(terms)
        coeffs = [flint.fmpq(0)] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls(var, lo, _P(coeffs))

    @classmethod
    def constant(cls, var: str, c) -> LaurentPolynomial:
        return cls.from_terms(var, {0: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self.val + i: _to_fraction(c) for i, c in enumerate(self.poly.coeffs()) if c != 0}

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def min_exponent(self) -> int:
        return self.val

    @property
    def max_exponent(self) -> int:
        return self.val + max(self.poly.degree(), 0)

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            _check_var(self.var, other.var)
            return other
        return LaurentPolynomial.constant(self.var, other)

    def __add__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        m = min(self.val, other.val)
        s = self.poly.left_shift(self.val - m) + other.poly.left_shift(other.val - m)
        k, s = _strip(s)
        return LaurentPolynomial(self.var, m + k, s)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.var, self.val, -self.poly)

    def __sub__(self, other) -> LaurentPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        return LaurentPolynomial(self.var, self.val + other.val, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPolynomial:
        if e < 0:
            if self.poly.degree() != 0:
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            return LaurentPolynomial(self.var, self.val * e, _P([1 / self.poly[0]]) ** (-e))
        return LaurentPolynomial(self.var, self.val * e, self.poly**e)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.var == other.var and self.val == other.val and self.poly == other.poly
        if isinstance(other, (int, Rational)):
            return self == LaurentPolynomial.constant(self.var, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.val, _poly_key(self.poly)))

    def evaluate(self, x) -> Fraction:
        return RationalFunction.from_laurent(self).evaluate_at(x)

    def __str__(self) -> str:
        return _format_terms(list(self.terms.items()), self.var)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


class RationalFunction:
    """Element of the fraction field Q(x), kept in canonical form."""

    __slots__ = ("var", "val", "num", "den")

    def __init__(self, var: str, val: int, num: _P, den: _P):
        # trusted constructor; use normalize() for arbitrary input
        self.var = var
        self.val = val
        self.num = num
        self.den = den

    @classmethod
    def normalize(cls, var: str, val: int, num: _P, den: _P) -> RationalFunction:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return cls(var, 0, _ZERO, _ONE)
        k, num = _strip(num)
        j, den = _strip(den)
        val += k - j
        if not den.is_one():
            if den.degree() > 0:
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        return cls(var, val, num, den)

    @classmethod
    def zero(cls, var: str) -> RationalFunction:
        return cls(var, 0, _ZERO, _ONE)

    @classmethod
    def one(cls, var: str) -> RationalFunction:
        return cls(var, 0, _ONE, _ONE)

    @classmethod
    def constant(cls, var: str, c) -> RationalFunction:
        c = _to_fmpq(c)
        if c == 0:
            return cls.zero(var)
        return cls(var, 0, _P([c]), _ONE)

    @classmethod
    def monomial(cls, var: str, exp: int = 1, coeff=1) -> RationalFunction:
        c = _to_fmpq(coeff)
        if c == 0:
            return cls.zero(var)
        return cls(var, exp, _P([c]), _ONE)

    @classmethod
    def from_laurent(cls, lp: LaurentPolynomial) -> RationalFunction:
        return cls(lp.var, lp.val, lp.poly, _ONE)

    @classmethod
    def from_coeffs(cls, var: str, num: list, den: list | None = None, val: int = 0) -> RationalFunction:
        """Build ``x**val * sum(num[i] x^i) / sum(den[i] x^i)`` from ascending coefficient lists."""
        n = _P([_to_fmpq(c) for c in num])
        d = _P([_to_fmpq(c) for c in den]) if den is not None else _ONE
        return cls.normalize(var, val, n, d)

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> RationalFunction:
        return _Parser(text, var).parse()

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.val == 0 and self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def to_laurent(self) -> LaurentPolynomial:
        if not self.den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return LaurentPolynomial(self.var, self.val, self.num)

    @property
    def numerator(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.var, self.val, self.num)

    @property
    def denominator(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.var, 0, self.den)

    def size(self) -> int:
        """Crude complexity measure used for pivot selection."""
        return max(self.num.degree(), 0) + self.den.degree()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise VariableMismatchError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, LaurentPolynomial):
            _check_var(self.var, other.var)
            return RationalFunction.from_laurent(other)
        if isinstance(other, (int, Rational, flint.fmpq)):
            return RationalFunction.constant(self.var, other)
        return NotImplemented

    def __add__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        m = min(self.val, other.val)
        a = self.num.left_shift(self.val - m) if self.val != m else self.num
        b = other.num.left_shift(other.val - m) if other.val != m else other.num
        if self.den == other.den:
            if self.den.is_one():
                s = a + b
                if s.is_zero():
                    return RationalFunction.zero(self.var)
                k, s = _strip(s)
                return RationalFunction(self.var, m + k, s, _ONE)
            return RationalFunction.normalize(self.var, m, a + b, self.den)
        return RationalFunction.normalize(self.var, m, a * other.den + b * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(self.var, self.val, -self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction.zero(self.var)
        val = self.val + other.val
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.var, val, self.num * other.num, _ONE)
        return RationalFunction.normalize(self.var, val, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        lc = self.num.leading_coefficient()
        return RationalFunction(self.var, -self.val, self.den / lc, self.num / lc)

    def __truediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int) -> RationalFunction:
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return RationalFunction.one(self.var)
        return RationalFunction(self.var, self.val * e, self.num**e, self.den**e)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return (
                self.var == other.var
                and self.val == other.val
                and self.num == other.num
                and self.den == other.den
            )
        if isinstance(other, (int, Rational, LaurentPolynomial)):
            try:
                return self == self._coerce(other)
            except VariableMismatchError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.val, _poly_key(self.num), _poly_key(self.den)))

    # -- specialization ---------------------------------------------------

    def evaluate_at(self, x) -> Fraction:
        """Exact value at the rational point ``x``.

        Raises :class:`PoleError` when the canonical denominator vanishes at
        ``x``; nothing is cancelled at evaluation time.
        """
        xq = _to_fmpq(x)
        if self.num.is_zero():
            return Fraction(0)
        if xq == 0 and self.val < 0:
            raise PoleError(f"{self} has negative exponents; cannot evaluate at 0")
        dv = self.den(xq)
        if dv == 0:
            raise PoleError(f"{self} has a pole at {self.var} = {x}")
        r = self.num(xq) / dv
        if self.val:
            r = r * xq**self.val
        return _to_fraction(r)

    def substitute_power(self, d: int, var: str | None = None) -> RationalFunction:
        """Apply the ring map ``x -> y**d`` (``y`` named ``var``)."""
        if d < 1:
            raise ValueError("substitute_power needs d >= 1")
        var = var or self.var
        if d == 1:
            return RationalFunction(var, self.val, self.num, self.den)
        # gcd(N(x^d), D(x^d)) = 1 when gcd(N, D) = 1, so no renormalization needed
        return RationalFunction(var, self.val * d, _spread(self.num, d), _spread(self.den, d))

    def rename(self, var: str) -> RationalFunction:
        return RationalFunction(var, self.val, self.num, self.den)

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        num = _format_terms(list(self.numerator.terms.items()), self.var)
        if self.den.is_one():
            return num
        den = _format_terms(list(self.denominator.terms.items()), self.var)
        if len(self.num.coeffs()) - sum(1 for c in self.num.coeffs() if c == 0) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _spread(poly: _P, d: int) -> _P:
    coeffs = poly.coeffs()
    if len(coeffs) <= 1:
        return poly
    out = [flint.fmpq(0)] * ((len(coeffs) - 1) * d + 1)
    for i, c in enumerate(coeffs):
        out[i * d] = c
    return _P(out)


def substitute_power(a: RationalFunction, d: int, var: str = "t") -> RationalFunction:
    return a.substitute_power(d, var)


def evaluate_at(a: RationalFunction, x) -> Fraction:
    return a.evaluate_at(x)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if a.var != b.var:
        raise VariableMismatchError(f"variable mismatch: {a.var!r} vs {b.var!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _Parser:
    """Recursive-descent parser for expressions such as ``(q^2 - 1)/(q + 1)``."""

    def __init__(self, text: str, var: str | None):
        self.tokens = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.tokens.append(("num", int(m.group(1))))
            elif m.group(2):
                self.tokens.append(("var", m.group(2)))
            elif m.group(3):
                self.tokens.append(("op", m.group(3)))
        names = {v for kind, v in self.tokens if kind == "var"}
        if len(names) > 1:
            raise ValueError(f"multivariate expression: {sorted(names)}")
        if var is not None and names and names != {var}:
            raise VariableMismatchError(f"expected variable {var!r}, found {names.pop()!r}")
        self.var = var or (names.pop() if names else "q")
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op: str) -> None:
        kind, v = self.take()
        if kind != "op" or v != op:
            raise ValueError(f"expected {op!r}, got {v!r}")

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ValueError("empty expression")
        r = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"trailing input at token {self.peek()[1]!r}")
        return r

    def expr(self) -> RationalFunction:
        r = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            r = r + rhs if op == "+" else r - rhs
        return r

    def term(self) -> RationalFunction:
        r = self.unary()
        while True:
            kind, v = self.peek()
            if kind == "op" and v in "*/":
                self.take()
                rhs = self.unary()
                r = r * rhs if v == "*" else r / rhs
            elif kind in ("num", "var") or (kind == "op" and v == "("):
                r = r * self.unary()
            else:
                return r

    def unary(self) -> RationalFunction:
        kind, v = self.peek()
        if kind == "op" and v in "+-":
            self.take()
            r = self.unary()
            return -r if v == "-" else r
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() in (("op", "-"), ("op", "+")):
                sign = -1 if self.take()[1] == "-" else 1
            kind, v = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            return base ** (sign * v)
        return base

    def atom(self) -> RationalFunction:
        kind, v = self.take()
        if kind == "num":
            return RationalFunction.constant(self.var, v)
        if kind == "var":
            return RationalFunction.monomial(self.var)
        if kind == "op" and v == "(":
            r = self.expr()
            self.expect(")")
            return r
        raise ValueError(f"unexpected token {v!r}")
