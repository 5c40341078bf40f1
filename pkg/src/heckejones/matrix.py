"""Dense matrices over Q(x) with exact elimination."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .ratfunc import RationalFunction


class SingularMatrixError(ZeroDivisionError):
    pass


class ShapeError(ValueError):
    pass


def _as_rf(var: str, x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        if x.var != var:
            raise ValueError(f"entry in {x.var!r}, matrix in {var!r}")
        return x
    if isinstance(x, str):
        return RationalFunction.parse(x, var)
    return RationalFunction.constant(var, x)


class ExactMatrix:
    """Immutable ``rows x cols`` matrix whose entries share one variable."""

    __slots__ = ("var", "rows", "cols", "entries")

    def __init__(self, var: str, entries: Sequence[Sequence[RationalFunction]]):
        self.var = var
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if self.rows == 0 or self.cols == 0:
            raise ShapeError("matrices must be nonempty")
        if any(len(r) != self.cols for r in self.entries):
            raise ShapeError("ragged rows")

    @classmethod
    def from_rows(cls, var: str, rows: Iterable[Iterable]) -> ExactMatrix:
        return cls(var, [[_as_rf(var, x) for x in row] for row in rows])

    @classmethod
    def identity(cls, var: str, n: int) -> ExactMatrix:
        one, zero = RationalFunction.one(var), RationalFunction.zero(var)
        return cls(var, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, var: str, rows: int, cols: int | None = None) -> ExactMatrix:
        zero = RationalFunction.zero(var)
        return cls(var, [[zero] * (cols or rows) for _ in range(rows)])

    @classmethod
    def diag(cls, var: str, values: Sequence) -> ExactMatrix:
        zero = RationalFunction.zero(var)
        vals = [_as_rf(var, v) for v in values]
        n = len(vals)
        return cls(var, [[vals[i] if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> RationalFunction:
        i, j = ij
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def map(self, f: Callable[[RationalFunction], RationalFunction], var: str | None = None) -> ExactMatrix:
        return ExactMatrix(var or self.var, [[f(x) for x in row] for row in self.entries])

    # -- arithmetic -------------------------------------------------------

    def _check_same(self, other: ExactMatrix) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same(other)
        return ExactMatrix(
            self.var, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same(other)
        return ExactMatrix(
            self.var, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.var, [[-a for a in r] for r in self.entries])

    def scale(self, c) -> ExactMatrix:
        c = _as_rf(self.var, c)
        return ExactMatrix(self.var, [[c * a for a in r] for r in self.entries])

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        # column sparsity of the right factor; the Hecke generators have <= 2 nonzeros per column
        cols = [
            [(k, other.entries[k][j]) for k in range(other.rows) if not other.entries[k][j].is_zero()]
            for j in range(other.cols)
        ]
        zero = RationalFunction.zero(self.var)
        out = []
        for row in self.entries:
            nz = [not x.is_zero() for x in row]
            new = []
            for col in cols:
                acc = zero
                for k, b in col:
                    if nz[k]:
                        acc = acc + row[k] * b
                new.append(acc)
            out.append(new)
        return ExactMatrix(self.var, out)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.var, list(zip(*self.entries)))

    def trace(self) -> RationalFunction:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        acc = RationalFunction.zero(self.var)
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.var == other.var and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.var, self.entries))

    def is_scalar(self) -> RationalFunction | None:
        """Return ``c`` if the matrix equals ``c * I``, else ``None``."""
        if not self.is_square():
            return None
        c = self.entries[0][0]
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if i == j:
                    if x != c:
                        return None
                elif not x.is_zero():
                    return None
        return c

    def is_identity(self) -> bool:
        c = self.is_scalar()
        return c is not None and c.is_one()

    # -- elimination ------------------------------------------------------

    def _echelon(self, augment: list[list[RationalFunction]] | None = None):
        """Forward elimination; pivots chosen by lowest entry size.

        Returns (reduced rows, pivot columns, sign of the row permutation).
        """
        a = [list(r) for r in self.entries]
        aug = [list(r) for r in augment] if augment is not None else None
        pivots = []
        sign = 1
        r = 0
        for c in range(self.cols):
            cands = [i for i in range(r, self.rows) if not a[i][c].is_zero()]
            if not cands:
                continue
            p = min(cands, key=lambda i: (a[i][c].size(), i))
            if p != r:
                a[p], a[r] = a[r], a[p]
                if aug is not None:
                    aug[p], aug[r] = aug[r], aug[p]
                sign = -sign
            piv_inv = a[r][c].inverse()
            for i in range(r + 1, self.rows):
                if a[i][c].is_zero():
                    continue
                f = a[i][c] * piv_inv
                a[i] = [x if y.is_zero() else x - f * y for x, y in zip(a[i], a[r])]
                if aug is not None:
                    aug[i] = [x if y.is_zero() else x - f * y for x, y in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return a, pivots, sign, aug

    def rank(self) -> int:
        return len(self._echelon()[1])

    def determinant(self) -> RationalFunction:
        if not self.is_square():
            raise ShapeError("determinant of a non-square matrix")
        a, pivots, sign, _ = self._echelon()
        if len(pivots) < self.rows:
            return RationalFunction.zero(self.var)
        d = RationalFunction.constant(self.var, sign)
        for i in range(self.rows):
            d = d * a[i][i]
        return d

    def inverse(self) -> ExactMatrix:
        if not self.is_square():
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        ident = ExactMatrix.identity(self.var, n).entries
        a, pivots, _, aug = self._echelon([list(r) for r in ident])
        if len(pivots) < n:
            raise SingularMatrixError("matrix is singular")
        for i in range(n - 1, -1, -1):
            inv = a[i][i].inverse()
            aug[i] = [x * inv for x in aug[i]]
            for k in range(i):
                if a[k][i].is_zero():
                    continue
                f = a[k][i]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[i])]
        return ExactMatrix(self.var, aug)

    # -- specialization and text -----------------------------------------

    def substitute_power(self, d: int, var: str) -> ExactMatrix:
        return self.map(lambda x: x.substitute_power(d, var), var)

    def evaluate_at(self, x) -> list[list[Fraction]]:
        return [[e.evaluate_at(x) for e in row] for row in self.entries]

    def to_json_obj(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, var: str, text: str) -> ExactMatrix:
        return cls.from_rows(var, json.loads(text))

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.var!r}, {self.rows}x{self.cols})"


def matrix_ops(a: ExactMatrix, b: ExactMatrix | None, op: str):
    """Dispatch helper mirroring the operation table of the CLI."""
    if op == "mul":
        return a @ b
    if op == "add":
        return a + b
    if op == "inverse":
        return a.inverse()
    if op == "rank":
        return a.rank()
    if op == "trace":
        return a.trace()
    if op == "equals":
        return a == b
    if op == "is_scalar":
        return a.is_scalar()
    raise ValueError(f"unknown matrix operation {op!r}")
