"""Brute-force certificates for Sp(4, Z/p) and PSp(4, Z/p) at small p.

Matrices mod p are packed into single int64 codes (base-p digits, row-major),
so group tables are sorted code arrays and membership is a binary search.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .braids import BraidWord
from .symplectic import J, LIFT, PROJ, _PAIRS, rho0_generators

DEFAULT_BUDGET = 2 * 1024**3
_BYTES_PER_ELEMENT = 96  # codes, parents, letters, sort scratch and one frontier slice


class ResourceBudgetError(MemoryError):
    pass


def sp_order(p: int) -> int:
    return p**4 * (p**2 - 1) * (p**4 - 1)


def _check_prime(p: int) -> None:
    if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if p**16 >= 2**63:
        raise ValueError(f"p = {p} too large for int64 matrix codes")


def mod_p(x, p: int) -> np.ndarray:
    return (np.asarray(x, dtype=object) % p).astype(np.int64)


def is_symplectic_mod(x: np.ndarray, p: int) -> bool:
    jp = mod_p(J, p)
    return np.array_equal((x.T @ jp @ x) % p, jp)


def generators_mod(p: int) -> np.ndarray:
    """Chain transvections and their inverses mod p, in letter order t1, -t1, t2, ..."""
    gens = []
    for g in rho0_generators():
        gens.append(mod_p(g, p))
        gens.append(mod_p(2 * np.eye(4, dtype=np.int64) - g.astype(np.int64), p))
    return np.asarray(gens, dtype=np.int64)


def _letter_of(gen_index: int) -> int:
    return (gen_index // 2 + 1) * (-1 if gen_index % 2 else 1)


@dataclass
class GroupTable:
    """Elements in BFS discovery order plus a sorted code index."""

    p: int
    generators: np.ndarray
    codes: np.ndarray  # discovery order
    parent: np.ndarray  # discovery index of the parent, -1 for the identity
    letter: np.ndarray  # generator index applied to the parent
    sorted_codes: np.ndarray = field(init=False)
    order_index: np.ndarray = field(init=False)

    def __post_init__(self):
        self.order_index = np.argsort(self.codes, kind="stable")
        self.sorted_codes = self.codes[self.order_index]

    def __len__(self) -> int:
        return int(self.codes.shape[0])

    def lookup(self, codes: np.ndarray) -> np.ndarray:
        """Discovery indices of the given codes (-1 where absent)."""
        codes = np.asarray(codes, dtype=np.int64)
        pos = np.searchsorted(self.sorted_codes, codes)
        pos = np.minimum(pos, len(self) - 1)
        found = self.sorted_codes[pos] == codes
        return np.where(found, self.order_index[pos], -1)

    def contains(self, x: np.ndarray) -> bool:
        return bool(self.lookup(_kernels.encode(x[None] % self.p, self.p))[0] >= 0)

    def matrices(self, idx=None) -> np.ndarray:
        codes = self.codes if idx is None else self.codes[np.asarray(idx)]
        return _kernels.decode(codes, self.p, 4)

    def word(self, idx: int) -> BraidWord:
        """A shortest word in t_i^{+-1} reaching element ``idx``."""
        letters = []
        while self.parent[idx] >= 0:
            letters.append(_letter_of(int(self.letter[idx])))
            idx = int(self.parent[idx])
        return BraidWord(6, tuple(reversed(letters)))


def _products(frontier: np.ndarray, gens: np.ndarray, p: int, threads: int, backend: str | None):
    """codes of frontier[i] @ gens[g] for all (i, g), flattened i-major."""
    kern = _kernels.get_backend(backend)
    chunk = 1 << 15

    def run(s):
        part = frontier[s : s + chunk]
        out = np.empty((part.shape[0], gens.shape[0]), dtype=np.int64)
        for g in range(gens.shape[0]):
            out[:, g] = kern["encode"](kern["matmul_mod"](part, gens[g], p), p)
        return out

    starts = range(0, frontier.shape[0], chunk)
    if threads > 1 and frontier.shape[0] > chunk:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, starts))
    else:
        parts = [run(s) for s in starts]
    return np.concatenate(parts).reshape(-1)


def bfs_enumerate(
    p: int,
    generators: np.ndarray | None = None,
    *,
    memory_budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    backend: str | None = None,
) -> GroupTable:
    """Breadth-first closure of the identity under right multiplication by the generators.

    Level sets are deduplicated at a barrier after every shard has finished, so
    the table (and each element's shortest word) does not depend on ``threads``.
    """
    _check_prime(p)
    gens = generators_mod(p) if generators is None else np.asarray(generators, dtype=np.int64) % p
    if sp_order(p) * _BYTES_PER_ELEMENT > memory_budget:
        raise ResourceBudgetError(
            f"Sp(4,{p}) has {sp_order(p)} elements; estimated memory exceeds {memory_budget} bytes"
        )
    k = gens.shape[0]
    ident = np.eye(4, dtype=np.int64)[None]
    codes = [_kernels.encode(ident, p)]
    parents = [np.array([-1], dtype=np.int64)]
    letters = [np.array([-1], dtype=np.int64)]
    seen = codes[0].copy()
    frontier, start = ident, 0
    while frontier.shape[0]:
        cand = _products(frontier, gens, p, threads, backend)
        uniq, first = np.unique(cand, return_index=True)
        pos = np.minimum(np.searchsorted(seen, uniq), seen.shape[0] - 1)
        fresh = seen[pos] != uniq
        uniq, first = uniq[fresh], first[fresh]
        # keep discovery order deterministic: by (parent, letter)
        order = np.argsort(first, kind="stable")
        uniq, first = uniq[order], first[order]
        codes.append(uniq)
        parents.append(start + first // k)
        letters.append(first % k)
        start += frontier.shape[0]
        seen = np.union1d(seen, uniq)
        frontier = _kernels.decode(uniq, p, 4)
    return GroupTable(p, gens, np.concatenate(codes), np.concatenate(parents), np.concatenate(letters))


# -- lambda mod p -------------------------------------------------------------

_ROW_I = np.array([i for i, _ in _PAIRS])
_ROW_J = np.array([j for _, j in _PAIRS])
_PROJ = PROJ.astype(np.int64)
_LIFT = LIFT.astype(np.int64)


def lambda_mod_p(x: np.ndarray, p: int) -> np.ndarray:
    """Batched lambda on the 5-dim quotient basis, mod p; ``x`` has shape (N, 4, 4)."""
    i, j = _ROW_I[:, None], _ROW_J[:, None]
    k, l = _ROW_I[None, :], _ROW_J[None, :]
    e2 = x[:, i, k] * x[:, j, l] - x[:, i, l] * x[:, j, k]
    return np.matmul(np.matmul(_PROJ, e2 % p), _LIFT) % p


def kernel_of_lambda_p(table: GroupTable, chunk: int = 1 << 16) -> np.ndarray:
    """Discovery indices of the elements X with lambda_p(X) = I."""
    out = []
    eye5 = np.eye(5, dtype=np.int64)
    for s in range(0, len(table), chunk):
        mats = table.matrices(np.arange(s, min(s + chunk, len(table))))
        hit = np.all(lambda_mod_p(mats, table.p) == eye5, axis=(1, 2))
        out.append(np.nonzero(hit)[0] + s)
    return np.concatenate(out)


# -- PSp ------------------------------------------------------------------------


def _canonical(mats: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Codes and matrices of the representative of +-X with the smaller code."""
    neg = (-mats) % p
    c1 = _kernels.encode(mats, p)
    c2 = _kernels.encode(neg, p)
    pick = c2 < c1
    reps = np.where(pick[:, None, None], neg, mats)
    return np.where(pick, c2, c1), reps


@dataclass
class PSpTable:
    p: int
    codes: np.ndarray  # sorted canonical codes

    def __len__(self) -> int:
        return int(self.codes.shape[0])

    def matrices(self) -> np.ndarray:
        return _kernels.decode(self.codes, self.p, 4)

    def index(self, mats: np.ndarray) -> np.ndarray:
        codes, _ = _canonical(mats % self.p, self.p)
        pos = np.searchsorted(self.codes, codes)
        if np.any(pos >= len(self)) or np.any(self.codes[np.minimum(pos, len(self) - 1)] != codes):
            raise ValueError("element outside PSp table")
        return pos


def psp_table(table: GroupTable) -> PSpTable:
    codes, _ = _canonical(table.matrices(), table.p)
    return PSpTable(table.p, np.unique(codes))


def _inverse_mod(x: np.ndarray, p: int) -> np.ndarray:
    """Symplectic inverse: X^-1 = J^-1 X^T J."""
    jp = mod_p(J, p)
    jinv = (-jp) % p
    return (jinv @ x.T @ jp) % p


def psp_center(psp: PSpTable, gens: np.ndarray) -> np.ndarray:
    """Indices of PSp elements commuting (up to sign) with every generator."""
    mats = psp.matrices()
    p = psp.p
    ok = np.ones(len(psp), dtype=bool)
    for g in gens:
        left = np.matmul(mats, g) % p
        right = np.matmul(g, mats) % p
        ok &= np.all(left == right, axis=(1, 2)) | np.all(left == (-right) % p, axis=(1, 2))
    return np.nonzero(ok)[0]


def conjugacy_classes(psp: PSpTable, gens: np.ndarray) -> list[np.ndarray]:
    """Orbits of conjugation by the generators, as sorted index arrays ordered by smallest member."""
    mats = psp.matrices()
    p = psp.p
    n = len(psp)
    rows, cols = [], []
    src = np.arange(n)
    for g in gens:
        conj = np.matmul(np.matmul(g, mats) % p, _inverse_mod(g, p)) % p
        rows.append(src)
        cols.append(psp.index(conj))
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    graph = coo_matrix((np.ones(rows.shape[0], dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    classes: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        classes.setdefault(int(lab), []).append(i)
    out = [np.asarray(v) for v in classes.values()]
    out.sort(key=lambda c: int(c[0]))
    return out


def subgroup_closure(psp: PSpTable, gens: np.ndarray) -> np.ndarray:
    """Sorted PSp indices of the subgroup generated by ``gens`` (a finite group, so positive words suffice)."""
    p = psp.p
    ident = np.eye(4, dtype=np.int64)[None]
    seen = psp.index(ident)
    frontier = ident
    while frontier.shape[0]:
        prods = np.matmul(frontier[:, None], gens[None]) % p
        idx = np.unique(psp.index(prods.reshape(-1, 4, 4)))
        fresh = idx[~np.isin(idx, seen, assume_unique=True)]
        seen = np.union1d(seen, fresh)
        frontier = _kernels.decode(psp.codes[fresh], p, 4)
    return seen


def normal_closure_size(psp: PSpTable, cls: np.ndarray) -> int:
    """Order of the subgroup generated by a whole conjugacy class (= its normal closure)."""
    mats = psp.matrices()
    chosen = [int(cls[0])]
    while True:
        h = subgroup_closure(psp, mats[chosen])
        missing = cls[~np.isin(cls, h)]
        if missing.size == 0:
            return int(h.shape[0])
        chosen.append(int(missing[0]))


@dataclass
class PSpReport:
    p: int
    sp_order: int
    psp_order: int
    center_size: int
    class_sizes: list[int]
    normal_closure_sizes: list[int]

    @property
    def center_trivial(self) -> bool:
        return self.center_size == 1

    @property
    def simple(self) -> bool:
        return all(s == self.psp_order for s in self.normal_closure_sizes)


def psp_checks(table: GroupTable, *, simplicity: bool = True) -> PSpReport:
    if table.p < 3:
        raise ValueError("PSp checks need p >= 3")
    psp = psp_table(table)
    gens = table.generators[::2]
    center = psp_center(psp, gens)
    classes = conjugacy_classes(psp, gens)
    ident = int(psp.index(np.eye(4, dtype=np.int64)[None])[0])
    closures = []
    if simplicity:
        closures = [normal_closure_size(psp, c) for c in classes if not (c.size == 1 and c[0] == ident)]
    return PSpReport(
        table.p, len(table), len(psp), int(center.size), [int(c.size) for c in classes], closures
    )
