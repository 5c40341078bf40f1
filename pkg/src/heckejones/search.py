"""Kernel-element search for Jones representations.

Words are screened by evaluating the generator images at a random rational
point t0 and reducing modulo a prime below 2**28; a word whose screened image is
not the identity is certainly not in the kernel.  Surviving words can then be
confirmed symbolically over Q(t).
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .braids import (
    BraidWord,
    Permutation,
    alphabet,
    exponent_sum,
    is_trivial_braid,
    letter_index,
    permutation_of,
    sort_key,
)
from .jones import JonesRep, build_jones, evaluate_mcg
from .ratfunc import PoleError
from .tableaux import YoungDiagram

MODULUS = 268435399  # largest prime below 2**28
THREADS_ENV = "HECKEJONES_THREADS"


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _reduce(x: Fraction, modulus: int) -> int:
    den = x.denominator % modulus
    if den == 0:
        raise PoleError(f"denominator of {x} vanishes mod {modulus}")
    return x.numerator * pow(den, -1, modulus) % modulus


def specialize_mod(rep: JonesRep, t0: Fraction, modulus: int = MODULUS) -> np.ndarray:
    """Letter images at t = t0 reduced mod ``modulus``, in alphabet order (s1, -s1, s2, ...)."""
    if t0 == 0:
        raise PoleError("t0 = 0 is excluded: generator images carry negative powers of t")
    mats = []
    for x in alphabet(rep.n):
        vals = rep.image(x).evaluate_at(t0)
        mats.append([[_reduce(v, modulus) for v in row] for row in vals])
    return np.asarray(mats, dtype=np.int64)


def draw_t0(rng: random.Random) -> Fraction:
    while True:
        t0 = Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 10**6))
        if t0 not in (0, 1, -1):
            return t0


@dataclass(frozen=True)
class KernelHit:
    word: BraidWord
    permutation: Permutation
    exponent_sum: int
    trivial_braid: bool
    confirmed: bool | None

    def to_json_obj(self) -> dict:
        return {
            "word": str(self.word),
            "length": len(self.word),
            "permutation": str(self.permutation),
            "cycle_type": list(self.permutation.cycle_type()),
            "exponent_sum": self.exponent_sum,
            "screen": "identity",
            "trivial_braid": self.trivial_braid,
            "confirmed": self.confirmed,
        }


@dataclass
class KernelSearchResult:
    diagram: YoungDiagram
    max_len: int
    seed: int
    t0: Fraction
    modulus: int
    words_screened: int
    hits: list[KernelHit] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "diagram": str(self.diagram),
            "max_len": self.max_len,
            "seed": self.seed,
            "t0": str(self.t0),
            "modulus": self.modulus,
            "words_screened": self.words_screened,
            "hit_count": len(self.hits),
            "nontrivial_hit_count": sum(1 for h in self.hits if not h.trivial_braid),
            "hits": [h.to_json_obj() for h in self.hits],
        }


def count_reduced_words(n_letters: int, max_len: int) -> int:
    return sum(n_letters * (n_letters - 1) ** (k - 1) for k in range(1, max_len + 1))


def screen_words(
    gens: np.ndarray, max_len: int, modulus: int, threads: int = 1, backend: str | None = None
) -> list[tuple[int, ...]]:
    """All freely reduced letter-index words of length 1..max_len with identity image.

    Work is sharded by first letter; results are merged in (length, lex) order.
    """
    search = _kernels.get_backend(backend)["search_identity"]
    n_letters = gens.shape[0]
    inverse = np.arange(n_letters) ^ 1  # letters come in (s_i, s_i^-1) pairs
    shards = [np.array([a], dtype=np.int64) for a in range(n_letters)]

    def run(prefix):
        return search(gens, inverse, prefix, max_len, modulus)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, shards))
    else:
        parts = [run(s) for s in shards]
    hits = [w for part in parts for w in part]
    hits.sort(key=lambda w: (len(w), w))
    return hits


def _letters_from_indices(idx: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((i // 2 + 1) * (-1 if i % 2 else 1) for i in idx)


def kernel_search(
    y: YoungDiagram,
    max_len: int,
    seed: int = 0,
    confirm: bool = True,
    threads: int | None = None,
    backend: str | None = None,
    modulus: int = MODULUS,
) -> KernelSearchResult:
    if modulus >= _kernels.MAX_MODULUS:
        raise ValueError("modulus must stay below 2**28")
    rep = build_jones(y)
    rng = random.Random(seed)
    while True:
        t0 = draw_t0(rng)
        try:
            gens = specialize_mod(rep, t0, modulus)
            break
        except PoleError:
            continue
    raw = screen_words(gens, max_len, modulus, threads or default_threads(), backend)
    hits = []
    for idx in raw:
        w = BraidWord(rep.n, _letters_from_indices(idx))
        ok = evaluate_mcg(rep, w).is_identity() if confirm else None
        hits.append(KernelHit(w, permutation_of(w), exponent_sum(w), is_trivial_braid(w), ok))
    hits.sort(key=lambda h: sort_key(h.word))
    return KernelSearchResult(
        y, max_len, seed, t0, modulus, count_reduced_words(2 * (rep.n - 1), max_len), hits
    )


def screen_value(rep: JonesRep, w: BraidWord, t0: Fraction, modulus: int = MODULUS) -> np.ndarray:
    """Image of ``w`` at t0 mod ``modulus`` (used to cross-check the kernels)."""
    gens = specialize_mod(rep, t0, modulus)
    m = np.eye(rep.d, dtype=np.int64)
    for x in w.letters:
        m = (m @ gens[letter_index(x)]) % modulus
    return m
