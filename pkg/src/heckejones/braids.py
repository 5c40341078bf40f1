"""Braid words, the permutation and abelianization maps, and named relator words.

A letter ``i > 0`` stands for the half twist s_i and ``-i`` for its inverse.  The
same words double as words in the genus-2 Dehn twists t_1..t_5 (t_i <-> s_i on
six strands).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence


class StrandMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; ``images[k-1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for k in range(1, self.n + 1):
            if k in seen:
                continue
            cyc = [k]
            seen.add(k)
            j = self(k)
            while j != k:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        fixed = self.n - sum(lengths)
        return tuple(lengths) + (1,) * fixed

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 2:
            raise ValueError("braid words need at least 2 strands")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        """Parse ``"s1 s2 -s3"``; ``t`` is accepted as a synonym for ``s``."""
        letters = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"(-?)[st](\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad braid letter {tok!r}")
            i = int(m.group(2)) * (-1 if m.group(1) else 1)
            power = int(m.group(3)) if m.group(3) else 1
            letters.extend([i if power > 0 else -i] * abs(power))
        return cls(strands, tuple(letters))

    def __str__(self) -> str:
        return " ".join(f"-s{-x}" if x < 0 else f"s{x}" for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else invert(self)
        return BraidWord(self.strands, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return invert(self)

    def reduced(self) -> BraidWord:
        return free_reduce(self)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatchError(f"cannot compose words on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-x for x in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return BraidWord(w.strands, tuple(stack))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def permutation_of(w: BraidWord) -> Permutation:
    """Image in the symmetric group: each letter swaps positions i and i + 1."""
    pos = list(range(1, w.strands + 1))  # pos[k] = puncture currently at slot k+1
    for x in w.letters:
        i = abs(x) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    images = [0] * w.strands
    for slot, p in enumerate(pos, 1):
        images[p - 1] = slot
    return Permutation(tuple(images))


def full_twist(n: int) -> BraidWord:
    return BraidWord(n, tuple(range(1, n)) * n)


def sphere_relator(n: int) -> BraidWord:
    return BraidWord(n, tuple(range(1, n)) + tuple(range(n - 1, 0, -1)))


def hyperelliptic_word() -> BraidWord:
    """t1 t2 t3 t4 t5 t5 t4 t3 t2 t1, the genus-2 hyperelliptic involution."""
    return sphere_relator(6)


def include(w: BraidWord, strands: int | None = None) -> BraidWord:
    """Inclusion of B_{n-1} into B_n on the first n-1 strands."""
    return BraidWord(strands or w.strands + 1, w.letters)


def alphabet(n: int) -> list[int]:
    """Letters in enumeration order: s1, -s1, s2, -s2, ..."""
    out = []
    for i in range(1, n):
        out += [i, -i]
    return out


def letter_index(x: int) -> int:
    return 2 * (abs(x) - 1) + (1 if x < 0 else 0)


def sort_key(w: BraidWord) -> tuple:
    return (len(w.letters), tuple(letter_index(x) for x in w.letters))


def enumerate_words(
    n: int,
    max_len: int,
    *,
    exponent_sum_zero: bool = False,
    pure: bool = False,
    min_len: int = 1,
) -> Iterator[BraidWord]:
    """Freely reduced words of length ``min_len..max_len`` in (length, lex) order."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    alpha = alphabet(n)

    def rec(prefix: list[int], length: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for x in alpha:
            if prefix and prefix[-1] == -x:
                continue
            prefix.append(x)
            yield from rec(prefix, length)
            prefix.pop()

    for length in range(max(min_len, 1), max_len + 1):
        for letters in rec([], length):
            w = BraidWord(n, letters)
            if exponent_sum_zero and exponent_sum(w) != 0:
                continue
            if pure and not permutation_of(w).is_identity():
                continue
            yield w


def random_word(n: int, length: int, rng: random.Random, letters: Sequence[int] | None = None) -> BraidWord:
    """Uniform freely reduced word of the given length."""
    alpha = list(letters) if letters is not None else alphabet(n)
    out: list[int] = []
    while len(out) < length:
        x = rng.choice(alpha)
        if out and out[-1] == -x:
            continue
        out.append(x)
    return BraidWord(n, tuple(out))


def apply_braid_relation(w: BraidWord, rng: random.Random) -> BraidWord:
    """Insert one braid relator ``s_i s_{i+1} s_i (s_{i+1} s_i s_{i+1})^-1`` or commutator at a random spot."""
    n = w.strands
    pos = rng.randint(0, len(w.letters))
    i = rng.randint(1, n - 1)
    choices = []
    if i + 1 <= n - 1:
        choices.append((i, i + 1, i, -(i + 1), -i, -(i + 1)))
    far = [j for j in range(1, n) if abs(j - i) >= 2]
    if far:
        j = rng.choice(far)
        choices.append((i, j, -i, -j))
    if not choices:
        return w
    rel = rng.choice(choices)
    return BraidWord(n, w.letters[:pos] + rel + w.letters[pos:])


def substitute(w: BraidWord, mapping: Callable[[int], Sequence[int]], strands: int) -> BraidWord:
    """Letterwise substitution: generator ``i`` goes to the word ``mapping(i)``."""
    out: list[int] = []
    for x in w.letters:
        img = list(mapping(abs(x)))
        out += img if x > 0 else [-y for y in reversed(img)]
    return BraidWord(strands, tuple(out))


def _free_reduce_letters(word: list[int]) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def artin_action(w: BraidWord) -> list[tuple[int, ...]]:
    """Images of the free generators x_1..x_n under Artin's action of ``w``.

    s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.  The action is faithful, so
    ``w`` is trivial in B_n exactly when every x_j is fixed.
    """
    img: list[list[int]] = [[j] for j in range(1, w.strands + 1)]

    def inv(u: list[int]) -> list[int]:
        return [-x for x in reversed(u)]

    for x in w.letters:
        i = abs(x) - 1
        a, b = img[i], img[i + 1]
        if x > 0:
            img[i] = _free_reduce_letters(a + b + inv(a))
            img[i + 1] = a
        else:
            img[i] = b
            img[i + 1] = _free_reduce_letters(inv(b) + a + b)
    return [tuple(u) for u in img]


def is_trivial_braid(w: BraidWord) -> bool:
    return all(u == (j,) for j, u in enumerate(artin_action(w), 1))
