"""Verification suites: each check yields a tagged, JSON-ready record."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import burau, finite, hecke, jones, symplectic
from .braids import BraidWord, full_twist, hyperelliptic_word, permutation_of, random_word
from .tableaux import YoungDiagram, partitions

SUITES = ("hecke", "jones", "sphere", "symplectic", "burau")

SPHERE_KERNEL = ((2, 2), (3, 3), (2, 2, 2))
SPHERE_NOT_KERNEL = ((2, 1), (3, 1), (2, 2, 1), (3, 2, 1))


@dataclass
class Check:
    tag: str
    subject: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {"tag": self.tag, "subject": self.subject, "ok": self.ok, "detail": self.detail}


def _diagrams(n_max: int, n_min: int = 1) -> list[YoungDiagram]:
    return [y for n in range(n_min, n_max + 1) for y in partitions(n)]


def _guard(tag: str, subject: str, fn: Callable[[], tuple[bool, dict]]) -> Check:
    """Run one check; an exception is a failure carrying its message."""
    try:
        ok, detail = fn()
    except Exception as exc:  # noqa: BLE001 - any crash is a failed check
        return Check(tag, subject, False, {"error": f"{type(exc).__name__}: {exc}"})
    return Check(tag, subject, bool(ok), detail)


def hecke_suite(n_max: int = 6, seed: int = 0, branching_words: int = 100) -> list[Check]:
    out = []
    for y in _diagrams(n_max):
        s = str(y)
        rep = hecke.build_rep(y)
        if rep.n >= 2:
            out.append(
                _guard(
                    "quadratic-relation",
                    s,
                    lambda: (all(hecke.quadratic_relation_holds(rep, i) for i in range(1, rep.n)), {}),
                )
            )
            out.append(
                _guard(
                    "braid-relations",
                    s,
                    lambda: (not hecke.braid_relations_hold(rep), {"failing": hecke.braid_relations_hold(rep)}),
                )
            )

            def twist():
                e = hecke.full_twist_scalar_check(y)
                r = hecke.r_of(y)
                one_column = len(y.rows) == y.n
                return (not one_column or r == 0) and r == hecke.r_combinatorial(y), {
                    "exponent": e,
                    "r": r,
                    "d": rep.d,
                }

            out.append(_guard("full-twist-scalar", s, twist))
            out.append(
                _guard(
                    "generator-determinant",
                    s,
                    lambda: (
                        hecke.generator_determinant(rep) == hecke.expected_generator_determinant(y),
                        {"det": str(hecke.generator_determinant(rep))},
                    ),
                )
            )
        if rep.n >= 3:
            words = hecke.random_branching_words(y.n, branching_words, seed)
            out.append(
                _guard("branching-rule", s, lambda: (hecke.branching_check(y, words), {"words": len(words)}))
            )

        def q1():
            r = hecke.q1_specialization(y)
            return r.ok, {
                "pole_free": r.pole_free,
                "involutions": r.involutions,
                "descends": r.descends,
                "sum_chi_squared": r.sum_chi_squared,
                "group_order": r.group_order,
            }

        out.append(_guard("q1-specialization", s, q1))
    return out


def jones_suite(n_max: int = 6, seed: int = 0, words: int = 20) -> list[Check]:
    out = []
    rng = random.Random(seed)
    for y in _diagrams(n_max, 3):
        s = str(y)
        rep = jones.build_jones(y, require_rectangular=False)
        out.append(
            _guard(
                "full-twist-descent",
                s,
                lambda: (jones.evaluate_mcg(rep, full_twist(rep.n)).is_identity(), {}),
            )
        )
        sample = [random_word(rep.n, rng.randint(0, 8), rng) for _ in range(words)]

        def twisted():
            bad = [str(w) for w in sample if jones.evaluate_mcg(rep, w) != jones.twisted_hecke_image(rep, w)]
            return not bad, {"words": len(sample), "mismatches": bad}

        out.append(_guard("abelian-twist-consistency", s, twisted))

        def laurent():
            for w in sample:
                rep.character(w)
            return True, {"words": len(sample)}

        out.append(_guard("laurent-characters", s, laurent))
    return out


def sphere_suite(n_max: int = 6, seed: int = 0) -> list[Check]:
    out = []
    for rows in SPHERE_KERNEL + SPHERE_NOT_KERNEL:
        y = YoungDiagram(rows)
        if y.n > n_max:
            continue
        expect = rows in SPHERE_KERNEL

        def sphere():
            r = jones.descent_report(y)
            return r.sphere_ok == expect and r.twist_ok, {
                "sphere_relator_identity": r.sphere_ok,
                "full_twist_identity": r.twist_ok,
                "rectangular": y.is_rectangular(),
            }

        out.append(_guard("rectangular-sphere-descent", str(y), sphere))
    if n_max >= 6:
        rep = jones.build_jones(YoungDiagram((2, 2, 2)))

        def iota():
            w = hyperelliptic_word()
            img = jones.evaluate_mcg(rep, w).is_identity()
            return img and permutation_of(w).is_identity(), {"word": str(w), "image_identity": img}

        out.append(_guard("hyperelliptic-jones", "[2,2,2]", iota))
    return out


def _random_t_words(count: int, rng: random.Random, max_len: int = 12) -> list[BraidWord]:
    return [random_word(6, rng.randint(0, max_len), rng) for _ in range(count)]


def symplectic_suite(seed: int = 0, words: int = 60, p: int = 3) -> list[Check]:
    out = []
    rng = random.Random(seed)
    gens = symplectic.rho0_generators()
    i4 = symplectic.I4

    def generators():
        braid = all(
            np.array_equal(gens[i] @ gens[i + 1] @ gens[i], gens[i + 1] @ gens[i] @ gens[i + 1]) for i in range(4)
        )
        commute = all(np.array_equal(gens[i] @ gens[j], gens[j] @ gens[i]) for i in range(5) for j in range(i + 2, 5))
        sympl = all(symplectic.is_symplectic(g) for g in gens)
        return braid and commute and sympl, {"braid": braid, "commute": commute, "symplectic": sympl}

    out.append(_guard("chain-transvections", "rho0", generators))

    def hyperelliptic():
        chain = BraidWord(6, (1, 2, 3, 4, 5))
        sixth = symplectic.rho0(chain**6)
        iota = symplectic.rho0(hyperelliptic_word())
        ok = np.array_equal(sixth, i4) and np.array_equal(iota, -i4)
        return ok, {"chain_sixth_identity": np.array_equal(sixth, i4), "hyperelliptic_minus_identity": np.array_equal(iota, -i4)}

    out.append(_guard("hyperelliptic-symplectic", "rho0", hyperelliptic))

    sample = _random_t_words(words, rng)

    def functorial():
        pairs = list(zip(sample[::2], sample[1::2]))
        ok = all(
            np.array_equal(
                symplectic.lambda_of(symplectic.rho0(a * b)),
                symplectic.lambda_of(symplectic.rho0(a)) @ symplectic.lambda_of(symplectic.rho0(b)),
            )
            for a, b in pairs
        )
        minus = np.array_equal(symplectic.lambda_of(-i4), symplectic.I5)
        return ok and minus, {"pairs": len(pairs), "lambda_minus_identity": minus}

    out.append(_guard("lambda-functorial", "lambda", functorial))

    def t_minus_one():
        rows = symplectic.t_minus1_rows(sample + [BraidWord(6, ()), BraidWord(6, (1,)), hyperelliptic_word()])
        bad = [str(r.word) for r in rows if not r.ok]
        return not bad, {"words": len(rows), "sgn": "per-word (-1)^length", "mismatches": bad}

    out.append(_guard("t-minus-one-character", "[2,2,2]", t_minus_one))

    def torelli():
        chain = BraidWord(6, (1, 2))
        candidates = [chain**6, hyperelliptic_word() ** 2, BraidWord(6, (1, 2, 3, 4, 5)) ** 6]
        ok = all(
            np.array_equal(symplectic.lambda_of(symplectic.rho0(w)), symplectic.I5)
            for w in candidates + sample
            if symplectic.is_torelli(w)
        )
        return ok and all(symplectic.is_torelli(w) for w in candidates), {"words": len(candidates) + len(sample)}

    out.append(_guard("torelli-lambda-trivial", "lambda", torelli))

    def cor_b():
        words = [hyperelliptic_word(), BraidWord(6, (1, 2, 3, 4, 5)) ** 6, BraidWord(6, (1, 2, 3, 4)) ** 5]
        return all(symplectic.cor_b_check(w) for w in words), {"words": [str(w) for w in words]}

    out.append(_guard("plus-minus-identity", "rho0", cor_b))

    def escape():
        samples = [symplectic.rho0(w) for w in _random_t_words(words, rng, 10)]
        samples += [-i4, i4 + np.array([[0, 3, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], dtype=object)]
        ok, wit = symplectic.intersection_escape_check(samples)
        return ok, {"samples": len(samples), "witnesses": [w for w in wit if w is not None][-2:]}

    out.append(_guard("congruence-escape", "k_p", escape))

    def finite_p():
        table = finite.bfs_enumerate(p)
        kern = finite.kernel_of_lambda_p(table)
        mats = table.matrices(kern)
        pm = sorted(int(m[0, 0]) for m in mats)
        plus_minus = len(kern) == 2 and all(np.array_equal(m, m[0, 0] * np.eye(4, dtype=np.int64)) for m in mats)
        ok = len(table) == finite.sp_order(p) and plus_minus and pm == [1, p - 1]
        return ok, {"p": p, "order": len(table), "kernel_size": int(len(kern))}

    out.append(_guard("finite-lambda-kernel", f"p={p}", finite_p))
    return out


def burau_suite(seed: int = 0, words: int = 100) -> list[Check]:
    sample = burau.calibration_basket() + burau.random_b4_words(words, seed)
    ident = burau.choose_identification()
    fbasket = burau.factorization_basket() + burau.random_b4_words(words, seed + 1)
    out = [
        _guard(
            "burau-sign-equivalence",
            "[2,1,1]",
            lambda: (burau.burau_equivalence_check(sample, ident), {"identification": ident, "words": len(sample)}),
        ),
        _guard(
            "burau-kernel-biconditional",
            "[2,1,1]",
            lambda: (burau.kernel_biconditional_check(sample, ident), {"words": len(sample)}),
        ),
    ]

    def factor():
        r = burau.factorization_report(fbasket)
        return r.ok, {
            "generators_equal": r.generators_equal,
            "characters_match": r.characters_match,
            "matrices_match": r.matrices_match,
            "words": len(fbasket),
        }

    out.append(_guard("b4-to-b3-factorization", "[2,2]", factor))
    return out


def run_suite(name: str, n_max: int = 6, seed: int = 0) -> list[Check]:
    if name == "hecke":
        return hecke_suite(n_max, seed)
    if name == "jones":
        return jones_suite(n_max, seed)
    if name == "sphere":
        return sphere_suite(n_max, seed)
    if name == "symplectic":
        return symplectic_suite(seed)
    if name == "burau":
        return burau_suite(seed)
    raise ValueError(f"unknown suite {name!r}")
