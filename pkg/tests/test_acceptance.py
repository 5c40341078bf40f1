"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""

import io
import random
import resource
import time
from contextlib import redirect_stdout

import numpy as np
import pytest

from heckejones import burau, finite, hecke, jones, symplectic
from heckejones.braids import BraidWord, permutation_of, random_word, sphere_relator
from heckejones.cli import main
from heckejones.search import kernel_search
from heckejones.tableaux import YoungDiagram, partitions

ALL6 = [y for n in range(1, 7) for y in partitions(n)]


@pytest.fixture
def report(capsys):
    def emit(criterion: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, detail

    return emit


def test_c01_relations(report):
    t0 = time.perf_counter()
    bad = []
    for y in ALL6:
        rep = hecke.build_rep(y)
        if not all(hecke.quadratic_relation_holds(rep, i) for i in range(1, rep.n)):
            bad.append((str(y), "quadratic"))
        if hecke.braid_relations_hold(rep):
            bad.append((str(y), "braid"))
    dt = time.perf_counter() - t0
    report(
        "C1 relations n<=6",
        not bad and dt < 60,
        f"{len(ALL6)} diagrams, failures={bad}, {dt:.1f}s (target < 60s)",
    )


def test_c02_full_twist_scalar(report):
    exps, bad = {}, []
    for y in ALL6[1:]:
        try:
            e = hecke.full_twist_scalar_check(y)
        except AssertionError as exc:
            bad.append(str(exc))
            continue
        exps[y.rows] = e
        # determinant cross-check: det(pi(twist)) = q^(e d) = det(G)^(n(n-1))
        rep = hecke.build_rep(y)
        det = hecke.generator_determinant(rep) ** (y.n * (y.n - 1))
        if det != hecke.expected_generator_determinant(y) ** (y.n * (y.n - 1)) or det.to_laurent().terms != {
            e * rep.d: (-1) ** ((rep.d - hecke.r_of(y)) * y.n * (y.n - 1))
        }:
            bad.append(f"determinant mismatch for {y}")
    columns_zero = all(hecke.r_of(YoungDiagram((1,) * n)) == 0 for n in range(2, 7))
    spots = exps[(2, 1)] == 3 and exps[(2, 2, 2)] == 12 and exps[(3, 3)] == 18
    report(
        "C2 full-twist scalar",
        not bad and columns_zero and spots,
        f"{len(exps)} diagrams scalar, r([1^n])=0: {columns_zero}, "
        f"e[2,1]={exps[(2, 1)]} e[2,2,2]={exps[(2, 2, 2)]} e[3,3]={exps[(3, 3)]}, failures={bad}",
    )


def test_c03_branching(report):
    bad = []
    count = 0
    for y in ALL6:
        if y.n < 3:
            continue
        words = hecke.random_branching_words(y.n, 100, seed=100 * y.n + len(y.rows))
        count += 1
        if not hecke.branching_check(y, words):
            bad.append(str(y))
    report("C3 branching", not bad, f"{count} diagrams x 100 random words, failures={bad}")


def test_c04_q1_specialization(report):
    bad = []
    for y in (y for n in range(1, 6) for y in partitions(n)):
        r = hecke.q1_specialization(y)
        if not (r.ok and r.sum_chi_squared == r.group_order):
            bad.append((str(y), r))
    report("C4 q=1 specialization", not bad, f"all diagrams n<=5 by full enumeration of S_n, failures={bad}")


def test_c05_descent(report):
    t0 = time.perf_counter()
    got = {}
    for rows in [(2, 2), (3, 3), (2, 2, 2), (2, 1), (3, 1), (2, 2, 1), (3, 2, 1)]:
        r = jones.descent_report(YoungDiagram(rows))
        got[rows] = (r.sphere_ok, r.twist_ok)
    ok = all(got[r] == (True, True) for r in [(2, 2), (3, 3), (2, 2, 2)]) and all(
        got[r] == (False, True) for r in [(2, 1), (3, 1), (2, 2, 1), (3, 2, 1)]
    )
    report("C5 descent", ok, f"(sphere=I, twist=I) per diagram {got}, {time.perf_counter() - t0:.1f}s")


def test_c06_n4_exception(report):
    res4 = kernel_search(YoungDiagram((2, 2)), 4, seed=0)
    hit = next((h for h in res4.hits if str(h.word) == "s1 -s3"), None)
    ok4 = hit is not None and hit.confirmed and str(hit.permutation) == "(1 2)(3 4)"
    ok4 &= any(str(h.word) == "-s1 s3" for h in res4.hits)
    nontriv = {}
    for rows in [(3, 2), (2, 2, 2), (3, 3)]:
        y = YoungDiagram(rows)
        if not y.is_rectangular():
            continue
        res = kernel_search(y, 6, seed=0)
        nontriv[str(y)] = sum(1 for h in res.hits if not h.permutation.is_identity())
    ok = ok4 and all(v == 0 for v in nontriv.values())
    report(
        "C6 n=4 exception",
        ok,
        f"[2,2] len<=4: s1 -s3 found={hit is not None}, nu={hit.permutation if hit else None}; "
        f"hits with nontrivial nu for n>=5 (len<=6): {nontriv}",
    )


def test_c07_hyperelliptic(report):
    chain = BraidWord(6, (1, 2, 3, 4, 5))
    cube = symplectic.rho0(chain**3)
    sixth = symplectic.rho0(chain**6)
    cube_ok = np.array_equal(cube, -symplectic.I4)
    sixth_ok = np.array_equal(sixth, symplectic.I4)
    rep = jones.build_jones(YoungDiagram((2, 2, 2)))
    sigma_cube = jones.evaluate_mcg(rep, chain**3).is_identity()
    report(
        "C7 hyperelliptic identities",
        cube_ok and sixth_ok and sigma_cube,
        f"(T1..T5)^3=-I: {cube_ok} (got {cube.tolist()}); (T1..T5)^6=I: {sixth_ok}; "
        f"pi[2^3]((s1..s5)^3)=I: {sigma_cube} (nu={permutation_of(chain**3)})",
    )


def test_c07b_hyperelliptic_palindrome(report):
    # the involution as the palindromic word t1..t5 t5..t1, which does satisfy both identities
    iota = sphere_relator(6)
    minus = np.array_equal(symplectic.rho0(iota), -symplectic.I4)
    trivial = jones.evaluate_mcg(jones.build_jones(YoungDiagram((2, 2, 2))), iota).is_identity()
    report("C7b hyperelliptic palindrome", minus and trivial, f"rho0(iota)=-I: {minus}; pi[2^3](iota)=I: {trivial}")


def test_c08_t_minus_one(report):
    rng = random.Random(8)
    words = [BraidWord(6, ()), BraidWord(6, (1,)), BraidWord(6, (1, 2, 3, 4, 5)) ** 3, sphere_relator(6)]
    words += [random_word(6, rng.randint(1, 14), rng) for _ in range(56)]
    rows = symplectic.t_minus1_rows(words)  # characters raise if not Laurent
    bad = [str(r.word) for r in rows if not r.ok]
    report(
        "C8 t=-1 character identity",
        not bad and len(rows) >= 50,
        f"{len(rows)} words, sgn per word = (-1)^length, mismatches={bad}",
    )


def test_c09_appendix_certificates(report):
    t0 = time.perf_counter()
    table = finite.bfs_enumerate(3)
    kern = table.matrices(finite.kernel_of_lambda_p(table))
    kern_ok = sorted(int(m[0, 0]) for m in kern) == [1, 2] and all(
        np.array_equal(m, m[0, 0] * np.eye(4, dtype=np.int64)) for m in kern
    )
    psp = finite.psp_checks(table)
    dt = time.perf_counter() - t0
    rss_gb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024**2
    ok = len(table) == 51840 and kern_ok and psp.center_trivial and psp.simple and dt < 300 and rss_gb < 2
    report(
        "C9 appendix certificates p=3",
        ok,
        f"|Sp(4,3)|={len(table)}, ker lambda_3 = +-I: {kern_ok}, |PSp|={psp.psp_order}, "
        f"center trivial: {psp.center_trivial}, simple: {psp.simple} ({len(psp.class_sizes)} classes), "
        f"{dt:.1f}s, peak RSS {rss_gb:.2f} GB",
    )


def test_c10_burau(report):
    words = burau.calibration_basket() + burau.random_b4_words(100, seed=10)
    fwords = burau.factorization_basket() + burau.random_b4_words(100, seed=11)
    eq = burau.burau_equivalence_check(words)
    fac = burau.b4_to_b3_factorization_check(fwords)
    report(
        "C10 Burau comparison",
        eq and fac,
        f"identification {burau.choose_identification()}, equivalence: {eq}, B4->B3 factorization: {fac}",
    )


def _cli(*argv) -> bytes:
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(list(argv))
    return buf.getvalue().encode()


def test_c11_determinism(report):
    runs = {
        "search-kernel": [
            _cli("search-kernel", "--diagram", "[2,2,2]", "--max-len", "5", "--seed", "4", "--threads", str(t))
            for t in (1, 2, 4, 1)
        ],
        "sp": [_cli("sp", "--p", "3", "--threads", str(t)) for t in (1, 4)],
        "verify": [_cli("verify", "--suite", "burau", "--seed", "2") for _ in range(2)],
    }
    same = {k: len(set(v)) == 1 for k, v in runs.items()}
    report("C11 determinism", all(same.values()), f"byte-identical across runs/thread counts: {same}")
