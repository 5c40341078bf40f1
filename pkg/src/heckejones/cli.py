"""Command-line entry point: ``heckejones {rep,eval,verify,search-kernel,sp}``.

Exit status: 0 when every requested check passes, 1 on a failed check, 2 on
a usage error.  JSON reports are deterministic for a fixed config and seed;
thread counts and timings are left out unless ``--timings`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import finite, hecke, jones, verify
from .braids import BraidWord
from .search import THREADS_ENV, default_threads, kernel_search
from .tableaux import YoungDiagram

SCHEMA = "heckejones-report/1"
SP_CHECKS = ("order", "kernel", "center", "simple")


class UsageError(ValueError):
    pass


def _diagram(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad diagram {text!r}: {exc}") from exc


def _word(text: str, strands: int) -> BraidWord:
    try:
        return BraidWord.parse(text, strands)
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from exc


def _pick_rep(y: YoungDiagram, kind: str):
    if kind == "auto":
        kind = "jones" if y.is_rectangular() and y.n >= 2 else "hecke"
    if kind == "jones":
        if not y.is_rectangular():
            raise UsageError(f"{y} is not rectangular; use --rep hecke")
        return kind, jones.build_jones(y)
    return kind, hecke.build_rep(y)


def cmd_rep(args) -> tuple[int, dict]:
    y = _diagram(args.diagram)
    kind, rep = _pick_rep(y, args.rep)
    report = {
        "diagram": str(y),
        "rep": kind,
        "variable": jones.T if kind == "jones" else hecke.Q,
        "dimension": rep.d,
        "r": hecke.r_of(y),
        "basis": [[list(r) for r in t.filling] for t in (rep.basis if kind == "hecke" else rep.hecke.basis)],
        "generators": [g.to_json_obj() for g in rep.gen],
    }
    return 0, report


def cmd_eval(args) -> tuple[int, dict]:
    y = _diagram(args.diagram)
    kind, rep = _pick_rep(y, args.rep)
    w = _word(args.word, y.n)
    m = rep.evaluate(w)
    report = {
        "diagram": str(y),
        "rep": kind,
        "word": str(w),
        "matrix": m.to_json_obj(),
        "trace": str(m.trace()),
        "is_identity": m.is_identity(),
    }
    return 0, report


def cmd_verify(args) -> tuple[int, dict]:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    suites = {}
    failures = []
    timings = {}
    for name in names:
        t0 = time.perf_counter()
        checks = verify.run_suite(name, n_max=args.n_max, seed=args.seed)
        timings[name] = round(time.perf_counter() - t0, 3)
        suites[name] = {"ok": all(c.ok for c in checks), "checks": [c.to_json_obj() for c in checks]}
        failures += [{"suite": name, **c.to_json_obj()} for c in checks if not c.ok]
    report = {"suite": args.suite, "n_max": args.n_max, "seed": args.seed, "ok": not failures, "suites": suites}
    report["failures"] = failures
    if args.timings:
        report["timings"] = timings
    return (0 if not failures else 1), report


def cmd_search(args) -> tuple[int, dict]:
    y = _diagram(args.diagram)
    if not y.is_rectangular():
        raise UsageError(f"{y} is not rectangular")
    if args.max_len < 1:
        raise UsageError("--max-len must be >= 1")
    t0 = time.perf_counter()
    res = kernel_search(
        y, args.max_len, seed=args.seed, confirm=args.confirm, threads=args.threads, backend=args.backend
    )
    report = res.to_json_obj()
    unconfirmed = [h.to_json_obj() for h in res.hits if h.confirmed is False]
    report["ok"] = not unconfirmed
    report["failures"] = [{"tag": "screen-confirmation", **h} for h in unconfirmed]
    if args.timings:
        report["timings"] = {"search": round(time.perf_counter() - t0, 3)}
    return (0 if not unconfirmed else 1), report


def cmd_sp(args) -> tuple[int, dict]:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in SP_CHECKS]
    if bad:
        raise UsageError(f"unknown checks {bad}; choose from {','.join(SP_CHECKS)}")
    if args.p < 3:
        raise UsageError("p must be an odd prime >= 3")
    timings = {}
    t0 = time.perf_counter()
    try:
        table = finite.bfs_enumerate(args.p, threads=args.threads or default_threads())
    except finite.ResourceBudgetError as exc:
        return 1, {"p": args.p, "ok": False, "failures": [{"tag": "resource-budget", "error": str(exc)}]}
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    timings["bfs"] = round(time.perf_counter() - t0, 3)
    out: dict = {"p": args.p, "checks": checks}
    failures = []
    expected = finite.sp_order(args.p)
    if "order" in checks:
        ok = len(table) == expected
        deepest = len(table) - 1
        out["order"] = {"ok": ok, "bfs_count": len(table), "expected": expected, "deepest_word": str(table.word(deepest))}
        if not ok:
            failures.append({"tag": "sp-order", "bfs_count": len(table), "expected": expected})
    if "kernel" in checks:
        t0 = time.perf_counter()
        kern = finite.kernel_of_lambda_p(table)
        mats = table.matrices(kern)
        eye = np.eye(4, dtype=np.int64)
        scalars = sorted(int(m[0, 0]) for m in mats if np.array_equal(m, m[0, 0] * eye))
        ok = len(kern) == 2 and scalars == [1, args.p - 1]
        out["kernel"] = {"ok": ok, "size": int(len(kern)), "elements": [m.tolist() for m in mats]}
        if not ok:
            failures.append({"tag": "lambda-kernel-plus-minus", "size": int(len(kern))})
        timings["kernel"] = round(time.perf_counter() - t0, 3)
    if "center" in checks or "simple" in checks:
        t0 = time.perf_counter()
        rep = finite.psp_checks(table, simplicity="simple" in checks)
        out["psp_order"] = rep.psp_order
        if "center" in checks:
            out["center"] = {"ok": rep.center_trivial, "size": rep.center_size}
            if not rep.center_trivial:
                failures.append({"tag": "psp-center-trivial", "size": rep.center_size})
        if "simple" in checks:
            out["simple"] = {
                "ok": rep.simple,
                "class_count": len(rep.class_sizes),
                "class_sizes": rep.class_sizes,
                "normal_closure_sizes": rep.normal_closure_sizes,
            }
            if not rep.simple:
                failures.append({"tag": "psp-simple", "normal_closure_sizes": rep.normal_closure_sizes})
        timings["psp"] = round(time.perf_counter() - t0, 3)
    out["ok"] = not failures
    out["failures"] = failures
    if args.timings:
        out["timings"] = timings
    return (0 if not failures else 1), out


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            (f"{pad}-\n" + _text(v, indent + 1)) if isinstance(v, (dict, list)) and not _flat(v) else f"{pad}- {_inline(v)}"
            for v in obj
        )
    return f"{pad}{_inline(obj)}"


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, dict) for x in v) and all(not isinstance(x, list) or _flat(x) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckejones", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (not deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rep", parents=[common], help="print generator matrices")
    p.add_argument("--diagram", required=True)
    p.add_argument("--rep", choices=("auto", "hecke", "jones"), default="auto")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("eval", parents=[common], help="evaluate a word")
    p.add_argument("--diagram", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--rep", choices=("auto", "hecke", "jones"), default="auto")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-kernel", parents=[common], help="screen words for kernel elements")
    p.add_argument("--diagram", required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--confirm", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--threads", type=int, default=None, help=f"worker threads (default ${THREADS_ENV} or all cores)")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sp", parents=[common], help="finite symplectic certificates")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--checks", default=",".join(SP_CHECKS))
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_sp)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, body = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    report = {"schema": SCHEMA, "command": args.command, **body}
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    else:
        text = _text(report) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
