"""Command-line front end.

Exit status: 0 all checks pass, 1 a bound or lemma violation (a would-be
counterexample), 2 bad input or a family that is not a simple arrangement of
pairwise crossing circles.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import defaultdict
from pathlib import Path

from . import kernels
from .arrangement import digon_census, validate_family
from .generators import (
    ConstructionUnavailable,
    GeneratorParams,
    RetriesExhausted,
    random_family,
    tight_family,
    trial_seed,
    unit_family,
)
from .geom import Point, invert_circle
from .io import DocumentError, content_name, dumps, family_document, load_family, write_document
from .pipeline import analyze
from .render import LAYERS, render_svg

OK, VIOLATION, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path):
    try:
        circles, tol = load_family(path)
        return validate_family(circles, tol)
    except ValueError as exc:   # DocumentError and ValidationError included
        raise InputError(str(exc)) from None


def _emit(doc, stream=None):
    (stream or sys.stdout).write(dumps(doc))


def cmd_digons(args) -> int:
    fam = _load(args.file)
    census = digon_census(fam)
    _emit({"census": census.as_dict()})
    return OK if census.ok else VIOLATION


def cmd_verify(args) -> int:
    fam = _load(args.file)
    result = analyze(fam)
    _emit(result.as_dict())
    return OK if result.ok else VIOLATION


def unit_violations(n: int, census) -> list[str]:
    out = []
    if census.lenses > n:
        out.append(f"unit lenses {census.lenses} > n = {n}")
    if census.lunes > 3:
        out.append(f"unit lunes {census.lunes} > 3")
    if census.digons > n + 3:
        out.append(f"unit digons {census.digons} > n + 3 = {n + 3}")
    return out


def fuzz_trial(master: int, trial: int, nmin: int, nmax: int, unit: bool):
    """One fuzz trial; returns (family, analysis, violations). Depends only on (master, trial)."""
    seed = trial_seed(master, trial)
    n = nmin + seed % (nmax - nmin + 1)
    fam = unit_family(n, seed) if unit else random_family(GeneratorParams(n, seed))
    result = analyze(fam)
    problems = result.failures + (unit_violations(n, result.census) if unit else [])
    return fam, result, problems


def cmd_fuzz(args) -> int:
    if args.nmin < 2 or args.nmax < args.nmin:
        raise InputError("need 2 <= nmin <= nmax")
    if args.trials < 0:
        raise InputError("trials must be non-negative")
    started = time.perf_counter()
    max_digons = defaultdict(int)
    counts = defaultdict(int)
    for t in range(args.trials):
        try:
            fam, result, problems = fuzz_trial(args.seed, t, args.nmin, args.nmax, args.unit)
        except RetriesExhausted as exc:
            raise InputError(f"trial {t}: {exc}") from None
        n = fam.n
        counts[n] += 1
        max_digons[n] = max(max_digons[n], result.census.digons)
        if problems:
            doc = family_document(fam.circles, fam.tol)
            doc["trial"] = {"master_seed": args.seed, "index": t, "unit": args.unit}
            doc["problems"] = problems
            doc["report"] = result.as_dict()
            out_dir = Path(args.out_dir)
            out_dir.mkdir(parents=True, exist_ok=True)
            path = out_dir / content_name(doc)
            write_document(path, doc)
            _emit({"trials_run": t + 1, "violations": 1, "counterexample": str(path), "problems": problems})
            return VIOLATION
    summary = {
        "trials": args.trials,
        "seed": args.seed,
        "unit": args.unit,
        "violations": 0,
        "per_n": {str(n): {"trials": counts[n], "max_digons": max_digons[n],
                           "bound": (n + 3) if args.unit else 2 * n - 2}
                  for n in sorted(counts)},
    }
    _emit(summary)
    elapsed = time.perf_counter() - started
    rate = elapsed / args.trials * 1e3 if args.trials else 0.0
    print(f"wall {elapsed:.2f}s ({rate:.3f} ms/trial, kernels: {kernels.ACTIVE_NAME})", file=sys.stderr)
    return OK


def cmd_construct(args) -> int:
    try:
        fam = tight_family(args.n)
    except ConstructionUnavailable as exc:
        raise InputError(str(exc)) from None
    write_document(args.out, family_document(fam.circles, fam.tol))
    _emit({"written": str(args.out), "census": digon_census(fam).as_dict()})
    return OK


def cmd_invert(args) -> int:
    try:
        circles, tol = load_family(args.file)
    except DocumentError as exc:
        raise InputError(str(exc)) from None
    center = Point(args.cx, args.cy)
    try:
        images = [invert_circle(c, center, args.k, tol) for c in circles]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = {"written": str(args.out),
              "center_inside_some_disc": any(c.signed_distance(center) < 0 for c in circles)}
    if len(circles) >= 2:
        try:
            before = digon_census(validate_family(circles, tol))
            after = digon_census(validate_family(images, tol))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        report["before"] = before.as_dict()
        report["after"] = after.as_dict()
        report["match"] = (before.lenses, before.lunes) == (after.lenses, after.lunes)
    write_document(args.out, family_document(images, tol))
    _emit(report)
    return OK


def cmd_render(args) -> int:
    layers = [s.strip() for s in args.layers.split(",") if s.strip()]
    if set(layers) - set(LAYERS):
        raise InputError(f"unknown layers {sorted(set(layers) - set(LAYERS))}; choose from {LAYERS}")
    fam = _load(args.file)
    result = analyze(fam)
    svg = render_svg(fam, result.digons, result.graph, layers)
    Path(args.out).write_text(svg)
    _emit({"written": str(args.out), "digons": len(result.digons)})
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circledigons", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digons", help="digon census and bound check")
    p.add_argument("file")
    p.set_defaults(func=cmd_digons)

    p = sub.add_parser("verify", help="census, graph checks and doubled-graph checks")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="random campaign enforcing every bound and check")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--unit", action="store_true", help="unit-radius families")
    p.add_argument("--out-dir", default="counterexamples")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("construct", help="write an extremal witness family")
    p.add_argument("kind", choices=["tight"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("invert", help="apply a circle inversion to a family")
    p.add_argument("file")
    p.add_argument("--cx", type=float, required=True)
    p.add_argument("--cy", type=float, required=True)
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("render", help="draw the family as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--out", required=True)
    p.add_argument("--layers", default=",".join(LAYERS))
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": str(exc), "ok": False})
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
