"""Command-line driver.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.
Rationals are printed as "num/den" strings throughout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import __version__, coding, suite
from .errors import ZipShiftError
from .point import point_from_json
from .shadowing import perturbed_orbit, trace, verify_tracing
from .space import (
    ZipShiftSystem,
    builtin_system,
    distance,
    first_disagreement,
    mixing_gap,
    periodic_points,
    power_separation,
    preimages,
    product_point,
    product_separation,
    product_system,
    random_distinct_pair,
    random_point,
    sensitivity_witness,
    separation_time,
    shift,
    split_point,
    transitive_window,
    verify_transitive,
)


class UsageError(Exception):
    pass


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _load_json(arg: str):
    """Inline JSON, or a path to a JSON file."""
    text = arg
    if not arg.lstrip().startswith(("{", "[")) and Path(arg).exists():
        text = Path(arg).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _system(name: str) -> ZipShiftSystem:
    if Path(name).exists():
        return ZipShiftSystem.from_json(_load_json(name))
    try:
        return builtin_system(int(name) if name.isdigit() else name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None


def _point(sys: ZipShiftSystem, arg: str | None, what: str = "--point"):
    if arg is None:
        raise UsageError(f"{what} is required")
    return point_from_json(sys.tm, _load_json(arg))


def _rows_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# -- subcommands: each returns (payload, csv_rows, exit_code) ---------------

def cmd_shift(args):
    sys_ = _system(args.system)
    p = _point(sys_, args.point)
    if args.inverse:
        pre = preimages(sys_, p)
        return {"point": p.to_json(), "preimages": [q.to_json() for q in pre]}, \
            [{"k": k, **q.to_json()} for k, q in enumerate(pre)], 0
    img = p
    for _ in range(args.steps):
        img = shift(sys_, img)
    return {"point": p.to_json(), "steps": args.steps, "image": img.to_json()}, [img.to_json()], 0


def cmd_metric(args):
    sys_ = _system(args.system)
    p, q = _point(sys_, args.p, "--p"), _point(sys_, args.q, "--q")
    m = first_disagreement(sys_, p, q)
    out = {"first_disagreement": "inf" if m == float("inf") else m,
           "distance": _frac(distance(sys_, p, q))}
    return out, [out], 0


def cmd_periodic(args):
    sys_ = _system(args.system)
    checks = suite.periodic(sys_, args.k)
    rows = [c.details for c in checks]
    payload = {"lambda": sys_.lam, "counts": rows}
    if args.list:
        payload["points"] = [p.to_json() for p in periodic_points(sys_, args.k)]
    return payload, rows, 0 if all(c.passed for c in checks) else 1


def cmd_separation(args):
    sys_ = _system(args.system)
    pairs = []
    if args.p or args.q:
        pairs.append((_point(sys_, args.p, "--p"), _point(sys_, args.q, "--q")))
    else:
        rng = random.Random(args.seed)
        pairs = [random_distinct_pair(sys_.tm, rng) for _ in range(args.trials)]
    rows = []
    for t, (p, q) in enumerate(pairs):
        w = power_separation(sys_, p, q, args.power) if args.power > 1 else separation_time(sys_, p, q)
        rows.append({"trial": t, **w.to_json()})
    ok = all(Fraction(r["distance"]) > Fraction(r["threshold"]) for r in rows)
    return {"witnesses": rows}, rows, 0 if ok else 1


def cmd_shadow(args):
    sys_ = _system(args.lambda_system or args.system)
    rng = random.Random(args.seed)
    eps = Fraction(1, sys_.lam ** args.m)
    reports, rows = [], []
    for t in range(args.trials):
        p = random_point(sys_.tm, rng)
        po = perturbed_orbit(sys_, p, args.length, args.m, rng.getrandbits(64))
        rep = trace(sys_, po, args.m)
        ver = verify_tracing(sys_, rep.tracer, po, eps)
        reports.append({"trial": t, **ver.to_json()})
        rows.append({"trial": t, "m": args.m, "max_error_num": ver.max_error.numerator,
                     "max_error_den": ver.max_error.denominator, "pass": ver.accepted})
    return {"reports": reports, "summary": rows}, rows, 0 if all(r["pass"] for r in rows) else 1


def cmd_transitive(args):
    sys_ = _system(args.system)
    w = transitive_window(sys_, args.depth)
    ok = verify_transitive(sys_, args.depth)
    out = {"depth": args.depth, "window": w.to_json(), "verified": ok}
    return out, [{"depth": args.depth, "length": len(w), "verified": ok}], 0 if ok else 1


def cmd_mixing(args):
    sys_ = _system(args.system)
    gap = mixing_gap(sys_, args.depth, certify=True)
    out = {"depth": args.depth, "gap": gap, "bound": 2 * args.depth + 2}
    return out, [out], 0 if gap <= 2 * args.depth + 2 else 1


def cmd_sensitivity(args):
    sys_ = _system(args.system)
    p = _point(sys_, args.point)
    q, n = sensitivity_witness(sys_, p, args.depth)
    out = {"q": q.to_json(), "n": n, "initial_distance": _frac(distance(sys_, p, q))}
    return out, [{"n": n, "initial_distance": out["initial_distance"]}], 0


def cmd_product(args):
    ps = product_system(_system(args.system), _system(args.system2))
    rng = random.Random(args.seed)
    rows = []
    for t in range(args.trials):
        p1, q1 = random_distinct_pair(ps.first.tm, rng)
        p2, q2 = random_distinct_pair(ps.second.tm, rng)
        a, b = product_point(ps, p1, p2), product_point(ps, q1, q2)
        commutes = shift(ps.system, a) == product_point(ps, shift(ps.first, p1), shift(ps.second, p2))
        w = product_separation(ps, a, b)
        rows.append({"trial": t, "commutes": commutes, "n": w.time,
                     "distance": _frac(w.distance), "round_trip": split_point(ps, a) == (p1, p2)})
    ok = all(r["commutes"] and r["round_trip"] for r in rows)
    return {"product_tm": ps.system.tm.to_json(), "trials": rows}, rows, 0 if ok else 1


def _custom_map(path):
    if not path:
        raise UsageError("--map custom needs --map-json")
    return coding.PWLMap.from_json(_load_json(path))


def cmd_code(args):
    if args.map == "custom":
        f = _custom_map(args.map_json)
    else:
        f = coding.BUILTIN_MAPS[args.map]()
    ref = args.refinement or coding.DEFAULT_REFINEMENT.get(args.map, "whole")
    if ref == "custom":
        if not args.cuts:
            raise UsageError("--refinement custom needs --cuts")
        extra = coding.IntervalPartition.from_cuts(Fraction(c) for c in args.cuts.split(","))
    else:
        extra = coding.BUILTIN_REFINEMENTS[ref]()
    scheme = coding.build_scheme(f, extra)
    diams = [coding.generator_diameter(f, scheme.etp, n) for n in range(args.depth + 1)]
    rng = random.Random(args.seed)
    sweep_depth = max(args.depth, 1)
    fails = 0
    for _ in range(args.trials):
        word = coding.random_admissible_word(scheme, sweep_depth, rng)
        fails += not coding.check_semiconjugacy(scheme, word, sweep_depth).holds
    tm = scheme.tm
    fibers = {z: sorted(tm.fiber(z), key=tm.s_alphabet.index) for z in tm.z_alphabet}
    payload = {
        "scheme": scheme.to_json(),
        "fibers": fibers,
        "generator_diameters": [_frac(d) for d in diams],
        "semiconjugacy": {"trials": args.trials, "depth": sweep_depth, "failures": fails},
    }
    rows = [{"N": n, "diameter": _frac(d)} for n, d in enumerate(diams)]
    return payload, rows, 0 if fails == 0 else 1


def cmd_suite(args):
    started = datetime.now(timezone.utc).isoformat()
    battery_names = suite.BATTERIES if args.battery == "all" else (args.battery,)
    checks = []
    for name in battery_names:
        checks += suite.run(name, lam=args.lam, trials=args.trials, seed=args.seed, m=args.m,
                            k=args.k, length=args.length, depth=args.depth)
    passed = all(c.passed for c in checks)
    manifest = {
        "tool": "zipshift",
        "version": __version__,
        "config": {"battery": args.battery, "lambda": args.lam, "trials": args.trials,
                   "seed": args.seed, "m": args.m, "k": args.k, "length": args.length,
                   "depth": args.depth, "cap": os.environ.get("ZIPSHIFT_CAP")},
        "started": started,
        "finished": datetime.now(timezone.utc).isoformat(),
        "passed": passed,
        "summary": {"checks": len(checks), "failed": sum(not c.passed for c in checks)},
        "checks": [c.to_json() for c in checks],
    }
    rows = [{"name": c.name, "passed": c.passed} for c in checks]
    return manifest, rows, 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0, help="64-bit seed for randomized commands")
    common.add_argument("--system", default="example1",
                        help="builtin system (example1, example2, lambda2/3/4/6) or JSON file")

    parser = argparse.ArgumentParser(prog="zipshift", description=__doc__, parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("shift", cmd_shift, "apply the zip shift (or list preimages) to a point")
    p.add_argument("--point")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--steps", type=int, default=1)

    p = add("metric", cmd_metric, "first disagreement and distance of two points")
    p.add_argument("--p")
    p.add_argument("--q")

    p = add("periodic", cmd_periodic, "periodic point counts against the brute-force oracle")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--list", action="store_true")

    p = add("separation", cmd_separation, "S-expansivity witnesses")
    p.add_argument("--p")
    p.add_argument("--q")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--trials", type=int, default=10)

    p = add("shadow", cmd_shadow, "trace seeded perturbed orbits")
    p.add_argument("--lambda-system")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--length", type=int, default=100)
    p.add_argument("--trials", type=int, default=10)

    p = add("transitive", cmd_transitive, "window of a point with dense forward orbit")
    p.add_argument("--depth", type=int, default=1)

    p = add("mixing", cmd_mixing, "certified mixing gap for cylinders in [-d, d]")
    p.add_argument("--depth", type=int, default=1)

    p = add("sensitivity", cmd_sensitivity, "nearby point with separating orbit")
    p.add_argument("--point")
    p.add_argument("--depth", type=int, default=2)

    p = add("product", cmd_product, "direct product of two systems")
    p.add_argument("--system2", default="example2")
    p.add_argument("--trials", type=int, default=10)

    p = add("code", cmd_code, "code an interval map by a zip shift")
    p.add_argument("--map", choices=("doubling", "tripling", "custom"), default="doubling")
    p.add_argument("--map-json")
    p.add_argument("--refinement", choices=tuple(coding.BUILTIN_REFINEMENTS) + ("custom",))
    p.add_argument("--cuts", help="comma-separated rationals for --refinement custom")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--trials", type=int, default=200)

    p = add("suite", cmd_suite, "run a verification battery and write a manifest")
    p.add_argument("battery", choices=suite.BATTERIES + ("all",))
    p.add_argument("--lambda", dest="lam", type=int, default=4)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--length", type=int, default=100)
    p.add_argument("--depth", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, rows, code = args.func(args)
    except (UsageError, ZipShiftError, KeyError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    text = _rows_csv(rows) if args.format == "csv" else json.dumps(payload, indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
