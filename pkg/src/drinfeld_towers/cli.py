"""Command-line front end: point enumeration, fibers, counts, verification.

Exit codes: 0 success, 1 property failure, 2 usage or validation error,
3 resource limit hit.  Reports embed the run configuration that produced
them; the thread count is deliberately left out of the serialized config so
reports stay byte-identical across worker counts.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass

from .errors import AlgebraError, NotPrime, SizeCapExceeded
from .field import DEFAULT_SIZE_CAP
from .isogeny import TowerParams
from .towers import enumerate_rational, fiber_solutions, ihara_bound
from .verify import DEFAULT_GRID, SUITES, run_suite, total_failures

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a run's output (thread count excluded)."""

    command: str
    p: int | None = None
    e: int | None = None
    m: int | None = None
    j: int | None = None
    n: int | None = None
    variant: str | None = None
    suite: str | None = None
    x: str | None = None
    format: str = "json"
    size_cap: int = DEFAULT_SIZE_CAP
    seed: int = 0

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}


def _size_cap() -> int:
    raw = os.environ.get("DRINFELD_SIZE_CAP")
    return int(raw) if raw else DEFAULT_SIZE_CAP


def _params(cfg: RunConfig) -> TowerParams:
    return TowerParams(cfg.p, cfg.e, cfg.m, cfg.j)


def cmd_points(cfg: RunConfig, threads: int, out) -> int:
    params = _params(cfg)
    pts = enumerate_rational(params, cfg.n, cfg.variant, workers=threads)
    if cfg.format == "csv":
        length = cfg.n if cfg.variant != "H" else cfg.n - 1
        cols = ",".join(f"coord_{i + 1}" for i in range(length))
        print(f"variant,p,e,m,j,{cols},supersingular", file=out)
        for pt in pts:
            coords = ",".join(pt.ctx.format_elem(c) for c in pt.coords)
            print(
                f"{pt.variant},{params.p},{params.e},{params.m},{params.j},"
                f"{coords},{pt.is_supersingular()}",
                file=out,
            )
    else:
        for pt in pts:
            print(json.dumps(pt.to_json_dict(), sort_keys=True), file=out)
    return EXIT_OK


def cmd_fibers(cfg: RunConfig, threads: int, out) -> int:
    params = _params(cfg)
    ctx = params.field(params.m, cfg.size_cap)
    x = ctx.parse_elem(cfg.x)
    ys = fiber_solutions(params, ctx, x)
    record = {
        "config": cfg.to_dict(),
        "x": ctx.format_elem(x),
        "solutions": [ctx.format_elem(y) for y in ys],
    }
    print(json.dumps(record, sort_keys=True), file=out)
    return EXIT_OK


def cmd_ss_count(cfg: RunConfig, threads: int, out) -> int:
    from .towers import count_supersingular

    params = _params(cfg)
    count, formula = count_supersingular(params, cfg.n)
    record = {
        "config": cfg.to_dict(),
        "enumerated": count,
        "formula": formula,
        "match": count == formula,
    }
    print(json.dumps(record, sort_keys=True), file=out)
    return EXIT_OK if count == formula else EXIT_FAILURE


def cmd_verify(cfg: RunConfig, threads: int, out) -> int:
    if cfg.p is not None:
        grid = ((cfg.p, cfg.e, cfg.m, cfg.j),)
    else:
        grid = DEFAULT_GRID
    report = run_suite(cfg.suite, grid, threads=threads, seed=cfg.seed)
    doc = {"config": cfg.to_dict(), "report": report}
    print(json.dumps(doc, sort_keys=True), file=out)
    return EXIT_OK if total_failures(report) == 0 else EXIT_FAILURE


def cmd_bound(cfg: RunConfig, threads: int, out) -> int:
    v = ihara_bound(cfg.p, cfg.m)
    print(f"{v.numerator}/{v.denominator}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drinfeld-towers",
        description="Drinfeld modular tower calculator and property verifier",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_params(sp, with_n=False):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--e", type=int, default=1)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--j", type=int, required=True)
        if with_n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("points", help="enumerate rational tower points")
    add_params(sp, with_n=True)
    sp.add_argument("--variant", choices=("F", "G", "H"), required=True)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("fibers", help="solve Q_x(y) = x over F_{q^m}")
    add_params(sp)
    sp.add_argument("--x", required=True, help="element in canonical [d0,d1,...] form")

    sp = sub.add_parser("ss-count", help="supersingular point count vs formula")
    add_params(sp, with_n=True)

    sp = sub.add_parser("verify", help="run a property-verification suite")
    sp.add_argument("--suite", choices=SUITES + ("all",), required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("--m", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json",), default="json")

    sp = sub.add_parser("bound", help="exact rational point-count bound")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    return ap


_HANDLERS = {
    "points": cmd_points,
    "fibers": cmd_fibers,
    "ss-count": cmd_ss_count,
    "verify": cmd_verify,
    "bound": cmd_bound,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if ns.command == "verify" and ns.p is not None and None in (ns.m, ns.j):
        print("verify with --p also needs --m and --j", file=sys.stderr)
        return EXIT_USAGE
    cfg = RunConfig(
        command=ns.command,
        p=getattr(ns, "p", None),
        e=getattr(ns, "e", None),
        m=getattr(ns, "m", None),
        j=getattr(ns, "j", None),
        n=getattr(ns, "n", None),
        variant=getattr(ns, "variant", None),
        suite=getattr(ns, "suite", None),
        x=getattr(ns, "x", None),
        format=getattr(ns, "format", "json"),
        size_cap=_size_cap(),
        seed=getattr(ns, "seed", 0),
    )
    threads = getattr(ns, "threads", 1)
    try:
        return _HANDLERS[ns.command](cfg, threads, sys.stdout)
    except SizeCapExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NotPrime, ValueError, AlgebraError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
