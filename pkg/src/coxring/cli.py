"""``coxring`` command line: curves, rulings, relations, verify.

Every command writes JSON Lines to stdout (or ``--out``).  Exit status is 0
on success, 1 when a verification check fails or the points are not in
general position, 2 on bad arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Sequence

from .fields import parse_field
from .io import read_points, write_relations
from .picard import generators
from .plane import DegenerateConfigurationError, PointConfiguration, validate_general_position
from .relations import full_ideal
from .rulings import enumerate_rulings, ruling_families
from .suites import DEFAULT_FIELDS, DEFAULT_PARAMS, SUITES, RunConfig, run_suites
from .verify import DEFAULT_TMAX


class UsageError(Exception):
    pass


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(out, rec: dict) -> None:
    out.write(json.dumps(rec) + "\n")


def _parse_params(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--params must be comma-separated numbers, got {text!r}") from None


def build_config(args) -> RunConfig:
    """Resolve --r/--field/--points/--params into a validated-shape RunConfig."""
    try:
        field = parse_field(args.field) if args.field else None
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.points and args.params:
        raise UsageError("give either --points or --params, not both")
    try:
        if args.points:
            cfg = read_points(args.points)
            if field is not None and cfg.field != field:
                raise UsageError(f"--field {args.field} disagrees with points file field {cfg.field.spec()}")
            if args.r is not None and args.r != cfg.r:
                raise UsageError(f"--r {args.r} disagrees with {cfg.r} points in file")
        elif args.params:
            params = _parse_params(args.params)
            r = args.r if args.r is not None else 4 + len(params) // 2
            F = field if field is not None else DEFAULT_FIELDS.get(r, DEFAULT_FIELDS[7])
            cfg = PointConfiguration.from_params(F, params, r=r)
        else:
            r = 7 if args.r is None else args.r
            if r not in DEFAULT_PARAMS:
                raise UsageError(f"no default points for r={r}; pass --params or --points")
            return RunConfig.default(r, field, tmax=args.tmax)
    except (ValueError, ZeroDivisionError, OSError) as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(str(e)) from None
    if not 4 <= cfg.r <= 8:
        raise UsageError(f"relations need 4 <= r <= 8, got r={cfg.r}")
    return RunConfig(cfg, tmax=args.tmax)


def cmd_curves(args) -> int:
    if args.r is None or not 1 <= args.r <= 8:
        raise UsageError("curves needs --r in 1..8")
    with _output(args.out) as out:
        for g in generators(args.r):
            _emit(out, g.to_record())
    return 0


def cmd_rulings(args) -> int:
    if args.r is None or args.n is None:
        raise UsageError("rulings needs --r and --n")
    try:
        rulings = enumerate_rulings(args.r, args.n)
        census = {k: len(v) for k, v in ruling_families(args.r, args.n).items()}
    except ValueError as e:
        raise UsageError(str(e)) from None
    with _output(args.out) as out:
        for R in rulings:
            _emit(out, R.to_record())
        _emit(out, {"census": census, "total": len(rulings)})
    return 0


def _witness_record(cfg: PointConfiguration) -> dict | None:
    w = validate_general_position(cfg)
    if w is None:
        return None
    return {"error": "points not in general position", "witness": w.to_record()}


def cmd_relations(args) -> int:
    run = build_config(args)
    bad = _witness_record(run.cfg)
    if bad is not None:
        _emit(sys.stdout if args.out is None else sys.stderr, bad)
        return 1
    try:
        rs = full_ideal(run.r, run.cfg)
    except DegenerateConfigurationError as e:
        _emit(sys.stderr, {"error": str(e), "class": e.cls.to_list() if e.cls else None})
        return 1
    with _output(args.out) as out:
        write_relations(rs, out)
    return 0


def cmd_verify(args) -> int:
    run = build_config(args)
    bad = _witness_record(run.cfg)
    if bad is not None and args.suite not in ("table1", "triangles", "golden81"):
        _emit(sys.stdout, bad)
        return 1
    ok = True
    with _output(args.out) as out:
        try:
            for rec in run_suites(args.suite, run):
                ok &= bool(rec["pass"])
                _emit(out, rec)
        except ValueError as e:
            _emit(out, {"check": args.suite, "error": str(e), "pass": False})
            ok = False
        _emit(out, {"summary": args.suite, "pass": ok})
    return 0 if ok else 1


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n=False, config=False, verify=False):
        sp.add_argument("--r", type=int)
        sp.add_argument("--out", help="write records here instead of stdout")
        if n:
            sp.add_argument("--n", type=int)
        if config:
            sp.add_argument("--field", help="'Q' or 'Fp:<p>' with p > 5")
            sp.add_argument("--points", help="JSON points file")
            sp.add_argument("--params", help="alpha_5,beta_5,alpha_6,beta_6,...")
            sp.add_argument("--tmax", type=int, default=DEFAULT_TMAX)
        if verify:
            sp.add_argument("--suite", choices=SUITES + ("all",), default="all")

    common(sub.add_parser("curves", help="list the Cox ring generators"))
    common(sub.add_parser("rulings", help="list (n)-rulings with a family census"), n=True)
    common(sub.add_parser("relations", help="write the quadratic relations"), config=True)
    common(sub.add_parser("verify", help="run verification suites"), config=True, verify=True)
    return p


COMMANDS = {"curves": cmd_curves, "rulings": cmd_rulings,
            "relations": cmd_relations, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        parser.error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
