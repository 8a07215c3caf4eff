"""Command-line front end: ``hilbmot <command> [--d D] [--n N] ...``.

Every command prints one document to stdout.  JSON output has the shape::

    {"format_version": "1", "command": ..., "params": {...},
     "result": {"type": ..., "value": ...}}

Exit codes: 0 ok, 2 usage, 3 domain boundary, 4 failed verification,
1 any other computation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import import_module

from .errors import MotiveError
from .lpoly import LPoly
from .series import BiSeries, TSeries

FORMAT_VERSION = "1"

VERIFY_MODULES = ("lpoly", "series", "grassmann", "strata", "hilb", "plethystic", "quot", "macmahon")

EXIT_OK, EXIT_ERROR, EXIT_USAGE, EXIT_BOUNDARY, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs " + ", ".join("--" + m for m in missing))
    return [getattr(args, n) for n in names]


# each handler returns (result type, value)


def _gauss(a):
    from .grassmann import gauss

    k, n = _need(a, "k", "n")
    return "lpoly", gauss(k, n)


def _zeta(a):
    from .series import zeta_proj

    (n,) = _need(a, "n")
    return "tseries", zeta_proj(n, a.order if a.order is not None else 6)


def _hilb(a):
    from .hilb import hilb_punctual

    d, n = _need(a, "d", "n")
    return "lpoly", hilb_punctual(d, n)


def _yclass(a):
    from .strata import y_class

    k, d = _need(a, "k", "d")
    return "lpoly", y_class(k, d)


def _pd(a):
    from .hilb import p_poly

    (d,) = _need(a, "d")
    return "tpoly", p_poly(d)


def _zd(a):
    from .hilb import z_series

    (d,) = _need(a, "d")
    return "tseries", z_series(d, a.order if a.order is not None else 6)


def _omega(a):
    from .plethystic import omega

    d, n = _need(a, "d", "n")
    return "lpoly", omega(d, n)


def _qd(a):
    from .plethystic import q_poly

    (d,) = _need(a, "d")
    return "tpoly", q_poly(d)


def _quot(a):
    from .quot import quot_punctual, quot_series

    (d,) = _need(a, "d")
    if a.n is not None and a.r is not None:
        return "lpoly", quot_punctual(d, a.n, a.r)
    o = a.order if a.order is not None else 4
    return "biseries", quot_series(d, o, o)


def _quot_omega(a):
    from .quot import quot_omega

    d, n, r = _need(a, "d", "n", "r")
    return "lpoly", quot_omega(d, n, r)


def _partitions(a):
    from .macmahon import DEFAULT_BUDGET, count_partitions

    n, d = _need(a, "n", "d")
    return "int", count_partitions(n, d, a.budget or DEFAULT_BUDGET)


def _macmahon(a):
    from .macmahon import andrews_check, eps_mot, epsilon, macmahon_coeff

    if a.k is not None:
        return "report", andrews_check(a.k).to_json()
    d, n = _need(a, "d", "n")
    return "report", {
        "macmahon_coeff": macmahon_coeff(d, n),
        "epsilon": epsilon(d, n),
        "eps_mot": eps_mot(d, n),
    }


def _stab(a):
    from .hilb import stab_check

    d, n = _need(a, "d", "n")
    return "bool", stab_check(d, n)


def _verify(a):
    name = a.module or "all"
    names = VERIFY_MODULES if name == "all" else (name,)
    if any(m not in VERIFY_MODULES for m in names):
        raise UsageError(f"unknown module {name!r}; choose from all, " + ", ".join(VERIFY_MODULES))
    rows = []
    for m in names:
        for check, ok in import_module(f".{m}", __package__).invariants():
            rows.append({"module": m, "check": check, "ok": bool(ok)})
    return "verify", rows


COMMANDS = {
    "gauss": _gauss,
    "zeta": _zeta,
    "hilb": _hilb,
    "yclass": _yclass,
    "pd": _pd,
    "zd": _zd,
    "omega": _omega,
    "qd": _qd,
    "quot": _quot,
    "quot-omega": _quot_omega,
    "partitions": _partitions,
    "macmahon": _macmahon,
    "stab": _stab,
    "verify": _verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hilbmot", description="Motives of punctual Hilbert and Quot schemes.")
    p.add_argument("command", choices=sorted(COMMANDS))
    for flag in ("d", "n", "k", "r", "order", "lprec", "budget"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--module", help="module for verify (default: all)")
    return p


def _jsonable(value):
    if isinstance(value, (LPoly, TSeries, BiSeries)) or hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    return value


def _text(kind, value, latex: bool) -> str:
    if kind == "verify":
        return "\n".join(f"{'PASS' if r['ok'] else 'FAIL'} {r['module']}: {r['check']}" for r in value)
    if kind == "bool":
        return "true" if value else "false"
    if kind == "int":
        return str(value)
    if kind == "report":
        return "\n".join(f"{k}: {_text('x', v, latex)}" for k, v in value.items())
    if isinstance(value, (LPoly, TSeries, BiSeries)) or hasattr(value, "to_latex"):
        return value.to_latex() if latex else value.to_text()
    return str(value)


def render(command: str, params: dict, kind: str, value, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "format_version": FORMAT_VERSION,
            "command": command,
            "params": params,
            "result": {"type": kind, "value": _jsonable(value)},
        }
        return json.dumps(doc, sort_keys=True)
    return _text(kind, value, fmt == "latex")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    params = {
        k: v for k, v in vars(args).items() if k not in ("command", "format") and v is not None
    }
    try:
        kind, value = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"UsageError: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MotiveError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_BOUNDARY if e.boundary else EXIT_ERROR
    except ValueError as e:
        print(f"UsageError: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(render(args.command, params, kind, value, args.format))
    if kind == "verify" and not all(r["ok"] for r in value):
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
