"""Command-line front end.

Exit status: 0 success, 1 validation failure, 2 degenerate weights,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__
from .dtinv import (EmbeddingParams, localization_oracle, quadratic_dt_series,
                    select_weights, tau_class)
from .errors import (DegenerateWeights, FanError, InadmissibleWeights,
                     WeightSearchExhausted)
from .fan import (FanFormatError, orientation_check, save_fan,
                  sigma_orbit_representatives, star_subdivide, validate_fan)
from .series import PowerSeries
from .vertex import vertex_measure_classical, vertex_measure_quadratic

log = logging.getLogger("quaddt")

EXIT_OK, EXIT_INVALID, EXIT_DEGENERATE, EXIT_IO = 0, 1, 2, 3
JOBS_ENV = "QUADDT_JOBS"


class CLIError(Exception):
    def __init__(self, message, status, payload=None):
        super().__init__(message)
        self.status = status
        self.payload = payload or {"error": "failure", "message": message}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, "%s: error: %s\n" % (self.prog, message))


def _default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", JOBS_ENV, env)
    return os.cpu_count() or 1


def _read_fan(path):
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise CLIError("cannot read %s: %s" % (path, exc.strerror), EXIT_IO)
    try:
        from .fan import loads_fan
        fan = loads_fan(raw.decode("utf-8"))
    except (FanFormatError, UnicodeDecodeError) as exc:
        raise CLIError("%s: %s" % (path, exc), EXIT_IO,
                       {"error": "parse_error", "message": "%s: %s" % (path, exc)})
    return fan, hashlib.sha256(raw).hexdigest()


def _manifest(args, command, digest=None, params=None):
    m = {"tool": "quaddt", "version": __version__, "command": command}
    if digest is not None:
        m["fan_sha256"] = digest
    m["parameters"] = params or {}
    if getattr(args, "timing", False):
        m["elapsed_seconds"] = round(time.perf_counter() - args._t0, 3)
    return m


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _arrow_rows(series: PowerSeries):
    return ["%3d → %s" % (n, c) for n, c in enumerate(series)]


# --- commands --------------------------------------------------------------

def cmd_check(args) -> int:
    fan, digest = _read_fan(args.fan)
    val = validate_fan(fan)
    orient = orientation_check(fan) if val.ok else None
    ok = val.ok and orient.ok
    if args.format == "structured":
        _emit({"status": "PASS" if ok else "FAIL",
               "validation": val.to_dict(),
               "orientation": None if orient is None else orient.to_dict(),
               "manifest": _manifest(args, "check", digest)})
    else:
        for c in val.checks:
            print("%-17s %s%s" % (c.name, "ok" if c.passed else "FAIL",
                                  "  " + c.detail if c.detail else ""))
        if orient is None:
            print("orientation       skipped")
        else:
            print("orientation       %s" % ("ok" if orient.ok else "FAIL"))
            for msg in orient.failures:
                print("  " + msg)
        if ok:
            print("PASS")
        else:
            failed = [c.name.replace("_", " ") for c in val.failures()]
            if orient is not None and not orient.ok:
                failed.append("orientation")
            print("FAIL: " + ", ".join(failed))
    return EXIT_OK if ok else EXIT_INVALID


def _params_from(args, fan, colength):
    if args.weights:
        try:
            return EmbeddingParams(*args.weights)
        except ValueError as exc:
            raise CLIError(str(exc), EXIT_INVALID)
    try:
        return select_weights(fan, colength, tau=args.tau)
    except WeightSearchExhausted as exc:
        raise CLIError(str(exc), EXIT_DEGENERATE,
                       {"error": "weight_search_exhausted", "message": str(exc)})


def _require_oriented(fan):
    rep = orientation_check(fan)
    if not rep.ok:
        raise CLIError("orientation check failed: " + "; ".join(rep.failures), EXIT_INVALID,
                       {"error": "orientation_failed", "failures": rep.failures})


def cmd_invariants(args) -> int:
    fan, digest = _read_fan(args.fan)
    _require_oriented(fan)
    order = args.max_order
    if order % 2:
        log.warning("max order %d is odd; the series has only even terms, using %d",
                    order, order - 1)
        order -= 1
    if order < 2:
        raise CLIError("max order must be at least 2", EXIT_INVALID)
    colength = order // 2
    p = _params_from(args, fan, colength)
    for attempt in range(3):
        try:
            report = quadratic_dt_series(fan, p, order, jobs=args.jobs)
            break
        except DegenerateWeights as exc:
            if args.weights:
                raise CLIError(str(exc), EXIT_DEGENERATE, exc.to_dict())
            log.warning("%s; reselecting", exc)
            colength += 1
            p = _params_from(args, fan, colength)
    else:
        raise CLIError("could not find generic weights", EXIT_DEGENERATE)
    params = {"max_order": order, "abc": list(p.triple), "tau": list(p.tau),
              "auto": not args.weights}
    if args.format == "structured":
        doc = report.to_dict()
        doc["manifest"] = _manifest(args, "invariants", digest, params)
        _emit(doc)
    else:
        print("weights (a, b, c) = %s   tau class = %s" % (p.triple, p.tau))
        print("exponent %s   bott c3 %s   MacMahon shape %s"
              % (report.exponent, report.bott_c3, "yes" if report.macmahon_shape else "NO"))
        print("  n   coefficient")
        print("\n".join(_arrow_rows(report.series)))
    return EXIT_OK


def cmd_vertex(args) -> int:
    s = tuple(args.weights)
    order = args.max_order
    try:
        if args.classical:
            W = vertex_measure_classical(s, order)
        else:
            if order % 2:
                log.warning("max order %d is odd; using %d", order, order - 1)
                order -= 1
            W = vertex_measure_quadratic(s, order)
    except InadmissibleWeights as exc:
        raise CLIError(str(exc), EXIT_INVALID, {"error": "inadmissible_weights",
                                                "message": str(exc)})
    except DegenerateWeights as exc:
        raise CLIError(str(exc), EXIT_DEGENERATE, exc.to_dict())
    params = {"weights": list(s), "max_order": order, "classical": args.classical}
    if args.format == "structured":
        _emit({"series": W.to_strings(), "manifest": _manifest(args, "vertex", None, params)})
    else:
        print("\n".join(_arrow_rows(W)))
    return EXIT_OK


def cmd_blowup(args) -> int:
    fan, digest = _read_fan(args.fan)
    try:
        reps = sigma_orbit_representatives(fan)
    except FanError as exc:
        raise CLIError(str(exc), EXIT_INVALID)
    if not 0 <= args.cone_orbit < len(reps):
        raise CLIError("orbit index %d out of range: the fan has %d orbits"
                       % (args.cone_orbit, len(reps)), EXIT_INVALID)
    try:
        new = star_subdivide(fan, reps[args.cone_orbit])
    except FanError as exc:
        raise CLIError(str(exc), EXIT_INVALID)
    try:
        save_fan(new, args.out)
    except OSError as exc:
        raise CLIError("cannot write %s: %s" % (args.out, exc.strerror), EXIT_IO)
    params = {"cone_orbit": args.cone_orbit, "cone": reps[args.cone_orbit]}
    if args.format == "structured":
        _emit({"out": str(args.out), "rays": len(new.rays), "cones": len(new.cones),
               "manifest": _manifest(args, "blowup", digest, params)})
    else:
        print("wrote %s: %d rays, %d cones" % (args.out, len(new.rays), len(new.cones)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    fan, digest = _read_fan(args.fan)
    _require_oriented(fan)
    n = args.n
    if n < 1:
        raise CLIError("--n must be >= 1", EXIT_INVALID)
    order = n + (n % 2)
    p = _params_from(args, fan, order // 2)
    try:
        value = localization_oracle(fan, p, n, jobs=args.jobs)
        report = quadratic_dt_series(fan, p, order, jobs=args.jobs)
    except DegenerateWeights as exc:
        raise CLIError(str(exc), EXIT_DEGENERATE, exc.to_dict())
    coeff = report.series[n]
    match = value == coeff
    params = {"n": n, "abc": list(p.triple), "tau": list(p.tau), "auto": not args.weights}
    if args.format == "structured":
        _emit({"n": n, "oracle": str(value), "series_coefficient": str(coeff),
               "match": match, "manifest": _manifest(args, "oracle", digest, params)})
    else:
        print("n = %d   oracle %s   series %s   %s"
              % (n, value, coeff, "MATCH" if match else "MISMATCH"))
    return EXIT_OK if match else EXIT_INVALID


# --- parser ----------------------------------------------------------------

def _add_common(p, structured_default=False):
    p.add_argument("--format", choices=("table", "structured"),
                   default="structured" if structured_default else "table")
    p.add_argument("--timing", action="store_true",
                   help="include elapsed time in the manifest (breaks byte-identical output)")


def _add_weights(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--weights", nargs=3, type=int, metavar=("A", "B", "C"),
                   help="odd positive embedding parameters")
    g.add_argument("--auto", action="store_true",
                   help="search for certified generic parameters (default)")
    p.add_argument("--tau", nargs=3, type=int, metavar=("A", "B", "C"),
                   help="restrict --auto to the class of this triple mod 4, up to sign")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: $%s or the CPU count)" % JOBS_ENV)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quaddt", description="Quadratic DT series of toric threefolds.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="validate a fan and its orientation criterion")
    p.add_argument("fan")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="quadratic DT series of a fan")
    p.add_argument("fan")
    p.add_argument("--max-order", type=int, default=8)
    _add_weights(p)
    _add_common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("vertex", help="vertex measure at explicit weights")
    p.add_argument("--weights", nargs=3, type=int, required=True, metavar=("S1", "S2", "S3"))
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--classical", action="store_true", help="unsigned measure, every power of q")
    _add_common(p)
    p.set_defaults(func=cmd_vertex)

    p = sub.add_parser("blowup", help="equivariant star subdivision at one orbit")
    p.add_argument("fan")
    p.add_argument("--cone-orbit", type=int, required=True,
                   help="index into the list of orbit representatives")
    p.add_argument("--out", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("oracle", help="brute-force localization sum at one colength")
    p.add_argument("fan")
    p.add_argument("--n", type=int, required=True)
    _add_weights(p)
    _add_common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.perf_counter()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="quaddt: %(levelname)s: %(message)s")
    if hasattr(args, "jobs") and args.jobs is None:
        args.jobs = _default_jobs()
    if getattr(args, "tau", None) is not None and getattr(args, "weights", None):
        if tau_class(*args.tau) != tau_class(*args.weights):
            parser.error("--weights do not lie in the requested --tau class")
    try:
        status = args.func(args)
    except CLIError as exc:
        if getattr(args, "format", "table") == "structured":
            _emit({**exc.payload, "manifest": _manifest(args, args.command)})
        print("quaddt: error: %s" % exc, file=sys.stderr)
        return exc.status
    log.info("%s finished in %.3fs", args.command, time.perf_counter() - args._t0)
    return status


if __name__ == "__main__":
    sys.exit(main())
