"""Command-line front end.

Subcommands: integrate, classify, metric, report, verify, energy, catalog.
Numeric output is deterministic (17 significant digits); data goes to
stdout or --out, diagnostics to stderr (level set by SOLITON_LOG).
Exit codes: 0 success, 1 argument/usage errors, 2 numerical failures.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys

import numpy as np

from . import geometry, ode, taxonomy, variational, verify
from .errors import SolitonError

log = logging.getLogger("soliton")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; the contract here is exit 1
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _fmt(x) -> str:
    if isinstance(x, float):
        if math.isnan(x):
            return '"nan"'
        if math.isinf(x):
            return '"inf"' if x > 0 else '"-inf"'
        return format(x, ".17g")
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if x is None:
        return "null"
    if isinstance(x, str):
        return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(x, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    if isinstance(x, dict):
        return "{" + ", ".join(f'{_fmt(str(k))}: {_fmt(v)}' for k, v in x.items()) + "}"
    if isinstance(x, np.floating):
        return _fmt(float(x))
    raise TypeError(f"cannot serialize {type(x)!r}")


def _json(obj) -> str:
    return _fmt(obj) + "\n"


def _load_config(path: str) -> dict:
    """Read ``key = value`` lines; '#' starts a comment."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise _UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = val
    return out


_NUMERIC_KEYS = {
    "lam", "mu", "a0", "t0", "b0", "nu", "tol", "eps", "r0", "b0", "h",
}
_PAIR_KEYS = {"window", "r_range"}
_INT_KEYS = {"samples"}


def _coerce(key: str, val: str):
    if key in _INT_KEYS:
        try:
            return int(val)
        except ValueError:
            raise _UsageError(f"--{key}: {val!r} is not an integer") from None
    if key in _PAIR_KEYS:
        parts = val.split(",")
        if len(parts) != 2:
            raise _UsageError(f"--{key} expects two comma-separated numbers")
        return (_parse_real(parts[0], key), _parse_real(parts[1], key))
    if key in _NUMERIC_KEYS:
        return _parse_real(val, key)
    return val


def _parse_real(text: str, key: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise _UsageError(f"--{key}: {text!r} is not a number") from None
    if math.isnan(v):
        raise _UsageError(f"--{key} must not be NaN")
    return v


def _build_parser() -> _Parser:
    p = _Parser(prog="soliton", description=__doc__, add_help=True)
    sub = p.add_subparsers(dest="subcommand")

    def add(name, helptext, flags):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--config", default=None, help="key = value file; flags override")
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        sp.add_argument("--out", default=None, help="write output to this file")
        for flag in flags:
            sp.add_argument(flag, default=None)
        return sp

    add("integrate", "integrate a profile through an anchor",
        ["--lambda", "--mu", "--a0", "--t0", "--window", "--tol", "--samples"])
    add("classify", "family tag of the branch through an anchor",
        ["--lambda", "--mu", "--a0", "--t0", "--tol"])
    add("metric", "reconstruct the warped metric on an r-window",
        ["--lambda", "--mu", "--a0", "--t0", "--b0", "--r0",
         "--r-range", "--samples", "--tol"])
    add("report", "completeness / curvature / end-structure report",
        ["--lambda", "--mu", "--a0", "--t0", "--tol"])
    add("verify", "soliton-equation residuals of the reconstructed metric",
        ["--lambda", "--mu", "--a0", "--t0", "--b0", "--r0",
         "--r-range", "--samples", "--tol"])
    add("energy", "curvature-entropy window report (variation + conservation)",
        ["--lambda", "--mu", "--a0", "--t0", "--b0", "--r0", "--r-range",
         "--window", "--samples", "--eps", "--tol"])
    cat = add("catalog", "canonical family representatives",
              ["--family", "--nu", "--samples"])
    cat.add_argument("--list", action="store_true", dest="list_families")
    return p


def _merge_options(args: argparse.Namespace) -> dict:
    opts = {}
    if getattr(args, "config", None):
        for key, val in _load_config(args.config).items():
            key = "lam" if key == "lambda" else key
            opts[key] = _coerce(key, val)
    for key, val in vars(args).items():
        if key in ("config",) or val is None:
            continue
        key = "lam" if key == "lambda" else key
        opts[key] = _coerce(key, val) if isinstance(val, str) and key not in ("format", "out", "subcommand", "family") else val
    return opts


def _require(opts: dict, *keys):
    missing = [k for k in keys if k not in opts]
    if missing:
        flags = ", ".join("--" + ("lambda" if k == "lam" else k.replace("_", "-")) for k in missing)
        raise _UsageError(f"missing required option(s): {flags}")


def _profile_from(opts: dict) -> ode.ProfileA:
    _require(opts, "lam", "mu", "a0")
    params = ode.make_params(opts["lam"], opts["mu"])
    t0 = opts.get("t0", 0.0)
    window = opts.get("window", (-math.inf, math.inf))
    tol = opts.get("tol", ode.DEFAULT_TOL)
    return ode.integrate_profile(params, t0, opts["a0"], window, tol=tol)


def _metric_from(opts: dict) -> geometry.WarpedMetric:
    prof = _profile_from(opts)
    b0 = opts.get("b0", 0.0)
    r0 = opts.get("r0", 0.0)
    rr = opts.get("r_range", (0.0, 5.0))
    n = opts.get("samples", 2001)
    return geometry.build_warped_metric(prof, (r0, b0), rr, n_samples=n)


def _emit(text: str, opts: dict):
    out = opts.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %d bytes to %s", len(text), out)
    else:
        sys.stdout.write(text)


def _end_json(desc: geometry.EndDescriptor) -> dict:
    return desc.to_json_dict()


def _profile_json(prof: ode.ProfileA, n: int) -> dict:
    ts = prof.sample_grid(n)
    av = np.atleast_1d(prof.a(ts))
    return {
        "lambda": prof.params.lam,
        "mu": prof.params.mu,
        "gamma": "inf" if math.isinf(prof.params.gamma) else prof.params.gamma,
        "t0": prof.t0,
        "t1": prof.t1,
        "tag0": str(prof.tag0),
        "tag1": str(prof.tag1),
        "samples": [{"t": float(t), "a": float(a)} for t, a in zip(ts, av)],
    }


def run(argv: list[str]) -> int:
    """Dispatch a command line; returns the exit code."""
    level = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("SOLITON_LOG", "quiet"), logging.ERROR
    )
    logging.basicConfig(stream=sys.stderr, level=level, format="soliton: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand is None:
            raise _UsageError(parser.format_usage())
        opts = _merge_options(args)
        cmd = args.subcommand
        fmt = opts.get("format") or "json"

        if cmd == "integrate":
            prof = _profile_from(opts)
            n = opts.get("samples", 0)
            if fmt == "csv":
                _emit(prof.to_csv(n), opts)
            else:
                _emit(_json(_profile_json(prof, n)), opts)
        elif cmd == "classify":
            prof = _profile_from(opts)
            label = taxonomy.classify(prof)
            payload = {"family": label.tag}
            if label.t0_estimate is not None:
                payload["t0_estimate"] = label.t0_estimate
                payload["t0_uncertainty"] = label.t0_uncertainty
            payload["lambda"] = prof.params.lam
            payload["mu"] = prof.params.mu
            payload["gamma"] = "inf" if math.isinf(prof.params.gamma) else prof.params.gamma
            _emit(_json(payload), opts)
        elif cmd == "metric":
            metric = _metric_from(opts)
            if fmt == "csv":
                _emit(metric.to_csv(), opts)
            else:
                rows = [
                    {"r": float(r), "b": float(b), "db_dr": float(bp), "K": float(K)}
                    for r, b, bp, K in zip(metric.r, metric.b, metric.b_prime, metric.K)
                ]
                _emit(_json({"samples": rows}), opts)
        elif cmd == "report":
            prof = _profile_from(opts)
            rep = geometry.geometry_report(prof)
            _emit(_json(rep.to_json_dict()), opts)
        elif cmd == "verify":
            metric = _metric_from(opts)
            rep = verify.soliton_residual(metric)
            _emit(_json(rep.to_json_dict()), opts)
        elif cmd == "energy":
            band = opts.pop("window", None)  # r-band; the profile uses its maximal t-window
            metric = _metric_from(opts)
            window = band if band is not None else (float(metric.r[0]), float(metric.r[-1]))
            pad = 0.05 * (window[1] - window[0])
            v = variational.bump_variation((window[0] + pad, window[1] - pad), psi_amp=0.1)
            rep = variational.variation_report(metric, v, eps=opts.get("eps", 1e-4))
            rep["energy"] = variational.energy(metric, window)
            _emit(_json(rep), opts)
        elif cmd == "catalog":
            if opts.get("list_families"):
                _emit(_json(taxonomy.catalog_listing()), opts)
            else:
                _require(opts, "family", "nu")
                tag = str(opts["family"]).upper()
                aliases = {"G1": "G1_CIGAR", "G2": "G2_EXPLODING"}
                tag = aliases.get(tag, tag)
                entry = taxonomy.catalog(tag, opts["nu"])
                rep = geometry.geometry_report(entry.profile)
                payload = {
                    "family": entry.family.tag,
                    "nu": entry.nu,
                    "lambda": entry.params.lam,
                    "mu": entry.params.mu,
                    "gamma": "inf" if math.isinf(entry.params.gamma) else entry.params.gamma,
                    "normalization": entry.normalization_note,
                    "report": rep.to_json_dict(),
                }
                _emit(_json(payload), opts)
        return 0
    except _UsageError as exc:
        sys.stderr.write(str(exc).rstrip() + "\n")
        return 1
    except SolitonError as exc:
        code = type(exc).code
        if exc.usage:
            sys.stderr.write(f"soliton: {code}: {exc}\n")
            return 1
        sys.stderr.write(f"soliton: numerical failure {code}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"soliton: {exc}\n")
        return 1
    except Exception as exc:  # defensive: surface, never traceback
        sys.stderr.write(f"soliton: internal failure in {args.subcommand!r}: {exc!r}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
