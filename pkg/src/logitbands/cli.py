"""Command-line interface.

Exit codes: 0 success, 1 example check failed, 2 usage error, 3 input
error, 4 fit error, 5 geometry error, 6 solver error, 7 simulation error.

``--data @lavelle`` selects the bundled mutagenicity data set.  Relative
``--output`` paths are resolved under ``$LOGITBANDS_OUTPUT_DIR`` when set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

from . import __version__
from .bands import BandSpec, build_band
from .critical import solve_critical
from .data import bundled_lavelle_dataset, read_dataset
from .errors import BandsError, InputError, SimulationError
from .example import format_report, lavelle_report
from .geometry import interval_cone_angle, unrestricted_angle
from .glm import FitConfig, Link, fit
from .montecarlo import (
    CoverageReport,
    SimConfig,
    published_error,
    reports_to_csv,
    simulate_coverage,
    sweep_configs,
)

OUTPUT_DIR_ENV = "LOGITBANDS_OUTPUT_DIR"
BUNDLED = "@lavelle"
_SIDES = {"two": "two_sided", "one": "one_sided", "upper": "upper", "lower": "lower"}


def _parse_interval(text: str):
    """``a:b`` or ``unrestricted``; returns None for the latter."""
    if text.strip().lower() == "unrestricted":
        return None
    try:
        a, b = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"interval must be 'a:b' or 'unrestricted', got {text!r}") from None
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise argparse.ArgumentTypeError(f"interval needs finite a < b, got {text!r}")
    return (a, b)


def _parse_sim_interval(text: str):
    if text in ("narrow", "wide", "unrestricted"):
        return text
    return _parse_interval(text)


def _alpha(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 0.5:
        raise argparse.ArgumentTypeError(f"alpha must be in (0, 0.5), got {text}")
    return value


def _load(args):
    if args.data == BUNDLED:
        return bundled_lavelle_dataset()
    try:
        return read_dataset(args.data, args.schema)
    except OSError as exc:
        raise InputError(f"cannot read {args.data}: {exc.strerror or exc}") from None


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _add_data_args(p, required=True):
    p.add_argument("--data", required=required, help=f"CSV file, or {BUNDLED} for the bundled data")
    p.add_argument("--schema", choices=("binomial", "bernoulli"), default="binomial")
    p.add_argument("--link", choices=[l.value for l in Link], default="logit")


def _add_output_args(p, formats, default):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", "-o", help="output path (default: stdout)")


def cmd_fit(args) -> int:
    model = fit(args.link, _load(args), FitConfig(tol=args.tol, max_iter=args.max_iter))
    if args.format == "json":
        _emit(_dumps(model.to_dict()), args.output)
    else:
        v = model.info_inv
        _emit("\n".join([
            f"link          {model.link.value}",
            f"beta0         {model.beta_hat.beta0:.6f}",
            f"beta1         {model.beta_hat.beta1:.6f}",
            f"cov           [[{v[0, 0]:.6f}, {v[0, 1]:.6f}],",
            f"               [{v[1, 0]:.6f}, {v[1, 1]:.6f}]]",
            f"log_lik       {model.log_lik:.6f}",
            f"iterations    {model.iterations}",
            f"max |score|   {model.max_abs_score:.3g}",
            f"converged     {model.converged}",
        ]), args.output)
    return 0


def cmd_critical(args) -> int:
    side = _SIDES[args.side]
    level = 1.0 - args.alpha
    out = {"alpha": args.alpha, "side": side}
    if args.phi is not None:
        phi = args.phi
        out["source"] = "phi"
    else:
        if args.data is None or args.interval is False:
            raise InputError("critical needs either --phi or both --data and --interval")
        model = fit(args.link, _load(args))
        cone = unrestricted_angle() if args.interval is None else interval_cone_angle(model.info_inv, *args.interval)
        phi = cone.phi
        out.update(source="data", link=model.link.value,
                   interval=None if args.interval is None else list(args.interval),
                   u_a=cone.to_dict()["u_a"], u_b=cone.to_dict()["u_b"])
    crit = solve_critical(phi, level, side)
    out.update(crit.to_dict())
    if args.format == "json":
        _emit(_dumps(out), args.output)
    else:
        _emit(f"w = {crit.w:.6f}   phi = {crit.phi:.6f}   coverage = {crit.achieved_coverage:.12f}", args.output)
    return 0


def cmd_band(args) -> int:
    data = _load(args)
    model = fit(args.link, data)
    spec = BandSpec(args.interval, _SIDES[args.side], 1.0 - args.alpha)
    x_range = None
    if args.interval is None:
        x_range = (float(data.x.min()), float(data.x.max()))
    curve = build_band(model, spec, args.grid, x_range)
    _emit(curve.to_json(indent=2) if args.format == "json" else curve.to_csv(), args.output)
    return 0


def cmd_simulate(args) -> int:
    if args.sweep:
        configs = sweep_configs(args.sweep if args.sweep == "equal" else "endpoint_concentrated",
                                replications=args.replications, seed=args.seed)
        if args.sweep == "concentrated":
            configs += sweep_configs("center_concentrated", replications=args.replications,
                                     seed=args.seed + len(configs))
        _emit(_run_sweep(configs, args.workers, args.format), args.output)
        return 0

    if args.beta0 is None or args.beta1 is None or args.n is None:
        raise InputError("simulate needs --beta0, --beta1 and --n (or --sweep)")
    config = SimConfig(
        beta_true=(args.beta0, args.beta1), n=args.n, replications=args.replications,
        alpha=args.alpha, link=args.link, interval=args.interval, design=args.design,
        side=_SIDES[args.side], seed=args.seed, generator=args.generator,
    )
    report = simulate_coverage(config, workers=args.workers)
    _emit(_dumps(report.to_dict()) if args.format == "json" else reports_to_csv([report]), args.output)
    return 0


def _run_sweep(configs, workers: int, fmt: str) -> str:
    # A cell whose every replication fails is reported with empty error fields
    # instead of aborting the remaining cells.
    results = []
    for c in configs:
        try:
            results.append((c, simulate_coverage(c, workers=workers), None))
        except SimulationError as exc:
            results.append((c, None, str(exc)))
    if fmt == "json":
        payload = []
        for c, rep, err in results:
            entry = rep.to_dict() if rep is not None else {"config": c.to_dict(), "error": err}
            payload.append({**entry, "published_error": published_error(c)})
        return _dumps(payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow((*CoverageReport.CSV_COLUMNS, "published_error"))
    for c, rep, _ in results:
        if rep is not None:
            row = list(rep.csv_row())
        else:
            row = list(CoverageReport(0.0, 0.0, 0, c.replications, 0, c.seed, c.to_dict()).csv_row())
            row[9:12] = ["", "", 0]
        ref = published_error(c)
        writer.writerow((*row, "" if ref is None else repr(ref)))
    return buf.getvalue()


def cmd_example(args) -> int:
    rows = lavelle_report()
    if args.format == "json":
        _emit(_dumps([r.to_dict() for r in rows]), args.output)
    else:
        _emit(format_report(rows), args.output)
    return 0 if all(r.passed for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logitbands",
        description="Simultaneous confidence bands for logistic and probit regression over an interval.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="maximum-likelihood fit")
    _add_data_args(p)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=100)
    _add_output_args(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("critical", help="critical value for a cone angle or a fitted interval")
    p.add_argument("--phi", type=float, help="cone angle in radians (0, pi]")
    _add_data_args(p, required=False)
    p.add_argument("--interval", type=_parse_interval, default=False, help="a:b or unrestricted")
    p.add_argument("--alpha", type=_alpha, default=0.05)
    p.add_argument("--side", choices=("two", "one"), default="two")
    _add_output_args(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("band", help="export a band curve")
    _add_data_args(p)
    p.add_argument("--interval", type=_parse_interval, required=True, help="a:b or unrestricted")
    p.add_argument("--alpha", type=_alpha, default=0.05)
    p.add_argument("--side", choices=("two", "upper", "lower"), default="two")
    p.add_argument("--grid", type=int, default=201)
    _add_output_args(p, ("csv", "json"), "csv")
    p.set_defaults(func=cmd_band)

    p = sub.add_parser("simulate", help="Monte Carlo coverage error")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--beta0", type=float)
    p.add_argument("--beta1", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--replications", type=int, default=5000)
    p.add_argument("--alpha", type=_alpha, default=0.05)
    p.add_argument("--link", choices=[l.value for l in Link], default="logit")
    p.add_argument("--interval", type=_parse_sim_interval, default="wide",
                   help="narrow, wide, unrestricted or a:b")
    p.add_argument("--design", choices=("equal", "endpoint_concentrated", "center_concentrated"),
                   default="equal")
    p.add_argument("--side", choices=("two", "one"), default="two")
    p.add_argument("--generator", choices=("model", "literal"), default="model")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sweep", choices=("equal", "concentrated"),
                   help="run every cell of the logistic coverage study (slow)")
    _add_output_args(p, ("json", "csv"), "json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("example", help="reproduce the mutagenicity example")
    _add_output_args(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_example)
    return parser


def _join_interval_values(argv: list[str]) -> list[str]:
    # argparse reads "-1.3:0.8" as an option flag; glue it to its option.
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--interval" and i + 1 < len(argv):
            out.append(f"--interval={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_interval_values(argv))
    try:
        return args.func(args)
    except BandsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return InputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
