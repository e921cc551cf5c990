"""Command-line interface.

Four subcommands -- check, forecast, cost, simulate -- emit JSON (or CSV for
plotting) on stdout and human-readable diagnostics on stderr, so output can
be piped into other tools.  Exit codes: 0 on success / affirmative verdict,
1 on a negative verdict or a refused forecast, 2 on unusable input or bad
arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .cost import cost_band, load_events, load_rates, sample_costs, summarize_costs
from .forecast import ForecastBand, band
from .markov import MarkovVerdict, check_markov
from .rng import DEFAULT_SEED
from .series import load_series
from .simulate import run_calibration
from .swilk import RULE_PAPER_THRESHOLD, RULES

__all__ = ["main", "build_parser"]

_MODEL_NOTE = "with respect to the additive Gaussian white-noise model"


def _significance(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 0.5:
        raise argparse.ArgumentTypeError(
            f"significance level must satisfy 0 < p < 0.5, got {text}"
        )
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovband",
        description=(
            "Decide whether a numeric series is Markovian (its first "
            "differences pass a Shapiro-Wilk normality check), forecast it "
            "with square-root-law prediction bands, and convert the bands "
            "into schedule-interruption costs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_series(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="CSV file with the series")

    def add_rule(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--p",
            type=_significance,
            default=0.05,
            help="significance level in (0, 0.5) (default: 0.05)",
        )
        p.add_argument(
            "--rule",
            choices=RULES,
            default=RULE_PAPER_THRESHOLD,
            help=(
                "decision rule: compare W against 1-2p (paper-threshold) "
                "or the p-value against p (default: paper-threshold)"
            ),
        )

    p_check = sub.add_parser(
        "check", help="test whether the series passes the Markov check"
    )
    add_series(p_check)
    add_rule(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_forecast = sub.add_parser(
        "forecast", help="prediction band x0 +/- sqrt(k)*sigma for k=1..horizon"
    )
    add_series(p_forecast)
    add_rule(p_forecast)
    p_forecast.add_argument(
        "--horizon", type=_positive_int, default=12, help="steps ahead (default: 12)"
    )
    p_forecast.add_argument(
        "--format",
        choices=("json", "plot-csv"),
        default="json",
        help="output format (default: json)",
    )
    p_forecast.add_argument(
        "--force",
        action="store_true",
        help="emit the band even when the series fails the Markov check",
    )
    p_forecast.set_defaults(func=_cmd_forecast)

    p_cost = sub.add_parser(
        "cost", help="convert the prediction band into interruption costs"
    )
    add_series(p_cost)
    p_cost.add_argument(
        "--events", required=True, help="CSV file with monthly event counts"
    )
    p_cost.add_argument(
        "--rates", required=True, help="key=value file with per-event dollar rates"
    )
    p_cost.add_argument(
        "--horizon", type=_positive_int, default=12, help="steps ahead (default: 12)"
    )
    p_cost.add_argument(
        "--sample",
        type=_positive_int,
        default=None,
        metavar="N",
        help="also simulate N cost paths and report per-step mean/stddev",
    )
    p_cost.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"seed for --sample (default: {DEFAULT_SEED})",
    )
    p_cost.set_defaults(func=_cmd_cost)

    p_sim = sub.add_parser(
        "simulate",
        help="calibration run: acceptance rate and band coverage on true walks",
    )
    p_sim.add_argument(
        "--trials", type=_positive_int, default=2000, help="walks (default: 2000)"
    )
    p_sim.add_argument(
        "--length",
        type=_positive_int,
        default=50,
        help="observations per walk (default: 50)",
    )
    p_sim.add_argument(
        "--sigma", type=float, default=1.0, help="true noise scale (default: 1.0)"
    )
    p_sim.add_argument(
        "--horizon", type=_positive_int, default=12, help="steps ahead (default: 12)"
    )
    add_rule(p_sim)
    p_sim.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"default: {DEFAULT_SEED}"
    )
    p_sim.set_defaults(func=_cmd_simulate)

    return parser


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _verdict_payload(verdict: MarkovVerdict) -> dict:
    payload: dict = {
        "is_markov": verdict.is_markov,
        "w": verdict.sw.w,
        "threshold": verdict.sw.threshold,
        "rule": verdict.sw.rule,
    }
    if verdict.sw.p_value is not None:
        payload["p_value"] = verdict.sw.p_value
    payload.update(
        {
            "error_mean": verdict.error_mean,
            "error_stddev": verdict.error_stddev,
            "drift_warning": verdict.drift_warning,
            "n_errors": verdict.n_errors,
        }
    )
    return payload


def _cmd_check(args: argparse.Namespace) -> int:
    series = load_series(args.input)
    verdict = check_markov(series, p=args.p, rule=args.rule)
    _emit(_verdict_payload(verdict))
    word = "Markov" if verdict.is_markov else "not Markov"
    print(f"verdict: series is {word} {_MODEL_NOTE}", file=sys.stderr)
    if verdict.drift_warning:
        print(
            "warning: mean step is far from zero; bands assume driftless noise",
            file=sys.stderr,
        )
    return 0 if verdict.is_markov else 1


def _band_payload(b: ForecastBand) -> dict:
    return {
        "x0": b.x0,
        "sigma": b.sigma,
        "horizon": b.horizon,
        "bands": [
            {"k": int(k), "lower": float(lo), "upper": float(hi)}
            for k, lo, hi in zip(b.steps(), b.lower, b.upper)
        ],
    }


def _cmd_forecast(args: argparse.Namespace) -> int:
    series = load_series(args.input)
    verdict = check_markov(series, p=args.p, rule=args.rule)
    if not verdict.is_markov:
        if not args.force:
            print(
                f"refusing to forecast: series is not Markov {_MODEL_NOTE} "
                f"(W={verdict.sw.w:.6g}, threshold={verdict.sw.threshold:.6g}); "
                "pass --force to emit the band anyway",
                file=sys.stderr,
            )
            return 1
        print(
            f"warning: series failed the Markov check {_MODEL_NOTE}; "
            "band emitted because --force was given",
            file=sys.stderr,
        )
    b = band(series, args.horizon)
    if args.format == "plot-csv":
        print("k,lower,x0,upper")
        for k, lo, hi in zip(b.steps(), b.lower, b.upper):
            print(f"{int(k)},{float(lo)!r},{float(b.x0)!r},{float(hi)!r}")
    else:
        _emit(_band_payload(b))
    return 0


def _cmd_cost(args: argparse.Namespace) -> int:
    series = load_series(args.input)
    months = load_events(args.events)
    rates = load_rates(args.rates)
    summary = summarize_costs(months, rates)
    b = band(series, args.horizon)
    cb = cost_band(b, summary)
    payload = {
        "adc": summary.adc,
        "asc": summary.asc,
        "per_interruption": summary.per_interruption,
        "cost_bands": [
            {"k": k, "lower": float(lo), "upper": float(hi)}
            for k, (lo, hi) in enumerate(zip(cb.lower, cb.upper), start=1)
        ],
    }
    if args.sample is not None:
        costs = sample_costs(
            b.x0, b.sigma, b.horizon, summary, args.sample, args.seed
        )
        payload["samples_summary"] = {
            "count": args.sample,
            "seed": args.seed,
            "per_step": [
                {"k": k, "mean": float(m), "stddev": float(s)}
                for k, (m, s) in enumerate(
                    zip(costs.mean(axis=0), costs.std(axis=0, ddof=1)), start=1
                )
            ],
        }
    _emit(payload)
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    report = run_calibration(
        trials=args.trials,
        walk_length=args.length,
        sigma=args.sigma,
        horizon=args.horizon,
        p=args.p,
        rule=args.rule,
        seed=args.seed,
    )
    print(report.to_json())
    print(
        f"coverage is measured against +/- 1 sigma-hat bands {_MODEL_NOTE}; "
        "~0.68 per step is the calibrated value",
        file=sys.stderr,
    )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
