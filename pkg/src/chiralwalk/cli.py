"""Command-line entry point: ``chiralwalk <subcommand> ...``.

Tabular output is CSV, single records are JSON.  On failure the last line
on stderr is a JSON object ``{"error": ..., "message": ...}`` and the exit
code is nonzero.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .asymptotics import asymptotic_invariants, asymptotic_state
from .errors import ChiralWalkError
from .gaussian import build_gaussian_state, design_from_entropy, predict_asymptotics
from .markov import markov_closed_form
from .observables import ChiralityDist, reduced_density
from .runner import (
    EVOLUTION_COLUMNS,
    InitSpec,
    RunConfig,
    detect_t0,
    read_csv,
    run_evolution,
    sweep_entropy_surface,
    write_csv,
)
from .walk import CoinParams, position_spread


def _emit_json(record: dict, path: Optional[str]) -> None:
    text = json.dumps(record, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _complex(text: str) -> complex:
    return complex(text.replace(" ", ""))


def _add_init_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("initial state")
    g.add_argument("--init", dest="kind", choices=["localized", "gaussian", "designed"])
    g.add_argument("--c-left", type=_complex, help="localized: left coin amplitude, e.g. 0.7071")
    g.add_argument("--c-right", type=_complex, help="localized: right coin amplitude, e.g. 0.7071j")
    g.add_argument("--site", type=int)
    g.add_argument("--sigma0", type=float)
    g.add_argument("--k0", type=int)
    g.add_argument("--alpha", type=float)
    g.add_argument("--pi-left", type=float, help="gaussian: cos^2(alpha), alternative to --alpha")
    g.add_argument("--delta", type=float, help="gaussian: phase; solved from theta if omitted")
    g.add_argument("--s0", dest="s0_target", type=float, help="designed: target entropy")
    g.add_argument("--branch", choices=["left", "right"])


def _init_overrides(args: argparse.Namespace) -> dict:
    keys = ("kind", "c_left", "c_right", "site", "sigma0", "k0", "alpha", "pi_left",
            "delta", "s0_target", "branch")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def _cmd_evolve(args: argparse.Namespace) -> None:
    data: dict = {}
    if args.config:
        with open(args.config) as fh:
            data = json.load(fh)
    init = dict(data.get("init", {}))
    init.update(_init_overrides(args))
    for key in ("c_left", "c_right"):
        if isinstance(init.get(key), complex):
            init[key] = [init[key].real, init[key].imag]
    data["init"] = init
    for key, attr in (("theta", "theta"), ("max_time", "max_time"),
                      ("record_stride", "stride"), ("output", "output"),
                      ("window", "window"), ("epsilon", "epsilon")):
        value = getattr(args, attr)
        if value is not None:
            data[key] = value
    if "theta" not in data:
        raise ValueError("theta is required (flag --theta or config field)")
    config = RunConfig.from_dict(data)
    result = run_evolution(config)
    if config.output is None:
        rows = ([int(r[0]), *r[1:]] for r in result.table)
        write_csv(None, EVOLUTION_COLUMNS, rows, stream=sys.stdout)
    if args.report:
        series = result.column("p_left")
        report = detect_t0(series, config.epsilon, config.window, times=result.column("t"))
        _emit_json(report.to_dict(), None if args.report == "-" else args.report)


def _cmd_markov(args: argparse.Namespace) -> None:
    coin = CoinParams(args.theta)
    init = ChiralityDist.from_left(args.p_left0)
    rows = []
    for t in range(0, args.steps + 1, args.stride):
        d = markov_closed_form(init, args.q, coin, t)
        rows.append((t, d.p_left, d.p_right))
    write_csv(args.output, ("t", "p_left", "p_right"), rows, stream=sys.stdout)


def _cmd_asymptotic(args: argparse.Namespace) -> None:
    coin = CoinParams(args.theta)
    spec = InitSpec.from_dict({"kind": "gaussian", **_init_overrides(args)})
    params = spec.gaussian_params(coin)
    init = build_gaussian_state(params)
    state = asymptotic_state(init, coin, args.time)
    rc = reduced_density(state)
    inv = asymptotic_invariants(init)
    record = {
        "t": args.time,
        "theta": coin.theta,
        "sigma0": params.sigma0,
        "k0": params.k0,
        "alpha": params.alpha,
        "delta": params.delta,
        "p_left": rc.p_left,
        "p_right": rc.p_right,
        "re_q": rc.q.real,
        "im_q": rc.q.imag,
        "norm": state.norm(),
        "sigma": position_spread(state),
        "pi_left": inv.pi_left,
        "pi_right": inv.pi_right,
        "re_q0": inv.q0.real,
        "im_q0": inv.q0.imag,
    }
    if args.amplitudes:
        rows = zip(state.sites, state.left_amp.real, state.left_amp.imag,
                   state.right_amp.real, state.right_amp.imag)
        write_csv(args.amplitudes, ("site", "re_a", "im_a", "re_b", "im_b"), rows)
    _emit_json(record, args.output)


def _cmd_design(args: argparse.Namespace) -> None:
    coin = CoinParams(args.theta)
    params = design_from_entropy(args.s0, coin, args.branch, args.sigma0, args.k0)
    pred = predict_asymptotics(params.alpha, coin)
    record = {
        "s0_target": args.s0,
        "theta": coin.theta,
        "branch": args.branch,
        "sigma0": params.sigma0,
        "k0": params.k0,
        "alpha": params.alpha,
        "delta": params.delta,
        "pi_left": pred.pi_left,
        "pi_right": pred.pi_right,
        "re_q0": pred.q0.real,
        "lambda_plus": pred.lambda_plus,
        "lambda_minus": pred.lambda_minus,
        "s0": pred.s0,
        "s_shannon": pred.s_shannon,
    }
    _emit_json(record, args.output)


def _cmd_sweep(args: argparse.Namespace) -> None:
    thetas = list(args.theta or [])
    thetas += [f * math.pi for f in (args.theta_over_pi or [])]
    if not thetas:
        thetas = [math.pi / 6, math.pi / 4, math.pi / 3]
    grid = np.linspace(0.0, 1.0, args.n_pi)
    table = sweep_entropy_surface(thetas, grid, args.output)
    if args.output is None:
        write_csv(None, ("theta", "pi_left", "s0", "feasible"),
                  ([*r[:3], int(r[3])] for r in table), stream=sys.stdout)


def _cmd_detect(args: argparse.Namespace) -> None:
    cols = read_csv(args.input)
    if args.column not in cols:
        raise ValueError(f"column {args.column!r} not in {sorted(cols)}")
    times = cols.get("t")
    report = detect_t0(cols[args.column], args.epsilon, args.window,
                       times=None if times is None else times.astype(np.int64))
    _emit_json(report.to_dict(), args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chiralwalk",
        description="Chirality distribution and coin-position entanglement of the quantum walk on the line.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="run the exact walk and record observables as CSV")
    p.add_argument("--config", help="JSON file with RunConfig fields")
    p.add_argument("--theta", type=float)
    p.add_argument("--max-time", type=int)
    p.add_argument("--stride", type=int)
    p.add_argument("--output", help="CSV path (stdout if omitted)")
    p.add_argument("--window", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--report", help="also detect t0 on p_left and write JSON here ('-' for stdout)")
    _add_init_flags(p)
    p.set_defaults(func=_cmd_evolve)

    p = sub.add_parser("markov", help="closed-form chirality trajectory for constant Re Q")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--p-left0", type=float, required=True)
    p.add_argument("--q", type=float, default=0.0, help="constant Re Q")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_markov)

    p = sub.add_parser("asymptotic", help="Bessel-kernel approximation at time t for a Gaussian start")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--time", type=int, required=True)
    p.add_argument("--amplitudes", help="optional CSV of the approximated amplitudes")
    p.add_argument("--output", help="JSON path (stdout if omitted)")
    _add_init_flags(p)
    p.set_defaults(func=_cmd_asymptotic)

    p = sub.add_parser("design", help="initial Gaussian parameters for a target asymptotic entropy")
    p.add_argument("--s0", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--branch", choices=["left", "right"], default="left")
    p.add_argument("--sigma0", type=float, default=100.0)
    p.add_argument("--k0", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_design)

    p = sub.add_parser("sweep", help="S0 over a (theta, Pi_L) grid as CSV")
    p.add_argument("--theta", type=float, action="append", help="radians; repeatable")
    p.add_argument("--theta-over-pi", type=float, action="append", help="theta/pi; repeatable")
    p.add_argument("--n-pi", type=int, default=201, help="number of Pi_L grid points in [0, 1]")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("detect", help="detect t0 in a CSV column")
    p.add_argument("--input", required=True)
    p.add_argument("--column", default="p_left")
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--window", type=int, default=50)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_detect)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ChiralWalkError, ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
