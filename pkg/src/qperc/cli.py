"""Command-line interface.

Subcommands: simulate, sweep, gen-data, train, render. Every command is
deterministic given its full flag set; when --seed is omitted the QPERC_SEED
environment variable is consulted, and 0 is the fallback. Exit codes: 0 on
success, 2 for usage or validation problems, 1 for internal errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dataset import generate_dataset, load_dataset, save_dataset
from .ioutil import atomic_write_bytes, atomic_write_text
from .perceptron import MAX_DATA_QUBITS, MODES, PerceptronConfig, measure
from .render import RENDER_FORMATS, pattern_grid, render_ascii, render_pgm
from .sweep import (
    MAX_SWEEP_QUBITS,
    SWEEP_FORMATS,
    compute_sweep,
    sample_sweep_cells,
    save_sweep,
)
from .training import CONVERGENCE_MODES, TrainConfig, save_trace, train

ENV_SEED = "QPERC_SEED"


class _UsageError(Exception):
    pass


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_SEED)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{ENV_SEED} must be an integer, got {raw!r}") from None


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_DATA_QUBITS:
        raise _UsageError(f"--n must be between 1 and {MAX_DATA_QUBITS}, got {n}")


def _check_value_flag(value: int, n: int, flag: str) -> None:
    top = (1 << (1 << n)) - 1
    if not 0 <= value <= top:
        raise _UsageError(f"{flag} must be in [0, {top}] for n={n}, got {value}")


def _perceptron_config(args: argparse.Namespace) -> PerceptronConfig:
    _check_n(args.n)
    if args.shots < 1:
        raise _UsageError(f"--shots must be at least 1, got {args.shots}")
    return PerceptronConfig(
        n=args.n,
        shots=args.shots,
        mode=args.mode,
        seed=_resolve_seed(args.seed),
    )


def cmd_simulate(args: argparse.Namespace) -> int:
    config = _perceptron_config(args)
    _check_value_flag(args.input, args.n, "--input")
    _check_value_flag(args.weight, args.n, "--weight")
    p = measure(args.input, args.weight, config)
    print(format(p, ".12g"))
    return 0


def _write_sampled_cells(cells, config, seed, path, fmt) -> None:
    if fmt == "csv":
        lines = ["input,weight,probability"]
        for i, w, p in cells:
            lines.append(f"{i},{w},{format(p, '.12g')}")
        atomic_write_text(path, "\n".join(lines) + "\n")
        return
    payload = {
        "n": config.n,
        "mode": config.mode,
        "shots": config.shots,
        "seed": seed,
        "cells": [[i, w, float(format(p, ".12g"))] for i, w, p in cells],
    }
    atomic_write_text(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _perceptron_config(args)
    if args.force_sample is not None:
        if args.force_sample < 1:
            raise _UsageError(
                f"--force-sample must be at least 1, got {args.force_sample}"
            )
        cells = sample_sweep_cells(config, args.force_sample, config.seed)
        _write_sampled_cells(cells, config, config.seed, args.out, args.format)
        print(f"wrote {len(cells)} sampled cells to {args.out}")
        return 0
    if args.n > MAX_SWEEP_QUBITS:
        size = 1 << (1 << args.n)
        raise _UsageError(
            f"--n {args.n} means a {size}x{size} exhaustive sweep, which is "
            f"refused (supported up to --n {MAX_SWEEP_QUBITS}); pass "
            f"--force-sample COUNT to emit a random subsample instead"
        )
    sweep = compute_sweep(config)
    save_sweep(sweep, args.out, args.format)
    if sweep.max_abs_deviation is not None:
        print(
            "oracle check: max |circuit - closed form| = "
            f"{sweep.max_abs_deviation:.3e}"
        )
    size = sweep.probs.shape[0]
    print(f"wrote {size}x{size} sweep to {args.out}")
    return 0


def cmd_gen_data(args: argparse.Namespace) -> int:
    config = _perceptron_config(args)
    _check_value_flag(args.weight, args.n, "--weight")
    dataset = generate_dataset(args.weight, config)
    save_dataset(dataset, args.out)
    ones = sum(ex.label for ex in dataset.examples)
    print(f"wrote {len(dataset.examples)} rows ({ones} labeled 1) to {args.out}")
    return 0


def cmd_train(args: argparse.Namespace) -> int:
    dataset = load_dataset(args.data)
    seed = _resolve_seed(args.seed)
    optimal = args.optimal_weight
    if optimal is None:
        optimal = dataset.optimal_weight
    _check_value_flag(optimal, dataset.n, "--optimal-weight")
    if not 0.0 < args.lr <= 1.0:
        raise _UsageError(f"--lr must be in (0, 1], got {args.lr}")
    if args.max_epochs < 1:
        raise _UsageError(f"--max-epochs must be at least 1, got {args.max_epochs}")
    measurement = PerceptronConfig(
        n=dataset.n, shots=dataset.shots, mode=dataset.mode, seed=seed
    )
    config = TrainConfig(
        n=dataset.n,
        measurement=measurement,
        learning_rate=args.lr,
        max_epochs=args.max_epochs,
        seed=seed,
        convergence_mode=args.convergence,
    )
    result = train(dataset, optimal, config)
    if args.trace_out:
        save_trace(result.trace, args.trace_out)
    updates = sum(1 for step in result.trace if step.action != "none")
    print(f"converged: {result.converged}")
    print(f"final weight: {result.final_weight}")
    print(f"epochs run: {result.epochs_run}")
    print(f"updates applied: {updates}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    _check_n(args.n)
    _check_value_flag(args.value, args.n, "--value")
    grid = pattern_grid(args.value, args.n, args.rows, args.cols)
    if args.format == "ascii":
        text = render_ascii(grid)
        if args.out in (None, "-"):
            print(text)
        else:
            atomic_write_text(args.out, text + "\n")
    else:
        data = render_pgm(grid)
        if args.out in (None, "-"):
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            atomic_write_bytes(args.out, data)
    return 0


def _add_measure_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--mode", choices=MODES, default="exact")
    sub.add_argument("--shots", type=int, default=8192)
    sub.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"RNG seed (default: ${ENV_SEED}, then 0)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qperc",
        description="Quantum perceptron simulator",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sim = subs.add_parser("simulate", help="evaluate one (input, weight) pair")
    sim.add_argument("--n", type=int, required=True)
    sim.add_argument("--input", type=int, required=True)
    sim.add_argument("--weight", type=int, required=True)
    _add_measure_flags(sim)
    sim.set_defaults(handler=cmd_simulate)

    swp = subs.add_parser("sweep", help="probability matrix over all pairs")
    swp.add_argument("--n", type=int, required=True)
    swp.add_argument("--out", required=True)
    swp.add_argument("--format", choices=SWEEP_FORMATS, default="csv")
    swp.add_argument(
        "--force-sample",
        type=int,
        default=None,
        metavar="COUNT",
        help="emit COUNT random cells instead of the full matrix",
    )
    _add_measure_flags(swp)
    swp.set_defaults(handler=cmd_sweep)

    gen = subs.add_parser("gen-data", help="exhaustive labeled dataset")
    gen.add_argument("--n", type=int, default=4)
    gen.add_argument("--weight", type=int, default=626)
    gen.add_argument("--out", required=True)
    _add_measure_flags(gen)
    gen.set_defaults(handler=cmd_gen_data)

    trn = subs.add_parser("train", help="bit-flip training against a dataset")
    trn.add_argument("--data", required=True)
    trn.add_argument(
        "--optimal-weight",
        type=int,
        default=None,
        help="convergence target (default: the dataset's own weight)",
    )
    trn.add_argument("--lr", type=float, default=0.5)
    trn.add_argument("--max-epochs", type=int, default=1000)
    trn.add_argument("--seed", type=int, default=None)
    trn.add_argument("--convergence", choices=CONVERGENCE_MODES, default="functional")
    trn.add_argument("--trace-out", default=None)
    trn.set_defaults(handler=cmd_train)

    ren = subs.add_parser("render", help="draw a value's bit pattern")
    ren.add_argument("--value", type=int, required=True)
    ren.add_argument("--n", type=int, required=True)
    ren.add_argument("--rows", type=int, default=None)
    ren.add_argument("--cols", type=int, default=None)
    ren.add_argument("--format", choices=RENDER_FORMATS, default="ascii")
    ren.add_argument("--out", default=None, help="output path ('-' for stdout)")
    ren.set_defaults(handler=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (_UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
