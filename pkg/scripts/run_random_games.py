#!/usr/bin/env python3
"""Benchmark sweep over random games.

Builds an experiment over seeded random instances, runs the configured
solvers on each, and writes the per-cell and aggregate CSV tables. The
aggregate table is also printed. Reruns with the same flags reproduce the
CSV files byte for byte (wall-clock timing is recorded only with --timing).

Example:
    python3 scripts/run_random_games.py --n 3 --m-values 3 5 --num-seeds 10 \
        --out-dir results/random-sweep
"""

import argparse
import pathlib
import sys

from teammax.metrics import (
    ExperimentConfig,
    GameSpec,
    SolverSpec,
    aggregate_rows,
    run_experiment,
    write_aggregate_csv,
    write_rows_csv,
)

SOLVERS = {
    "reconstruct": {},
    "iterated-lp": {"restarts": 5, "seed": 0},
    "support-enum": {"epsilon": 1.0},
}


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3, help="players per game")
    parser.add_argument(
        "--m-values",
        type=int,
        nargs="+",
        default=[3, 5, 10],
        help="action counts to sweep",
    )
    parser.add_argument(
        "--num-seeds", type=int, default=10, help="instances per cell"
    )
    parser.add_argument(
        "--solvers",
        nargs="+",
        choices=sorted(SOLVERS),
        default=sorted(SOLVERS),
    )
    parser.add_argument("--timeout", type=float, default=60.0)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument(
        "--timing",
        action="store_true",
        help="record wall-clock times (breaks byte-for-byte reproducibility)",
    )
    parser.add_argument(
        "--out-dir", type=pathlib.Path, default=pathlib.Path("results/random")
    )
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    config = ExperimentConfig(
        games=tuple(
            GameSpec(
                family="random",
                n=args.n,
                m=m,
                seeds=tuple(range(args.num_seeds)),
                normalize=True,
            )
            for m in args.m_values
        ),
        solvers=tuple(
            SolverSpec(name=name, params=SOLVERS[name]) for name in args.solvers
        ),
        timeout=args.timeout,
        record_wall_time=args.timing,
        workers=args.workers,
    )
    rows = run_experiment(config)
    aggregates = aggregate_rows(rows)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    rows_path = args.out_dir / "results.csv"
    agg_path = args.out_dir / "aggregate.csv"
    write_rows_csv(rows, rows_path)
    write_aggregate_csv(aggregates, agg_path)

    print(f"wrote {rows_path} ({len(rows)} rows)")
    print(f"wrote {agg_path}")
    print()
    print(f"{'n':>3} {'m':>4} {'solver':<14} {'runs':>4} "
          f"{'mean ratio':>11} {'q25':>7} {'median':>7} {'q75':>7}")
    for agg in aggregates:
        print(
            f"{agg.n:>3} {agg.m:>4} {agg.solver:<14} {agg.runs:>4} "
            f"{agg.mean_ratio:>11.4f} {agg.ratio_q25:>7.4f} "
            f"{agg.ratio_q50:>7.4f} {agg.ratio_q75:>7.4f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
