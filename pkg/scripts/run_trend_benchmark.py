#!/usr/bin/env python3
"""Sweep node counts x generation budgets x seeds and tabulate the trends.

Writes results.csv (one row per run), summary.csv (seed medians, algorithms
side by side), and one convergence trace per run, then prints the summary
table. The full default protocol (25/64/100 nodes, 30/50/100 generations,
10 seeds) takes a few minutes; --quick cuts it to 3 seeds and two budgets.
"""

import argparse
import sys
import time
from pathlib import Path

from meshroute import bench


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="bench_out", help="output directory")
    parser.add_argument(
        "--nodes", type=int, nargs="+", default=[25, 64, 100],
        help="node counts to sweep (grid placement: perfect squares)",
    )
    parser.add_argument(
        "--generations", type=int, nargs="+", default=[30, 50, 100],
        help="generation budgets to sweep",
    )
    parser.add_argument("--seeds", type=int, default=10, help="seed pairs per cell")
    parser.add_argument("--population", type=int, default=50)
    parser.add_argument("--placement", choices=("grid", "random"), default="grid")
    parser.add_argument("--quick", action="store_true", help="3 seeds, budgets 30/100")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    seeds = bench.DEFAULT_SEED_PAIRS[: (3 if args.quick else args.seeds)]
    budgets = (30, 100) if args.quick else tuple(args.generations)
    plan = bench.BenchPlan(
        node_counts=tuple(args.nodes),
        generation_budgets=budgets,
        seeds=seeds,
        population_size=args.population,
        placement=args.placement,
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    bench.save_plan(plan, out_dir / "plan.json")

    total = (
        len(plan.node_counts) * len(plan.generation_budgets)
        * len(plan.seeds) * len(plan.algorithms)
    )
    done = 0

    def progress(line):
        nonlocal done
        done += 1
        print(f"[{done}/{total}] {line}", file=sys.stderr)

    start = time.perf_counter()
    results = bench.run_plan(plan, progress=progress)
    elapsed = time.perf_counter() - start

    bench.write_results_csv(results, out_dir / "results.csv")
    bench.write_summary_csv(results, out_dir / "summary.csv")
    for result in results:
        bench.emit_trace(result, out_dir / bench.trace_filename(result))

    print(f"\n{len(results)} runs in {elapsed:.1f}s -> {out_dir}/\n")
    header = f"{'nodes':>6} {'gens':>5} {'algo':>5} {'med cost':>10} {'med %err':>9} {'med ms':>9}"
    print(header)
    print("-" * len(header))
    for row in bench.summarize(results):
        print(
            f"{row['n_nodes']:>6} {row['generations']:>5} {row['algorithm']:>5} "
            f"{row['median_cost']:>10.4f} {row['median_percent_error']:>9.3f} "
            f"{row['median_wall_time_ms']:>9.1f}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
