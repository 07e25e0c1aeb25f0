#!/usr/bin/env python3
"""Trace best-cost-so-far per generation for both optimizers on one scenario.

Emits one trace CSV per algorithm and prints a fixed-width comparison of the
convergence curves against the exact optimum, sampled every few generations.
"""

import argparse
import sys
from pathlib import Path

from meshroute.bbbc import BbbcParams, run_bbbc
from meshroute.bbo import BboParams, run_bbo
from meshroute.bench import emit_trace
from meshroute.fuzzycost import build_cost_matrix
from meshroute.oracle import shortest_path
from meshroute.topology import generate_scenario


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=100)
    parser.add_argument("--placement", choices=("grid", "random"), default="grid")
    parser.add_argument("--scenario-seed", type=int, default=101)
    parser.add_argument("--opt-seed", type=int, default=9001)
    parser.add_argument("--generations", type=int, default=100)
    parser.add_argument("--population", type=int, default=50)
    parser.add_argument("--out", default="traces", help="output directory")
    parser.add_argument("--sample-every", type=int, default=10)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    scenario = generate_scenario(
        args.nodes, placement=args.placement, seed=args.scenario_seed
    )
    cm = build_cost_matrix(scenario)
    source, terminal = 0, scenario.n - 1
    oracle = shortest_path(cm, source, terminal)

    results = {
        "bbbc": run_bbbc(
            cm, source, terminal,
            BbbcParams(
                max_generations=args.generations,
                population_size=args.population,
                rng_seed=args.opt_seed,
            ),
        ),
        "bbo": run_bbo(
            cm, source, terminal,
            BboParams(
                max_generations=args.generations,
                population_size=args.population,
                rng_seed=args.opt_seed,
            ),
        ),
    }

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, result in results.items():
        emit_trace(result, out_dir / f"trace_{name}.csv")

    print(
        f"{args.nodes} nodes ({args.placement}), optimum {oracle.cost:.4f} "
        f"over {len(oracle.nodes) - 1} hops\n"
    )
    print(f"{'gen':>5} {'bbbc best':>10} {'bbo best':>10}")
    marks = list(range(0, args.generations, args.sample_every)) + [args.generations - 1]
    for g in sorted(set(marks)):
        row = [results[a].trace[g].best_cost_so_far for a in ("bbbc", "bbo")]
        print(f"{g + 1:>5} {row[0]:>10.4f} {row[1]:>10.4f}")
    print()
    for name, r in results.items():
        err = 100.0 * (r.best_cost - oracle.cost) / oracle.cost
        print(
            f"{name}: cost {r.best_cost:.4f} ({err:.2f}% above optimum), "
            f"{r.wall_time_ms:.0f} ms, path {len(r.best_path.nodes) - 1} hops"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
