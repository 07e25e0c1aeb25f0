"""Big Bang - Big Crunch path optimizer over random-keys genomes.

The crunch ranks the population by path cost and keeps the few best genomes
as mass points; averaging them into one blended center scrambles the key
ranking that the decoder reads, so instead every bang offspring is a normal
perturbation of one mass point picked from that short list. The perturbation
radius contracts as 1/step within a short cycle and then resets, so bang and
crunch phases repeat instead of freezing once the radius drops below the
typical key gap. A small slice of each generation is fresh uniform dispersal,
and the best-so-far genome survives every bang unchanged.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

import numpy as np

from .fuzzycost import CostMatrix
from .pathcodec import decode_path, random_vector
from .results import RunResult, TracePoint

CENTER_MODES = ("weighted-center", "best-individual")

# Share of the non-elite slots refilled with fresh uniform candidates at each
# bang; the rest are perturbations of the crunched mass points.
FRESH_SHARE = 0.10
# weighted-center mode spawns around the top ANCHOR_POOL genomes; a single
# blended centroid loses the rank structure the decoder depends on.
ANCHOR_POOL = 3
# The 1/step contraction restarts every CYCLE_LEN generations so late
# generations still alternate wide bangs with tight crunches.
CYCLE_LEN = 8


@dataclass(frozen=True)
class BbbcParams:
    max_generations: int
    population_size: int = 50
    upper_limit: float = 1.0
    center_mode: str = "weighted-center"
    rng_seed: int = 0

    def __post_init__(self):
        if self.max_generations < 1:
            raise ValueError("max_generations must be >= 1")
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.upper_limit <= 0:
            raise ValueError("upper_limit must be positive")
        if self.center_mode not in CENTER_MODES:
            raise ValueError(f"center_mode must be one of {CENTER_MODES}")


def center_of_mass(population: np.ndarray, fitness: np.ndarray) -> np.ndarray:
    """Inverse-fitness weighted centroid: sum_i x_i / f_i over sum_i 1 / f_i."""
    population = np.asarray(population, dtype=float)
    fitness = np.asarray(fitness, dtype=float)
    if population.ndim != 2 or population.shape[0] == 0:
        raise ValueError("population must be a non-empty 2-d array")
    if fitness.shape != (population.shape[0],):
        raise ValueError("fitness length must match population size")
    if not (fitness > 0).all():
        raise ValueError("fitness values must be positive")
    inv = 1.0 / fitness
    return (inv @ population) / inv.sum()


def spawn(
    center: np.ndarray, upper_limit: float, step: int, rng: np.random.Generator
) -> np.ndarray:
    """One big-bang offspring: center + upper_limit * normal / step, clipped to [0, 1]."""
    if step < 1:
        raise ValueError("step must be >= 1")
    return np.clip(center + upper_limit * rng.standard_normal(center.shape) / step, 0.0, 1.0)


def run_bbbc(
    cm: CostMatrix, source: int, terminal: int, params: BbbcParams
) -> RunResult:
    rng = np.random.default_rng(params.rng_seed)
    n_dims = cm.n
    pop_size = params.population_size

    best_vec: np.ndarray | None = None
    best_path = None
    trace: list[TracePoint] = []

    start = time.perf_counter()
    population = [random_vector(rng, n_dims) for _ in range(pop_size)]
    for gen in range(1, params.max_generations + 1):
        scored = [(vec, decode_path(vec, cm, source, terminal)) for vec in population]
        scored.sort(key=lambda vp: vp[1].cost)
        gen_best_vec, gen_best_path = scored[0]
        if best_path is None or gen_best_path.cost < best_path.cost:
            best_vec = gen_best_vec.copy()
            best_path = gen_best_path
        trace.append(TracePoint(gen, best_path.cost, gen_best_path.cost))

        if gen == params.max_generations:
            break
        pool = 1 if params.center_mode == "best-individual" else min(ANCHOR_POOL, pop_size)
        step = (gen - 1) % CYCLE_LEN + 1
        n_fresh = int(round(FRESH_SHARE * (pop_size - 1)))
        n_spawn = pop_size - 1 - n_fresh
        # elitism: slot 0 carries the best-so-far genome into the next bang;
        # pool costs sit within a few percent of each other, so a uniform
        # anchor draw matches inverse-cost weighting to first order
        population = [best_vec]
        for _ in range(n_spawn):
            a = scored[int(rng.integers(pool))][0]
            population.append(spawn(a, params.upper_limit, step, rng))
        population += [random_vector(rng, n_dims) for _ in range(n_fresh)]
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    return RunResult(
        algorithm="bbbc",
        n_nodes=n_dims,
        best_path=best_path,
        best_cost=best_path.cost,
        wall_time_ms=elapsed_ms,
        trace=tuple(trace),
        params=asdict(params),
    )
