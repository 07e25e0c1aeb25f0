"""Seeded mesh-network scenarios: node placement, radio-range links, synthetic metrics.

A scenario is a pure function of (n, placement, seed, radio_range): node sites,
plus one directed link observation for every ordered pair within radio range.
Link metrics stand in for measured values and are drawn from fixed uniform
ranges in (from, to)-sorted order so regeneration is bit-identical.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

GRID_SPACING_M = 200.0
DEFAULT_RADIO_RANGE_M = 250.0
# uniform-random placement keeps the reference density of 25 nodes per 1500 m square
REFERENCE_AREA_SIDE_M = 1500.0
REFERENCE_NODE_COUNT = 25

THROUGHPUT_RANGE_MBPS = (0.2, 2.0)
DELAY_RANGE_MS = (1.0, 100.0)
JITTER_RANGE_MS = (0.0, 20.0)

MAX_PLACEMENT_RETRIES = 1000

SCENARIO_FORMAT_VERSION = 1


class ConnectivityError(RuntimeError):
    """Random placement failed to connect source and terminal within the retry budget."""


@dataclass(frozen=True)
class NodeSite:
    id: int
    x: float
    y: float


@dataclass(frozen=True)
class LinkObservation:
    """Directed link with raw metrics; (src, dst) and (dst, src) are independent."""

    src: int
    dst: int
    throughput: float  # Mbps
    delay: float  # ms
    jitter: float  # ms


@dataclass(frozen=True)
class NetworkScenario:
    seed: int
    area_side: float
    radio_range: float
    nodes: tuple[NodeSite, ...]
    links: tuple[LinkObservation, ...]

    @property
    def n(self) -> int:
        return len(self.nodes)

    def positions(self) -> np.ndarray:
        """(n, 2) array of node coordinates in meters."""
        return np.array([[s.x, s.y] for s in self.nodes], dtype=float)


def synthesize_metrics(rng: np.random.Generator) -> tuple[float, float, float]:
    """Draw one (throughput, delay, jitter) triple for a directed link."""
    throughput = rng.uniform(*THROUGHPUT_RANGE_MBPS)
    delay = rng.uniform(*DELAY_RANGE_MS)
    jitter = rng.uniform(*JITTER_RANGE_MS)
    return throughput, delay, jitter


def _adjacency(positions: np.ndarray, radio_range: float) -> np.ndarray:
    """Boolean adjacency by squared euclidean distance; diagonal false."""
    deltas = positions[:, None, :] - positions[None, :, :]
    dist_sq = np.einsum("ijk,ijk->ij", deltas, deltas)
    adj = dist_sq <= radio_range * radio_range
    np.fill_diagonal(adj, False)
    return adj


def _reachable(adj: np.ndarray, source: int, terminal: int) -> bool:
    n = adj.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[source] = True
    frontier = [source]
    while frontier:
        nxt = adj[frontier].any(axis=0) & ~seen
        if nxt[terminal]:
            return True
        seen |= nxt
        frontier = list(np.nonzero(nxt)[0])
    return seen[terminal]


def generate_scenario(
    n: int,
    placement: str = "grid",
    seed: int = 0,
    radio_range: float = DEFAULT_RADIO_RANGE_M,
) -> NetworkScenario:
    """Generate a reproducible scenario.

    Grid placement puts nodes on a sqrt(n) x sqrt(n) lattice with 200 m spacing
    (n must be a perfect square). Uniform-random placement draws coordinates
    i.i.d. over a square holding the reference density and redraws the whole
    layout until node 0 and node n-1 are connected.
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    if radio_range <= 0:
        raise ValueError("radio_range must be positive")
    rng = np.random.default_rng(seed)

    if placement == "grid":
        side = math.isqrt(n)
        if side * side != n:
            raise ValueError(f"grid placement needs a perfect-square node count, {n} is not a perfect square")
        coords = np.array(
            [[(i % side) * GRID_SPACING_M, (i // side) * GRID_SPACING_M] for i in range(n)]
        )
        area_side = (side - 1) * GRID_SPACING_M
    elif placement in ("random", "uniform-random"):
        area_side = REFERENCE_AREA_SIDE_M * math.sqrt(n / REFERENCE_NODE_COUNT)
        for _ in range(MAX_PLACEMENT_RETRIES):
            coords = rng.uniform(0.0, area_side, size=(n, 2))
            if _reachable(_adjacency(coords, radio_range), 0, n - 1):
                break
        else:
            raise ConnectivityError(
                f"no placement connecting node 0 to node {n - 1} in {MAX_PLACEMENT_RETRIES} attempts"
            )
    else:
        raise ValueError(f"unknown placement {placement!r} (expected 'grid' or 'random')")

    nodes = tuple(NodeSite(i, float(coords[i, 0]), float(coords[i, 1])) for i in range(n))
    adj = _adjacency(coords, radio_range)
    links = []
    for i in range(n):
        for j in range(n):
            if adj[i, j]:
                throughput, delay, jitter = synthesize_metrics(rng)
                links.append(LinkObservation(i, j, throughput, delay, jitter))
    return NetworkScenario(
        seed=seed,
        area_side=float(area_side),
        radio_range=float(radio_range),
        nodes=nodes,
        links=tuple(links),
    )


def connectivity_matrix(scenario: NetworkScenario) -> np.ndarray:
    """n x n boolean matrix; (i, j) true iff distance(i, j) <= radio_range and i != j."""
    return _adjacency(scenario.positions(), scenario.radio_range)


def scenario_to_dict(scenario: NetworkScenario) -> dict:
    return {
        "version": SCENARIO_FORMAT_VERSION,
        "seed": scenario.seed,
        "area_side_m": scenario.area_side,
        "radio_range_m": scenario.radio_range,
        "nodes": [{"id": s.id, "x_m": s.x, "y_m": s.y} for s in scenario.nodes],
        "links": [
            {
                "from": k.src,
                "to": k.dst,
                "throughput_mbps": k.throughput,
                "delay_ms": k.delay,
                "jitter_ms": k.jitter,
            }
            for k in sorted(scenario.links, key=lambda k: (k.src, k.dst))
        ],
    }


def scenario_from_dict(data: dict) -> NetworkScenario:
    version = data.get("version")
    if version != SCENARIO_FORMAT_VERSION:
        raise ValueError(f"unsupported scenario format version {version!r}")
    nodes = tuple(NodeSite(int(d["id"]), float(d["x_m"]), float(d["y_m"])) for d in data["nodes"])
    links = tuple(
        LinkObservation(
            int(d["from"]),
            int(d["to"]),
            float(d["throughput_mbps"]),
            float(d["delay_ms"]),
            float(d["jitter_ms"]),
        )
        for d in data["links"]
    )
    return NetworkScenario(
        seed=int(data["seed"]),
        area_side=float(data["area_side_m"]),
        radio_range=float(data["radio_range_m"]),
        nodes=nodes,
        links=links,
    )


def save_scenario(scenario: NetworkScenario, path: str | Path) -> None:
    """Write the scenario JSON; links sorted by (from, to) for byte-stable output."""
    Path(path).write_text(json.dumps(scenario_to_dict(scenario), indent=2) + "\n")


def load_scenario(path: str | Path) -> NetworkScenario:
    return scenario_from_dict(json.loads(Path(path).read_text()))
