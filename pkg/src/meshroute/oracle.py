"""Exact shortest-path reference and error measurement.

Dijkstra over the cost matrix gives the ground truth the metaheuristics are
judged against. Ties between equal-cost optima break toward the
lexicographically smallest node sequence so the reported path is unique.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .fuzzycost import CostMatrix


class UnreachableError(RuntimeError):
    """Terminal not reachable from source."""


@dataclass(frozen=True)
class OracleResult:
    nodes: tuple[int, ...]
    cost: float


def shortest_path(cm: CostMatrix, source: int, terminal: int) -> OracleResult:
    """Minimum-cost path by Dijkstra; all link costs are positive.

    Heap entries carry the full path tuple: among equal costs the heap orders
    lexicographically, so the first settle of a node is via its lex-smallest
    cheapest path.
    """
    n = cm.n
    if not (0 <= source < n and 0 <= terminal < n):
        raise ValueError(f"source {source} or terminal {terminal} out of range")
    if source == terminal:
        return OracleResult((source,), 0.0)
    values = cm.values
    settled = bytearray(n)
    heap = [(0.0, (source,))]
    while heap:
        cost, nodes = heapq.heappop(heap)
        v = nodes[-1]
        if settled[v]:
            continue
        if v == terminal:
            return OracleResult(nodes, cost)
        settled[v] = 1
        for u in cm.neighbors[v]:
            if not settled[u]:
                heapq.heappush(heap, (cost + float(values[v, u]), nodes + (u,)))
    raise UnreachableError(f"node {terminal} unreachable from {source}")


def brute_force_shortest(cm: CostMatrix, source: int, terminal: int) -> OracleResult:
    """Enumerate all simple paths; independent check of shortest_path on tiny graphs."""
    n = cm.n
    if n > 12:
        raise ValueError(f"brute force limited to 12 nodes, got {n}")
    if source == terminal:
        return OracleResult((source,), 0.0)
    values = cm.values
    best_cost = np.inf
    best_nodes: tuple[int, ...] | None = None

    on_path = bytearray(n)
    on_path[source] = 1

    def walk(v: int, nodes: tuple[int, ...], cost: float):
        nonlocal best_cost, best_nodes
        for u in cm.neighbors[v]:
            if on_path[u]:
                continue
            c = cost + float(values[v, u])
            # prune on > only: equal-cost completions must still compete on lex order
            if c > best_cost:
                continue
            ext = nodes + (u,)
            if u == terminal:
                if c < best_cost or (c == best_cost and (best_nodes is None or ext < best_nodes)):
                    best_cost = c
                    best_nodes = ext
                continue
            on_path[u] = 1
            walk(u, ext, c)
            on_path[u] = 0

    walk(source, (source,), 0.0)
    if best_nodes is None:
        raise UnreachableError(f"node {terminal} unreachable from {source}")
    return OracleResult(best_nodes, float(best_cost))


def percent_error(found_cost: float, optimal_cost: float) -> float:
    """100 * (found - optimal) / optimal; rejects impossible inputs."""
    if optimal_cost <= 0.0:
        raise ValueError(f"optimal cost must be positive, got {optimal_cost}")
    if found_cost < optimal_cost - 1e-12:
        raise ValueError(f"found cost {found_cost} below optimal {optimal_cost}")
    return 100.0 * (found_cost - optimal_cost) / optimal_cost
