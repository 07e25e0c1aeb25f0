"""Random-keys path encoding shared by both optimizers.

A candidate solution is a vector of priorities, one key in [0, 1] per node.
Decoding walks from the source, always descending into the unvisited neighbor
with the highest key (ties ascending node id) and backtracking out of dead
ends, so every key vector maps to the same loop-free path on the same cost
matrix regardless of which optimizer produced it.

Two equivalent executions of that search are used. The plain depth-first walk
is fastest when it does not trap itself, but its backtracking is exponential
in the worst case, so it runs under a step budget; past the budget the decode
restarts as a greedy walk that only ever descends into neighbors from which
the terminal is still reachable, with reachability maintained incrementally.
A depth-first node with a reachable continuation is never popped, so both
executions return the identical path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fuzzycost import CostMatrix


class NoPathError(RuntimeError):
    """Exhaustive decode found no source -> terminal path."""


class BrokenPathError(RuntimeError):
    """A hop in the path has no defined cost."""


class _StepBudgetExceeded(Exception):
    pass


# Depth-first push budget: floor + scale * n keeps the common case on the
# fast path while bounding pathological backtracking.
DFS_BUDGET_FLOOR = 64
DFS_BUDGET_SCALE = 1
# A single viability repair may churn at most edges // REPAIR_CAP_DIVISOR
# queue pops before the levels are rebuilt outright.
REPAIR_CAP_DIVISOR = 32


@dataclass(frozen=True)
class Path:
    nodes: tuple[int, ...]
    cost: float

    def __len__(self) -> int:
        return len(self.nodes)


def random_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    """Fresh random-keys genome: n priorities uniform on [0, 1)."""
    return rng.random(n)


def _decode_dfs(
    key_list: list[float], cm: CostMatrix, source: int, terminal: int, budget: int | None
) -> tuple[int, ...]:
    """Priority-ordered DFS with backtracking; raises past the push budget."""
    adjacency = cm.neighbors
    on_path = bytearray(cm.n)
    on_path[source] = 1
    path = [source]
    # sorted() is stable and adjacency is ascending, so equal keys keep
    # ascending id; orders are memoized since backtracking revisits nodes
    orders: list[list[int] | None] = [None] * cm.n
    key_of = key_list.__getitem__

    def order_of(v: int) -> list[int]:
        o = orders[v]
        if o is None:
            o = sorted(adjacency[v], key=key_of, reverse=True)
            orders[v] = o
        return o

    iters = [iter(order_of(source))]
    pushes = 0
    while iters:
        advanced = False
        for nxt in iters[-1]:
            if on_path[nxt]:
                continue
            if nxt == terminal:
                return tuple(path) + (terminal,)
            pushes += 1
            if budget is not None and pushes > budget:
                raise _StepBudgetExceeded
            on_path[nxt] = 1
            path.append(nxt)
            iters.append(iter(order_of(nxt)))
            advanced = True
            break
        if not advanced:
            iters.pop()
            on_path[path.pop()] = 0
    raise NoPathError(f"no path from {source} to {terminal}")


def _decode_checked(
    key_list: list[float], cm: CostMatrix, source: int, terminal: int
) -> tuple[int, ...]:
    """Greedy walk over viability-checked neighbors; never backtracks.

    Viability (a route to the terminal avoiding the walk so far) is tracked
    as each node's hop distance to the terminal, repaired after every block:
    a node must keep an out-neighbor one level below it, otherwise its level
    rises to one past its best remaining neighbor and the change cascades to
    its in-neighbors. Levels only rise, so cut-off cycles cannot prop each
    other up; a level past n means dead. When a single repair churns more
    than the edge count the levels are rebuilt from scratch instead, which
    caps any one block at breadth-first cost.
    """
    n = cm.n
    out_nb = cm.neighbors
    in_nb = cm.in_neighbors
    inf = n + 1
    m_edges = sum(len(nb) for nb in out_nb)
    repair_cap = max(16, m_edges // REPAIR_CAP_DIVISOR)
    blocked = bytearray(n)
    blocked[source] = 1
    level = [inf] * n

    def rebuild() -> None:
        for i in range(n):
            level[i] = inf
        level[terminal] = 0
        frontier = [terminal]
        depth = 0
        while frontier:
            depth += 1
            grown = []
            for w in frontier:
                for u in in_nb[w]:
                    if not blocked[u] and level[u] == inf:
                        level[u] = depth
                        grown.append(u)
            frontier = grown

    rebuild()

    def block(b: int) -> None:
        was_dead = level[b] == inf
        blocked[b] = 1
        level[b] = inf
        if was_dead:
            return
        pops = 0
        work = [u for u in in_nb[b] if not blocked[u]]
        while work:
            pops += 1
            if pops > repair_cap:
                rebuild()
                return
            u = work.pop()
            if u == terminal or blocked[u] or level[u] == inf:
                continue
            lu = level[u]
            best_l = inf
            for p in out_nb[u]:
                if not blocked[p]:
                    lp = level[p]
                    if lp == lu - 1:
                        break
                    if lp < best_l:
                        best_l = lp
            else:
                level[u] = best_l + 1 if best_l + 1 <= n else inf
                for q in in_nb[u]:
                    if not blocked[q]:
                        work.append(q)

    path = [source]
    v = source
    while v != terminal:
        best = -1
        best_key = -1.0
        for u in out_nb[v]:
            if not blocked[u] and level[u] < inf and key_list[u] > best_key:
                best = u
                best_key = key_list[u]
        if best < 0:
            raise NoPathError(f"no path from {source} to {terminal}")
        block(best)
        path.append(best)
        v = best
    return tuple(path)


def decode(keys: np.ndarray, cm: CostMatrix, source: int, terminal: int) -> tuple[int, ...]:
    """Decode a key vector to a loop-free node sequence.

    The search is exhaustive over simple paths in priority order, so it fails
    only when the terminal is unreachable.
    """
    n = cm.n
    if len(keys) != n:
        raise ValueError(f"key vector length {len(keys)} != node count {n}")
    if not (0 <= source < n and 0 <= terminal < n):
        raise ValueError(f"source {source} or terminal {terminal} out of range")
    if source == terminal:
        raise ValueError("source and terminal must differ")
    key_list = keys.tolist()
    budget = max(DFS_BUDGET_FLOOR, DFS_BUDGET_SCALE * n)
    try:
        return _decode_dfs(key_list, cm, source, terminal, budget=budget)
    except _StepBudgetExceeded:
        return _decode_checked(key_list, cm, source, terminal)


def path_cost(nodes: tuple[int, ...], cm: CostMatrix) -> float:
    """Sum of hop costs in hop order."""
    total = 0.0
    for src, dst in zip(nodes, nodes[1:]):
        v = cm.values[src, dst]
        if not np.isfinite(v):
            raise BrokenPathError(f"hop {src} -> {dst} has no defined cost")
        total += float(v)
    return total


def decode_path(keys: np.ndarray, cm: CostMatrix, source: int, terminal: int) -> Path:
    nodes = decode(keys, cm, source, terminal)
    return Path(nodes, path_cost(nodes, cm))
