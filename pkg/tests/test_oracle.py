"""Exact baseline: label-setting search, brute-force cross-check, percent error."""

import numpy as np
import pytest

from meshroute.fuzzycost import CostMatrix
from meshroute.oracle import (
    OracleResult,
    UnreachableError,
    brute_force_shortest,
    percent_error,
    shortest_path,
)
from meshroute.pathcodec import path_cost

CAMPAIGN_GRAPHS = 150
CAMPAIGN_SEED = 2024


def random_cm(rng, n, p):
    entries = {
        (i, j): float(rng.uniform(0.05, 1.0))
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < p
    }
    return CostMatrix.from_entries(n, entries)


def test_single_link():
    cm = CostMatrix.from_entries(2, {(0, 1): 0.42})
    r = shortest_path(cm, 0, 1)
    assert r.nodes == (0, 1)
    assert r.cost == pytest.approx(0.42)


def test_two_hop_beats_direct():
    cm = CostMatrix.from_entries(3, {(0, 2): 0.9, (0, 1): 0.3, (1, 2): 0.3})
    r = shortest_path(cm, 0, 2)
    assert r.nodes == (0, 1, 2)
    assert r.cost == pytest.approx(0.6)


def test_unreachable():
    cm = CostMatrix.from_entries(3, {(0, 1): 0.5})
    with pytest.raises(UnreachableError):
        shortest_path(cm, 0, 2)
    with pytest.raises(UnreachableError):
        brute_force_shortest(cm, 0, 2)


def test_source_equals_terminal_is_trivial():
    cm = CostMatrix.from_entries(2, {(0, 1): 0.5})
    r = shortest_path(cm, 1, 1)
    assert r == OracleResult((1,), 0.0)


def test_out_of_range_endpoint():
    cm = CostMatrix.from_entries(2, {(0, 1): 0.5})
    with pytest.raises(ValueError):
        shortest_path(cm, 0, 2)


def test_lexicographic_tie_break():
    cm = CostMatrix.from_entries(
        4, {(0, 1): 0.5, (0, 2): 0.5, (1, 3): 0.5, (2, 3): 0.5}
    )
    assert shortest_path(cm, 0, 3).nodes == (0, 1, 3)
    assert brute_force_shortest(cm, 0, 3).nodes == (0, 1, 3)


def test_returned_cost_matches_path(grid25):
    _, cm, oracle = grid25
    assert oracle.cost == pytest.approx(path_cost(oracle.nodes, cm), abs=1e-12)


def test_brute_force_size_limit():
    cm = random_cm(np.random.default_rng(0), 13, 0.3)
    with pytest.raises(ValueError):
        brute_force_shortest(cm, 0, 12)


def test_brute_force_agreement_campaign():
    rng = np.random.default_rng(CAMPAIGN_SEED)
    disagreements = 0
    for _ in range(CAMPAIGN_GRAPHS):
        n = int(rng.integers(2, 9))
        cm = random_cm(rng, n, float(rng.choice([0.2, 0.35, 0.5])))
        try:
            fast = shortest_path(cm, 0, n - 1)
        except UnreachableError:
            fast = None
        try:
            slow = brute_force_shortest(cm, 0, n - 1)
        except UnreachableError:
            slow = None
        if fast is None or slow is None:
            if fast is not slow:
                disagreements += 1
            continue
        if fast.nodes != slow.nodes or abs(fast.cost - slow.cost) > 1e-9:
            disagreements += 1
    assert disagreements == 0


def test_subpath_optimality():
    rng = np.random.default_rng(77)
    for _ in range(25):
        n = int(rng.integers(4, 10))
        cm = random_cm(rng, n, 0.4)
        try:
            r = shortest_path(cm, 0, n - 1)
        except UnreachableError:
            continue
        for cut in range(1, len(r.nodes)):
            prefix = r.nodes[: cut + 1]
            sub = shortest_path(cm, 0, prefix[-1])
            # positive weights: any prefix of an optimal path is itself optimal
            assert sub.cost == pytest.approx(path_cost(prefix, cm), abs=1e-9)


def test_percent_error_zero():
    assert percent_error(0.5, 0.5) == 0.0


@pytest.mark.parametrize(
    "found,optimal,expected",
    [(0.8790, 0.8672, 1.36), (0.7442, 0.7232, 2.90)],
)
def test_percent_error_values(found, optimal, expected):
    assert percent_error(found, optimal) == pytest.approx(expected, abs=0.01)


def test_percent_error_preconditions():
    with pytest.raises(ValueError):
        percent_error(0.5, 0.0)
    with pytest.raises(ValueError):
        percent_error(0.4, 0.5)
