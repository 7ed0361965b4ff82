"""Shared fixtures: tiny graphs with hand-checkable values and naive
from-scratch objective references used as independent oracles."""

import numpy as np
import pytest

from submodknap import KnapsackInstance, WeightedGraph


@pytest.fixture
def unit_triangle():
    """Three nodes, all pairs connected with weight 1."""
    return WeightedGraph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])


@pytest.fixture
def unit_path():
    """Path 0 - 1 - 2 with unit weights."""
    return WeightedGraph(3, [(0, 1, 1.0), (1, 2, 1.0)])


@pytest.fixture
def star_149():
    """Star with center 0 and leaves 1..3 carrying weights 1, 4, 9."""
    return WeightedGraph(4, [(0, 1, 1.0), (0, 2, 4.0), (0, 3, 9.0)])


@pytest.fixture
def unit_instance_3():
    return KnapsackInstance(np.ones(3), 2.0)


# ---------------------------------------------------------------------------
# naive references: direct transcriptions of the defining formulas, kept
# independent of the production evaluation paths
# ---------------------------------------------------------------------------


def naive_cut(graph, ids):
    inside = set(int(e) for e in ids)
    total = 0.0
    for u, v, w in graph.edges:
        if (u in inside) != (v in inside):
            total += w
    return total


def naive_revenue(graph, ids):
    inside = set(int(e) for e in ids)
    weight_to = {}
    for u, v, w in graph.edges:
        if u in inside:
            weight_to[v] = weight_to.get(v, 0.0) + w
        if v in inside:
            weight_to[u] = weight_to.get(u, 0.0) + w
    total = 0.0
    for node in range(graph.n):
        if node not in inside:
            total += weight_to.get(node, 0.0) ** 0.5
    return total


def naive_image_summary(matrix, ids):
    inside = [int(e) for e in ids]
    if not inside:
        return 0.0
    n = matrix.n
    coverage = sum(max(matrix.sim[u][v] for v in inside) for u in range(n))
    penalty = sum(matrix.sim[u][v] for u in range(n) for v in inside) / n
    return coverage - penalty
