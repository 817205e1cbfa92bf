"""Small named graphs and a random preprocessed-instance generator."""

from __future__ import annotations

import random

from .graph import Instance, ThresholdGraph, preprocess


def path3() -> ThresholdGraph:
    # a - b - c, only a is a seed
    return ThresholdGraph.from_edges(3, [(0, 1), (1, 2)], [0, 1, 1], ["a", "b", "c"])


def star4() -> ThresholdGraph:
    # three seed leaves around a centre of threshold 2
    return ThresholdGraph.from_edges(
        4, [(0, 3), (1, 3), (2, 3)], [0, 0, 0, 2], ["l1", "l2", "l3", "x"]
    )


def triangle() -> ThresholdGraph:
    return ThresholdGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)], [0, 1, 2], ["u", "v", "w"])


FIXTURES = {
    "PATH3": path3,
    "STAR4": star4,
    "TRIANGLE": triangle,
}


def fixture(name: str) -> ThresholdGraph:
    try:
        return FIXTURES[name.upper()]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None


def random_graph(rng: random.Random, n: int, p: float | None = None) -> ThresholdGraph:
    """G(n, p) with thresholds drawn uniformly from ``[0, d(v)]``."""
    if p is None:
        p = rng.uniform(0.15, 0.8)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    thresholds = [rng.randint(0, d) for d in deg]
    return ThresholdGraph.from_edges(n, edges, thresholds)


def random_instance(
    rng: random.Random,
    max_n: int = 10,
    max_k: int = 4,
    max_l: int = 4,
    min_n: int = 1,
) -> Instance:
    """A random preprocessed instance with at least ``min_n`` nodes left.

    ``k`` and ``l`` are drawn from ``[0, max_k]`` / ``[0, max_l]`` and clamped
    to the node count of the preprocessed graph.
    """
    while True:
        G, _ = preprocess(random_graph(rng, rng.randint(max(min_n, 1), max_n)))
        if G.n >= min_n:
            break
    k = min(rng.randint(0, max_k), G.n)
    l = min(rng.randint(0, max_l), G.n)
    return Instance(G, k, l)


def random_instances(seed: int, count: int, **kwargs) -> list[Instance]:
    rng = random.Random(seed)
    return [random_instance(rng, **kwargs) for _ in range(count)]
