"""Vectorised diffusion over many candidate sets at once (oracle hot loop)."""

from __future__ import annotations

from itertools import combinations, islice
from typing import Iterable, Iterator

import numpy as np
import scipy.sparse as sp

from .graph import ThresholdGraph


class BatchDiffuser:
    """Runs the synchronous threshold diffusion column-wise.

    Each column of an ``(n, B)`` boolean matrix is an independent scenario;
    ``allowed[v, b]`` says whether node ``v`` may be influenced in scenario
    ``b`` (False for immunized nodes or nodes outside an induced subgraph).
    """

    def __init__(self, G: ThresholdGraph):
        self.G = G
        n = G.n
        rows = [u for u in range(n) for _ in G.adjacency[u]]
        cols = [v for u in range(n) for v in G.adjacency[u]]
        self.A = sp.csr_matrix(
            (np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n)
        )
        self.t = np.asarray(G.thresholds, dtype=np.int32)[:, None]

    def neighbor_counts(self, active: np.ndarray) -> np.ndarray:
        return np.asarray(self.A @ active.astype(np.int32))

    def fixpoint(self, allowed: np.ndarray) -> np.ndarray:
        active = allowed & (self.t == 0)
        while True:
            new = allowed & (self.neighbor_counts(active) >= self.t)
            if np.array_equal(new, active):
                return active
            active = new

    def allowed_from_blocked(self, combos: np.ndarray) -> np.ndarray:
        """``combos`` is ``(B, r)``: row b lists the nodes blocked in scenario b."""
        B = combos.shape[0]
        allowed = np.ones((self.G.n, B), dtype=bool)
        if combos.shape[1]:
            allowed[combos.T, np.arange(B)[None, :]] = False
        return allowed

    def allowed_from_members(self, combos: np.ndarray) -> np.ndarray:
        """``combos`` is ``(B, r)``: row b lists the only nodes allowed in scenario b."""
        B = combos.shape[0]
        allowed = np.zeros((self.G.n, B), dtype=bool)
        if combos.shape[1]:
            allowed[combos.T, np.arange(B)[None, :]] = True
        return allowed


def chunked_combinations(n: int, r: int, chunk: int = 4096) -> Iterator[np.ndarray]:
    """Lexicographic ``r``-subsets of ``range(n)`` as ``(B, r)`` int arrays."""
    it = combinations(range(n), r)
    while True:
        block = list(islice(it, chunk))
        if not block:
            return
        yield np.asarray(block, dtype=np.intp).reshape(len(block), r)


def subset_count(n: int, max_r: int) -> int:
    from math import comb

    return sum(comb(n, r) for r in range(0, min(n, max_r) + 1))


def as_sets(combos: np.ndarray) -> Iterable[frozenset]:
    return (frozenset(int(v) for v in row) for row in combos)
