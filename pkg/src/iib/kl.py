"""Random-labelling algorithm for parameters (k, l) and its derandomization.

A labelling keeps the nodes labelled 1; the diffusion inside the kept
subgraph gives a candidate influenced set X, accepted when |X| <= k and
|Y(X)| <= l. A minimal witness is found as soon as the labelling marks all
of X with 1 and all of Y(X) with 0, which a uniform labelling does with
probability at least 2**-(k + l) and some vector of an (n, k+l)-universal
family does with certainty.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ._batch import BatchDiffuser
from .graph import Instance, Solution, immunizing_set, require_preprocessed, spread, verify
from .result import SolveResult, certified, negative
from .universal import build_universal_set


def trial(inst: Instance, labelling: Sequence[int]) -> Solution | None:
    G = inst.graph
    if len(labelling) != G.n:
        raise ValueError(f"labelling has length {len(labelling)}, expected {G.n}")
    V1 = [v for v, bit in enumerate(labelling) if bit]
    D = spread(G, within=V1)
    if len(D) > inst.k:
        return None
    if len(immunizing_set(G, D)) > inst.l:
        return None
    return verify(inst, D)


def _first_success(inst: Instance, labellings: np.ndarray, chunk: int = 4096) -> int | None:
    """Index of the first labelling (row) whose trial succeeds."""
    G = inst.graph
    bd = BatchDiffuser(G)
    for start in range(0, len(labellings), chunk):
        block = labellings[start:start + chunk]
        D = bd.fixpoint(block.T.astype(bool))
        Y = ~D & (bd.neighbor_counts(D) >= bd.t)
        ok = (D.sum(axis=0) <= inst.k) & (Y.sum(axis=0) <= inst.l)
        hits = np.flatnonzero(ok)
        if hits.size:
            return start + int(hits[0])
    return None


def solve_randomized(inst: Instance, trials: int, seed: int) -> SolveResult:
    """Monte-Carlo search; a yes is certified, a no only means "not found"."""
    G = inst.graph
    require_preprocessed(G)
    stats = {"mode": "rand", "seed": seed, "trials": trials}
    if trials <= 0:
        return negative("kl", **stats)
    rng = np.random.default_rng(seed)
    labellings = rng.integers(0, 2, size=(trials, G.n), dtype=np.uint8)
    hit = _first_success(inst, labellings)
    if hit is None:
        return negative("kl", **stats)
    X = [v for v in G.nodes if labellings[hit, v]]
    return certified(inst, spread(G, within=X), "kl", success_trial=hit, **stats)


def solve_derandomized(inst: Instance) -> SolveResult:
    """Exact answer by trying every vector of an (n, k+l)-universal family."""
    G = inst.graph
    require_preprocessed(G)
    i = min(inst.k + inst.l, G.n)
    family = build_universal_set(G.n, i)
    stats = {"mode": "derand", "universal_set_size": len(family), "arity": i}
    hit = _first_success(inst, family.vectors)
    if hit is None:
        return negative("kl", **stats)
    X = [v for v in G.nodes if family.vectors[hit, v]]
    return certified(inst, spread(G, within=X), "kl", success_trial=hit, **stats)
