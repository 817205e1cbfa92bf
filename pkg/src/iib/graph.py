"""Threshold graphs and the linear threshold diffusion with immunized nodes.

Nodes are dense integers ``0..n-1``. Node sets are passed around as any
iterable of ints and returned as ``frozenset``; every place that has to pick
among nodes does so in ascending id order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

NodeSet = frozenset


class GraphError(ValueError):
    """Malformed graph data (self-loop, duplicate edge, bad id, bad threshold)."""


class NotPreprocessedError(ValueError):
    """Raised by solvers when some node cannot be influenced even with Y = {}."""

    def __init__(self, unreachable):
        self.unreachable = frozenset(unreachable)
        super().__init__(
            f"{len(self.unreachable)} node(s) can never be influenced "
            f"(e.g. {sorted(self.unreachable)[:5]}); run preprocess() first"
        )


@dataclass(frozen=True)
class ThresholdGraph:
    """Undirected simple graph with a non-negative integer threshold per node."""

    adjacency: tuple[tuple[int, ...], ...]
    thresholds: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = len(self.adjacency)
        if len(self.thresholds) != n:
            raise GraphError(f"{len(self.thresholds)} thresholds for {n} nodes")
        if self.labels is not None and len(self.labels) != n:
            raise GraphError(f"{len(self.labels)} labels for {n} nodes")
        for v, t in enumerate(self.thresholds):
            if t < 0:
                raise GraphError(f"node {v} has negative threshold {t}")
        nbr_sets = [set(a) for a in self.adjacency]
        for v, nbrs in enumerate(self.adjacency):
            if len(nbr_sets[v]) != len(nbrs):
                raise GraphError(f"duplicate neighbour in adjacency of node {v}")
            if list(nbrs) != sorted(nbrs):
                raise GraphError(f"adjacency of node {v} is not sorted")
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"node {v} has out-of-range neighbour {u}")
                if u == v:
                    raise GraphError(f"self-loop at node {v}")
                if v not in nbr_sets[u]:
                    raise GraphError(f"edge ({v}, {u}) is not symmetric")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        thresholds: Sequence[int],
        labels: Sequence[str] | None = None,
    ) -> "ThresholdGraph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(
            tuple(tuple(sorted(a)) for a in adj),
            tuple(int(t) for t in thresholds),
            tuple(labels) if labels is not None else None,
        )

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def nodes(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def zero_threshold_nodes(self) -> list[int]:
        return [v for v, t in enumerate(self.thresholds) if t == 0]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def subgraph(self, nodes: Iterable[int]) -> tuple["ThresholdGraph", list[int]]:
        """Induced subgraph on ``nodes`` relabelled densely in ascending id order.

        Thresholds are inherited unchanged. Returns the subgraph and the list
        mapping new ids to old ids.
        """
        keep = sorted(set(nodes))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(
            tuple(index[u] for u in self.adjacency[v] if u in index) for v in keep
        )
        labels = tuple(self.labels[v] for v in keep) if self.labels is not None else None
        return ThresholdGraph(adj, tuple(self.thresholds[v] for v in keep), labels), keep


@dataclass(frozen=True)
class Instance:
    """An IIB instance: can at most ``l`` immunizations keep the spread <= ``k``?"""

    graph: ThresholdGraph
    k: int
    l: int

    def __post_init__(self):
        n = self.graph.n
        if not 0 <= self.k <= n:
            raise ValueError(f"k={self.k} outside [0, n={n}]")
        if not 0 <= self.l <= n:
            raise ValueError(f"l={self.l} outside [0, n={n}]")


@dataclass(frozen=True)
class DiffusionTrace:
    """Round-indexed activation sets; ``rounds[-1]`` is the fixpoint."""

    rounds: tuple[NodeSet, ...]

    @property
    def final(self) -> NodeSet:
        return self.rounds[-1]

    @property
    def rounds_to_fixpoint(self) -> int:
        return len(self.rounds)


@dataclass(frozen=True)
class Solution:
    verdict: bool
    influenced: NodeSet = field(default_factory=frozenset)
    immunized: NodeSet = field(default_factory=frozenset)
    rounds_to_fixpoint: int = 0


def _check_subset(G: ThresholdGraph, nodes: Iterable[int], name: str) -> frozenset:
    s = frozenset(nodes)
    bad = [v for v in s if not (isinstance(v, int) and 0 <= v < G.n)]
    if bad:
        raise ValueError(f"{name} contains nodes outside V: {sorted(map(str, bad))}")
    return s


def diffuse(G: ThresholdGraph, Y: Iterable[int] = ()) -> DiffusionTrace:
    """Run the threshold diffusion with the nodes of ``Y`` immunized.

    Round 1 holds every non-immunized node of threshold 0; each later round
    adds the non-immunized nodes whose influenced-neighbour count (w.r.t. the
    previous round) reaches their threshold. The returned trace stops at the
    first round that adds nothing.
    """
    Y = _check_subset(G, Y, "Y")
    thr = G.thresholds
    adj = G.adjacency
    blocked = [False] * G.n
    for v in Y:
        blocked[v] = True
    count = [0] * G.n
    active = [False] * G.n
    frontier = [v for v in G.nodes if not blocked[v] and thr[v] == 0]
    for v in frontier:
        active[v] = True
    current = set(frontier)
    rounds = [frozenset(current)]
    while frontier:
        nxt = []
        for v in frontier:
            for u in adj[v]:
                count[u] += 1
        # separate pass so activation uses only the previous round's counts
        for v in frontier:
            for u in adj[v]:
                if not active[u] and not blocked[u] and count[u] >= thr[u]:
                    active[u] = True
                    nxt.append(u)
        if not nxt:
            break
        current.update(nxt)
        rounds.append(frozenset(current))
        frontier = nxt
    return DiffusionTrace(tuple(rounds))


def spread(G: ThresholdGraph, Y: Iterable[int] = (), within: Iterable[int] | None = None) -> NodeSet:
    """Final influenced set of the diffusion (no trace kept).

    With ``within`` given, the diffusion runs on the induced subgraph
    ``G[within]`` instead, i.e. nodes outside it behave as immunized.
    """
    n = G.n
    thr = G.thresholds
    adj = G.adjacency
    if within is None:
        allowed = [True] * n
    else:
        allowed = [False] * n
        for v in within:
            allowed[v] = True
    for v in Y:
        allowed[v] = False
    count = [0] * n
    active = [False] * n
    queue = deque()
    for v in range(n):
        if allowed[v] and thr[v] == 0:
            active[v] = True
            queue.append(v)
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            count[u] += 1
            if not active[u] and allowed[u] and count[u] >= thr[u]:
                active[u] = True
                queue.append(u)
    return frozenset(v for v in range(n) if active[v])


def immunizing_set(G: ThresholdGraph, X: Iterable[int]) -> NodeSet:
    """Y(X): nodes outside ``X`` that ``D_{G[X]}`` would influence in one round."""
    X = _check_subset(G, X, "X")
    D = spread(G, within=X)
    thr = G.thresholds
    return frozenset(
        u for u in G.nodes
        if u not in X and sum(1 for w in G.adjacency[u] if w in D) >= thr[u]
    )


def is_minimal(G: ThresholdGraph, X: Iterable[int]) -> bool:
    """True iff the diffusion restricted to ``G[X]`` influences all of ``X``."""
    X = _check_subset(G, X, "X")
    return spread(G, within=X) == X


def verify(inst: Instance, X: Iterable[int]) -> Solution:
    """Check the witness ``X`` after shrinking it to ``D_{G[X]}``.

    The verdict is yes iff the shrunk set has at most ``k`` nodes and its
    immunizing set at most ``l``.
    """
    G = inst.graph
    X = _check_subset(G, X, "X")
    Xp = spread(G, within=X)
    Y = immunizing_set(G, Xp)
    trace = diffuse(G, Y)
    ok = len(Xp) <= inst.k and len(Y) <= inst.l
    return Solution(ok, Xp, Y, trace.rounds_to_fixpoint)


def unreachable_nodes(G: ThresholdGraph) -> NodeSet:
    return frozenset(G.nodes) - spread(G)


def is_preprocessed(G: ThresholdGraph) -> bool:
    return not unreachable_nodes(G)


def require_preprocessed(G: ThresholdGraph) -> None:
    bad = unreachable_nodes(G)
    if bad:
        raise NotPreprocessedError(bad)


def preprocess(G: ThresholdGraph) -> tuple[ThresholdGraph, NodeSet]:
    """Drop the nodes that no diffusion can reach.

    Returns ``(G[D_G], V - D_G)``; the kept nodes are renumbered densely in
    ascending order of their old ids.
    """
    D = spread(G)
    if len(D) == G.n:
        return G, frozenset()
    sub, _ = G.subgraph(D)
    return sub, frozenset(G.nodes) - D


def from_spreaders(G: ThresholdGraph, spreaders: Iterable[int]) -> tuple[ThresholdGraph, list[int]]:
    """Fold an initially contaminated set into the thresholds.

    Every remaining node loses one threshold unit per spreader neighbour
    (clamped at 0) and the spreaders are removed. Returns the new graph and
    the new-id -> old-id map.
    """
    S = _check_subset(G, spreaders, "spreaders")
    lowered = [
        max(0, t - sum(1 for u in G.adjacency[v] if u in S))
        for v, t in enumerate(G.thresholds)
    ]
    tmp = ThresholdGraph(G.adjacency, tuple(lowered), G.labels)
    return tmp.subgraph(v for v in G.nodes if v not in S)
