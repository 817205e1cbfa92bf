"""Tree decompositions: validation, min-fill heuristic, nice form."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from ..graph import ThresholdGraph


class DecompositionError(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"invalid tree decomposition, condition {report.condition}: {report.message}")


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, bags: Iterable[Iterable[int]], edges: Iterable[tuple[int, int]]) -> "TreeDecomposition":
        return cls(tuple(frozenset(b) for b in bags), tuple((int(a), int(b)) for a, b in edges))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors(self) -> list[list[int]]:
        nb = [[] for _ in self.bags]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        return [sorted(x) for x in nb]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    condition: str | None = None  # "tree", "1", "2", "3", "nice"
    witness: object = None
    message: str = "valid"

    def __bool__(self) -> bool:
        return self.ok


def _tree_problem(n_nodes: int, edges) -> str | None:
    if n_nodes == 0:
        return "decomposition has no tree nodes"
    if len(edges) != n_nodes - 1:
        return f"{len(edges)} tree edges for {n_nodes} tree nodes"
    nb = defaultdict(list)
    for a, b in edges:
        if not (0 <= a < n_nodes and 0 <= b < n_nodes):
            return f"tree edge ({a}, {b}) out of range"
        nb[a].append(b)
        nb[b].append(a)
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in nb[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n_nodes:
        return "tree edges do not connect all tree nodes"
    return None


def validate(G: ThresholdGraph, td: TreeDecomposition) -> ValidationReport:
    """Check the three decomposition conditions; report the first failure."""
    problem = _tree_problem(len(td.bags), td.edges)
    if problem:
        return ValidationReport(False, "tree", None, problem)
    for i, bag in enumerate(td.bags):
        bad = [v for v in bag if not 0 <= v < G.n]
        if bad:
            return ValidationReport(False, "1", bad[0], f"bag {i} holds unknown node {bad[0]}")
    covered = set().union(*td.bags)
    for v in G.nodes:
        if v not in covered:
            return ValidationReport(False, "1", v, f"node {v} ({G.label(v)}) is in no bag")
    for u, v in G.edges():
        if not any(u in b and v in b for b in td.bags):
            return ValidationReport(
                False, "2", (u, v), f"edge ({G.label(u)}, {G.label(v)}) is in no bag"
            )
    nb = td.neighbors()
    for v in G.nodes:
        holders = [i for i, b in enumerate(td.bags) if v in b]
        seen, stack = {holders[0]}, [holders[0]]
        hold = set(holders)
        while stack:
            x = stack.pop()
            for y in nb[x]:
                if y in hold and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(holders):
            return ValidationReport(
                False, "3", v, f"bags holding node {v} ({G.label(v)}) are not connected in the tree"
            )
    return ValidationReport(True)


def min_fill_order(G: ThresholdGraph) -> list[tuple[int, frozenset]]:
    """Min-fill elimination order (ties by lowest id) with the elimination bags."""
    adj = {v: set(G.adjacency[v]) for v in G.nodes}

    def fill(v):
        nb = adj[v]
        return sum(len(nb - adj[u]) - 1 for u in nb) // 2

    cost = {v: fill(v) for v in adj}
    out = []
    while adj:
        v = min(adj, key=lambda x: (cost[x], x))
        nb = adj.pop(v)
        out.append((v, frozenset(nb | {v})))
        for u in nb:
            adj[u].discard(v)
            adj[u].update(nb - {u})
        dirty = set(nb)
        for u in nb:
            dirty.update(adj[u])
        del cost[v]
        for u in dirty:
            cost[u] = fill(u)
    return out


def heuristic_decomposition(G: ThresholdGraph) -> TreeDecomposition:
    order = min_fill_order(G)
    if not order:
        return TreeDecomposition((frozenset(),), ())
    position = {v: i for i, (v, _) in enumerate(order)}
    edges = []
    for i, (v, bag) in enumerate(order):
        later = [position[u] for u in bag if u != v]
        if later:
            edges.append((i, min(later)))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    return TreeDecomposition(tuple(b for _, b in order), tuple(edges))


LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"


@dataclass
class NiceTreeDecomposition:
    """Nice decomposition stored children-before-parents; the last node is the root."""

    kinds: list[str] = field(default_factory=list)
    bags: list[tuple[int, ...]] = field(default_factory=list)
    children: list[tuple[int, ...]] = field(default_factory=list)
    vertex: list[int | None] = field(default_factory=list)

    def add(self, kind, bag, children=(), vertex=None) -> int:
        self.kinds.append(kind)
        self.bags.append(tuple(sorted(bag)))
        self.children.append(tuple(children))
        self.vertex.append(vertex)
        return len(self.kinds) - 1

    @property
    def root(self) -> int:
        return len(self.kinds) - 1

    def __len__(self) -> int:
        return len(self.kinds)

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = [(c, u) for u, ch in enumerate(self.children) for c in ch]
        return TreeDecomposition.build(self.bags, edges)


def _transition(ntd: NiceTreeDecomposition, node: int, target: frozenset) -> int:
    """Forget then introduce (ascending ids) to move from ``node``'s bag to ``target``."""
    bag = set(ntd.bags[node])
    for v in sorted(bag - target):
        bag.discard(v)
        node = ntd.add(FORGET, bag, (node,), v)
    for v in sorted(target - bag):
        bag.add(v)
        node = ntd.add(INTRODUCE, bag, (node,), v)
    return node


def make_nice(td: TreeDecomposition, G: ThresholdGraph | None = None, root: int = 0) -> NiceTreeDecomposition:
    """Convert ``td`` (rooted at tree node ``root``) to nice form of the same width."""
    problem = _tree_problem(len(td.bags), td.edges)
    if problem:
        raise DecompositionError(ValidationReport(False, "tree", None, problem))
    if G is not None:
        report = validate(G, td)
        if not report:
            raise DecompositionError(report)
    nb = td.neighbors()
    parent = {root: None}
    order = [root]
    for x in order:
        for y in nb[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    kids = defaultdict(list)
    for x in order[1:]:
        kids[parent[x]].append(x)

    ntd = NiceTreeDecomposition()
    built = {}
    for x in reversed(order):
        target = td.bags[x]
        subs = [_transition(ntd, built[c], target) for c in kids[x]]
        if not subs:
            node = _transition(ntd, ntd.add(LEAF, ()), target)
        else:
            node = subs[0]
            for other in subs[1:]:
                node = ntd.add(JOIN, target, (node, other))
        built[x] = node
    _transition(ntd, built[root], frozenset())
    return ntd


def validate_nice(G: ThresholdGraph, ntd: NiceTreeDecomposition) -> ValidationReport:
    report = validate(G, ntd.as_tree_decomposition())
    if not report:
        return report

    def fail(u, msg):
        return ValidationReport(False, "nice", u, f"node {u}: {msg}")

    if ntd.bags[ntd.root]:
        return fail(ntd.root, "root bag is not empty")
    for u, kind in enumerate(ntd.kinds):
        bag, ch = set(ntd.bags[u]), ntd.children[u]
        if any(c >= u for c in ch):
            return fail(u, "child stored after parent")
        if kind == LEAF:
            if ch or bag:
                return fail(u, "leaf with children or non-empty bag")
        elif kind in (INTRODUCE, FORGET):
            if len(ch) != 1:
                return fail(u, f"{kind} node needs exactly one child")
            cb, v = set(ntd.bags[ch[0]]), ntd.vertex[u]
            if kind == INTRODUCE and not (v not in cb and bag == cb | {v}):
                return fail(u, f"bad introduce of {v}")
            if kind == FORGET and not (v not in bag and cb == bag | {v}):
                return fail(u, f"bad forget of {v}")
        elif kind == JOIN:
            if len(ch) != 2 or any(set(ntd.bags[c]) != bag for c in ch):
                return fail(u, "join children must have the parent's bag")
        else:
            return fail(u, f"unknown kind {kind!r}")
    return ValidationReport(True)
