"""Text formats. Node ids are 1-based on disk and 0-based in memory.

Instance::

    c optional comment
    p iib <n> <m> <k> <l>
    t <v> <threshold>      (exactly n lines)
    e <u> <v>              (exactly m lines)

Tree decomposition: ``td <N> <width>``, ``b <tree-node> <v>...``, ``te <a> <b>``
(tree nodes numbered 1..N). Sources for the reductions:
``hs <n> <m> <h>`` then one line of elements per set; ``p cvt <n> <m> <s> <k> <l>``
plus ``e`` lines; ``p mq <n> <m> <q>`` plus ``e`` lines and ``color <v> <c>`` lines
(colours 1..q).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .gadgets.sources import CvtInstance, HittingSetInstance, MulticoloredGraphInstance, SourceError
from .graph import GraphError, Instance, ThresholdGraph
from .treewidth.decomposition import TreeDecomposition


class ParseError(ValueError):
    """Malformed input; ``code`` names the kind of problem, ``line`` is 1-based (0 = whole file)."""

    def __init__(self, code: str, line: int, message: str):
        self.code = code
        self.line = line
        where = f"line {line}: " if line else ""
        super().__init__(f"{where}{message} [{code}]")


@dataclass
class _Line:
    number: int
    fields: list[str]


def _lines(text: str) -> tuple[list[_Line], list[str]]:
    out, comments = [], []
    for i, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s:
            continue
        if s == "c" or s.startswith("c "):
            comments.append(s[2:])
            continue
        out.append(_Line(i, s.split()))
    return out, comments


def _ints(line: _Line, start: int, count: int | None = None) -> list[int]:
    vals = line.fields[start:]
    if count is not None and len(vals) != count:
        raise ParseError("syntax", line.number, f"expected {count} values after '{line.fields[0]}'")
    try:
        return [int(x) for x in vals]
    except ValueError:
        raise ParseError("syntax", line.number, f"non-integer value in {' '.join(line.fields)!r}")


def _node(line: _Line, v: int, n: int) -> int:
    if not 1 <= v <= n:
        raise ParseError("id-range", line.number, f"node id {v} outside 1..{n}")
    return v - 1


def _edge_list(lines: list[_Line], n: int, expected: int):
    edges, seen = [], set()
    for ln in lines:
        u, v = (_node(ln, x, n) for x in _ints(ln, 1, 2))
        if u == v:
            raise ParseError("self-loop", ln.number, f"self-loop at node {u + 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError("duplicate-edge", ln.number, f"duplicate edge {u + 1} {v + 1}")
        seen.add(key)
        edges.append(key)
    if len(edges) != expected:
        raise ParseError("count", 0, f"header announces {expected} edges, found {len(edges)}")
    return edges


def _header(lines: list[_Line], kind: str, count: int) -> list[int]:
    if not lines or lines[0].fields[:2] != ["p", kind]:
        at = lines[0].number if lines else 0
        raise ParseError("header", at, f"first line must be 'p {kind} ...'")
    vals = _ints(lines[0], 2)
    if len(vals) != count or any(x < 0 for x in vals):
        raise ParseError("header", lines[0].number, f"'p {kind}' needs {count} non-negative integers")
    return vals


def _only(lines: list[_Line], allowed: set[str]) -> None:
    for ln in lines:
        if ln.fields[0] not in allowed:
            raise ParseError("syntax", ln.number, f"unknown line type {ln.fields[0]!r}")


def parse_instance(text: str) -> Instance:
    lines, _ = _lines(text)
    n, m, k, l = _header(lines, "iib", 4)
    body = lines[1:]
    _only(body, {"t", "e"})
    thresholds: list[int | None] = [None] * n
    for ln in (x for x in body if x.fields[0] == "t"):
        v, t = _ints(ln, 1, 2)
        v = _node(ln, v, n)
        if t < 0:
            raise ParseError("negative-threshold", ln.number, f"node {v + 1} has negative threshold {t}")
        if thresholds[v] is not None:
            raise ParseError("duplicate-threshold", ln.number, f"second threshold for node {v + 1}")
        thresholds[v] = t
    missing = [v + 1 for v, t in enumerate(thresholds) if t is None]
    if missing:
        raise ParseError("count", 0, f"no threshold line for node(s) {missing[:5]}")
    edges = _edge_list([x for x in body if x.fields[0] == "e"], n, m)
    if k > n or l > n:
        raise ParseError("header", lines[0].number, f"bounds k={k}, l={l} exceed n={n}")
    try:
        G = ThresholdGraph.from_edges(n, edges, thresholds, [str(v + 1) for v in range(n)])
    except GraphError as exc:  # pragma: no cover - pre-checked above
        raise ParseError("graph", 0, str(exc))
    return Instance(G, k, l)


def instance_comments(text: str) -> list[str]:
    return _lines(text)[1]


def serialize_instance(inst: Instance, comments: list[str] = ()) -> str:
    G = inst.graph
    out = [f"c {c}" for c in comments]
    out.append(f"p iib {G.n} {G.m} {inst.k} {inst.l}")
    out += [f"t {v + 1} {t}" for v, t in enumerate(G.thresholds)]
    out += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(out) + "\n"


def canonical_instance_text(text: str) -> str:
    return serialize_instance(parse_instance(text))


def parse_td(text: str, n: int | None = None) -> TreeDecomposition:
    lines, _ = _lines(text)
    if not lines or lines[0].fields[0] != "td":
        raise ParseError("header", lines[0].number if lines else 0, "first line must be 'td <N> <width>'")
    N, _width = _ints(lines[0], 1, 2)
    body = lines[1:]
    _only(body, {"b", "te"})
    bags: list[frozenset | None] = [None] * N
    edges = []
    for ln in body:
        vals = _ints(ln, 1)
        if ln.fields[0] == "b":
            if not vals or not 1 <= vals[0] <= N:
                raise ParseError("id-range", ln.number, f"bag id outside 1..{N}")
            for v in vals[1:]:
                if v < 1 or (n is not None and v > n):
                    raise ParseError("id-range", ln.number, f"bag member {v} is not a node id")
            bags[vals[0] - 1] = frozenset(v - 1 for v in vals[1:])
        else:
            if len(vals) != 2 or not all(1 <= x <= N for x in vals):
                raise ParseError("id-range", ln.number, f"tree edge endpoints outside 1..{N}")
            edges.append((vals[0] - 1, vals[1] - 1))
    missing = [i + 1 for i, b in enumerate(bags) if b is None]
    if missing:
        raise ParseError("count", 0, f"no bag line for tree node(s) {missing[:5]}")
    return TreeDecomposition(tuple(bags), tuple(edges))


def serialize_td(td: TreeDecomposition) -> str:
    out = [f"td {len(td.bags)} {td.width}"]
    for i, bag in enumerate(td.bags):
        out.append(" ".join(["b", str(i + 1)] + [str(v + 1) for v in sorted(bag)]))
    out += [f"te {a + 1} {b + 1}" for a, b in td.edges]
    return "\n".join(out) + "\n"


def parse_hs(text: str) -> HittingSetInstance:
    lines, _ = _lines(text)
    if not lines or lines[0].fields[0] != "hs":
        raise ParseError("header", lines[0].number if lines else 0, "first line must be 'hs <n> <m> <h>'")
    n, m, h = _ints(lines[0], 1, 3)
    sets = []
    for ln in lines[1:]:
        elems = [_node(ln, a, n) for a in _ints(ln, 0)]
        if len(set(elems)) != len(elems):
            raise ParseError("duplicate-element", ln.number, "element listed twice in one set")
        sets.append(tuple(sorted(elems)))
    if len(sets) != m:
        raise ParseError("count", 0, f"header announces {m} sets, found {len(sets)}")
    try:
        return HittingSetInstance(n, tuple(sets), h)
    except SourceError as exc:
        raise ParseError("source", 0, str(exc))


def serialize_hs(src: HittingSetInstance) -> str:
    out = [f"hs {src.n} {src.m} {src.h}"]
    out += [" ".join(str(a + 1) for a in S) for S in src.sets]
    return "\n".join(out) + "\n"


def parse_cvt(text: str) -> CvtInstance:
    lines, _ = _lines(text)
    n, m, s, k, l = _header(lines, "cvt", 5)
    _only(lines[1:], {"e"})
    edges = _edge_list(lines[1:], n, m)
    if not 1 <= s <= n:
        raise ParseError("id-range", lines[0].number, f"terminal {s} outside 1..{n}")
    return CvtInstance(n, tuple(edges), s - 1, k, l)


def serialize_cvt(src: CvtInstance) -> str:
    out = [f"p cvt {src.n} {len(src.edges)} {src.s + 1} {src.k} {src.l}"]
    out += [f"e {u + 1} {v + 1}" for u, v in src.edges]
    return "\n".join(out) + "\n"


def parse_mq(text: str) -> MulticoloredGraphInstance:
    lines, _ = _lines(text)
    n, m, q = _header(lines, "mq", 3)
    body = lines[1:]
    _only(body, {"e", "color"})
    edges = _edge_list([x for x in body if x.fields[0] == "e"], n, m)
    colors: list[int | None] = [None] * n
    for ln in (x for x in body if x.fields[0] == "color"):
        v, c = _ints(ln, 1, 2)
        v = _node(ln, v, n)
        if not 1 <= c <= q:
            raise ParseError("id-range", ln.number, f"colour {c} outside 1..{q}")
        colors[v] = c - 1
    missing = [v + 1 for v, c in enumerate(colors) if c is None]
    if missing:
        raise ParseError("count", 0, f"no colour line for node(s) {missing[:5]}")
    try:
        return MulticoloredGraphInstance(n, tuple(edges), tuple(colors), q)
    except SourceError as exc:
        raise ParseError("source", 0, str(exc))


def serialize_mq(src: MulticoloredGraphInstance) -> str:
    out = [f"p mq {src.n} {len(src.edges)} {src.q}"]
    out += [f"e {u + 1} {v + 1}" for u, v in src.edges]
    out += [f"color {v + 1} {c + 1}" for v, c in enumerate(src.colors)]
    return "\n".join(out) + "\n"


SOURCE_PARSERS = {"cvt": parse_cvt, "hs": parse_hs, "hs3": parse_hs, "mq-tw": parse_mq, "mq-nd": parse_mq}


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
