"""Run a directory of instance files across several solvers and compare verdicts."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

from .io import instance_comments, parse_instance
from .runner import SolveTimeout, measure_params, run_algorithm, time_limit

DEFAULT_ALGOS = ("oracle", "kl", "kzeta", "tw", "nd-k", "nd-l")
INSTANCE_SUFFIX = ".iib"


def expected_from_comments(comments: list[str]) -> str | None:
    for c in comments:
        parts = c.split()
        if len(parts) == 2 and parts[0] == "expected" and parts[1] in ("yes", "no"):
            return parts[1]
    return None


@dataclass
class BenchRow:
    file: str
    expected: str | None
    params: dict
    outcomes: dict[str, str] = field(default_factory=dict)  # yes / no / timeout / error:...
    seconds: dict[str, float] = field(default_factory=dict)


@dataclass
class BenchReport:
    algos: tuple[str, ...]
    rows: list[BenchRow]

    def agreement(self) -> dict[str, dict[str, float | None]]:
        """Pairwise share of instances with equal verdicts, over instances where both answered."""
        cols = list(self.algos) + (["expected"] if any(r.expected for r in self.rows) else [])

        def get(row, col):
            v = row.expected if col == "expected" else row.outcomes.get(col)
            return v if v in ("yes", "no") else None

        out = {a: {} for a in cols}
        for a in cols:
            for b in cols:
                pairs = [(get(r, a), get(r, b)) for r in self.rows]
                pairs = [(x, y) for x, y in pairs if x and y]
                out[a][b] = sum(x == y for x, y in pairs) / len(pairs) if pairs else None
        return out

    def disagreements(self) -> list[tuple[str, str, str]]:
        bad = []
        for r in self.rows:
            got = {a: v for a, v in r.outcomes.items() if v in ("yes", "no")}
            if r.expected:
                got["expected"] = r.expected
            for a, b in combinations(sorted(got), 2):
                if got[a] != got[b]:
                    bad.append((r.file, a, b))
        return bad

    def to_dict(self) -> dict:
        return {
            "algos": list(self.algos),
            "rows": [r.__dict__ for r in self.rows],
            "agreement": self.agreement(),
        }

    def to_json(self, timings: bool = True) -> str:
        d = self.to_dict()
        if not timings:
            for r in d["rows"]:
                r.pop("seconds")
        return json.dumps(d, sort_keys=True, indent=2) + "\n"

    def table(self) -> str:
        head = ["file", "n", "expected"] + list(self.algos)
        lines = ["\t".join(head)]
        for r in self.rows:
            cells = [r.file, str(r.params.get("n", "")), r.expected or "-"]
            for a in self.algos:
                sec = r.seconds.get(a)
                cells.append(f"{r.outcomes[a]} ({sec:.3f}s)" if sec is not None else r.outcomes[a])
            lines.append("\t".join(cells))
        lines.append("")
        lines.append("agreement")
        matrix = self.agreement()
        cols = list(matrix)
        lines.append("\t".join([""] + cols))
        for a in cols:
            vals = ["-" if matrix[a][b] is None else f"{100 * matrix[a][b]:.0f}%" for b in cols]
            lines.append("\t".join([a] + vals))
        return "\n".join(lines) + "\n"


def run_bench(
    directory: str | Path,
    algos=DEFAULT_ALGOS,
    timeout: float | None = None,
    seed: int = 0,
) -> BenchReport:
    rows = []
    for path in sorted(Path(directory).glob(f"*{INSTANCE_SUFFIX}")):
        text = path.read_text()
        inst = parse_instance(text)
        params = measure_params(inst.graph)
        row = BenchRow(path.name, expected_from_comments(instance_comments(text)), params)
        for algo in algos:
            start = time.perf_counter()
            try:
                with time_limit(timeout):
                    res, _ = run_algorithm(inst, algo, seed=seed, params=params)
                row.outcomes[algo] = "yes" if res.verdict else "no"
            except SolveTimeout:
                row.outcomes[algo] = "timeout"
            except Exception as exc:  # recorded per cell, the run goes on
                row.outcomes[algo] = f"error:{type(exc).__name__}"
            row.seconds[algo] = round(time.perf_counter() - start, 6)
        rows.append(row)
    return BenchReport(tuple(algos), rows)
