"""Solver dispatch, result records and timeouts shared by the CLI and the bench harness."""

from __future__ import annotations

import json
import signal
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any

from .graph import Instance, ThresholdGraph, preprocess, require_preprocessed, verify
from .kl import solve_derandomized, solve_randomized
from .kzeta import solve_kzeta
from .nd import solve_nd_k, solve_nd_l, type_partition
from .oracle import Y_ENUM_MAX_NODES, solve_by_x_enumeration, solve_by_y_enumeration
from .result import SolveResult, certified, negative
from .treewidth import TreeDecomposition, heuristic_decomposition, solve_tw

ALGORITHMS = ("oracle", "kl", "kzeta", "tw", "nd-k", "nd-l", "auto")

# auto dispatch thresholds
AUTO_MAX_ND = 8
AUTO_MAX_WIDTH = 6
AUTO_MAX_ZETA_K = 12


class SolveTimeout(Exception):
    pass


@contextmanager
def time_limit(seconds: float | None):
    """Raise SolveTimeout after ``seconds`` of wall time (main thread, POSIX only)."""
    if not seconds:
        yield
        return

    def on_alarm(signum, frame):
        raise SolveTimeout(f"exceeded {seconds:g} s")

    previous = signal.signal(signal.SIGALRM, on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def measure_params(G: ThresholdGraph, width: bool = True) -> dict[str, int]:
    out = {
        "n": G.n,
        "m": G.m,
        "max_degree": G.max_degree(),
        "zeta": len(G.zero_threshold_nodes()),
        "nd": type_partition(G).nd,
    }
    if width:
        out["heuristic_width"] = heuristic_decomposition(G).width
    return out


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    return x


@dataclass
class ResultRecord:
    verdict: str
    algorithm: str
    X: list[int] | None
    Y: list[int] | None
    params: dict[str, Any]
    seed: int | None = None
    trials: int | None = None
    stats: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    def canonical(self) -> dict:
        """Everything except timing; equal across reruns with the same flags."""
        d = _plain(asdict(self))
        d.pop("timing")
        return d

    def to_json(self, canonical: bool = False) -> str:
        d = self.canonical() if canonical else _plain(asdict(self))
        return json.dumps(d, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls(**json.loads(text))


def _oracle(inst: Instance, mode: str) -> SolveResult:
    res = solve_by_x_enumeration(inst) if mode == "x" else solve_by_y_enumeration(inst)
    name = f"oracle-{mode}"
    if res.verdict:
        return certified(inst, res.best_solution.influenced, name)
    return negative(name)


def default_trials(inst: Instance) -> int:
    return 5 * 2 ** (inst.k + inst.l)


def run_algorithm(
    inst: Instance,
    algo: str,
    *,
    mode: str | None = None,
    td: TreeDecomposition | None = None,
    seed: int = 0,
    trials: int | None = None,
    params: dict | None = None,
) -> tuple[SolveResult, list[str]]:
    """Run one solver; ``auto`` picks by measured parameters. Returns (result, notes)."""
    notes: list[str] = []
    if algo == "oracle":
        return _oracle(inst, mode or "y"), notes
    if algo == "kl":
        if (mode or "derand") == "rand":
            return solve_randomized(inst, trials or default_trials(inst), seed), notes
        return solve_derandomized(inst), notes
    if algo == "kzeta":
        return solve_kzeta(inst), notes
    if algo == "tw":
        return solve_tw(inst, td), notes
    if algo == "nd-k":
        return solve_nd_k(inst), notes
    if algo == "nd-l":
        return solve_nd_l(inst), notes
    if algo != "auto":
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")

    p = params or measure_params(inst.graph)
    if p["nd"] <= AUTO_MAX_ND:
        pick = "nd-k" if inst.k <= inst.l else "nd-l"
        notes.append(f"auto: nd={p['nd']} <= {AUTO_MAX_ND}, picked {pick}")
        return run_algorithm(inst, pick)[0], notes
    if p["heuristic_width"] <= AUTO_MAX_WIDTH:
        notes.append(f"auto: width={p['heuristic_width']} <= {AUTO_MAX_WIDTH}, picked tw")
        return solve_tw(inst, td), notes
    if p["zeta"] * inst.k <= AUTO_MAX_ZETA_K:
        notes.append(f"auto: zeta*k={p['zeta'] * inst.k} <= {AUTO_MAX_ZETA_K}, picked kzeta")
        return solve_kzeta(inst), notes
    n_trials = trials or default_trials(inst)
    notes.append(f"auto: picked kl randomized with {n_trials} trials")
    res = solve_randomized(inst, n_trials, seed)
    if not res.verdict and inst.graph.n <= Y_ENUM_MAX_NODES:
        notes.append("auto: randomized search found nothing, confirmed by the oracle")
        res = _oracle(inst, "y")
    return res, notes


def solve_record(
    inst: Instance,
    algo: str,
    *,
    mode: str | None = None,
    td: TreeDecomposition | None = None,
    seed: int = 0,
    trials: int | None = None,
    timeout: float | None = None,
) -> ResultRecord:
    require_preprocessed(inst.graph)
    start = time.perf_counter()
    params = measure_params(inst.graph)
    with time_limit(timeout):
        res, notes = run_algorithm(
            inst, algo, mode=mode, td=td, seed=seed, trials=trials, params=params
        )
    elapsed = time.perf_counter() - start
    if "width" in res.stats:
        params["decomposition_width"] = res.stats["width"]
    X = Y = None
    if res.verdict:
        sol = verify(inst, res.solution.influenced)
        if not sol.verdict:  # pragma: no cover - certified() already guards this
            raise AssertionError("refusing to emit a yes record with a rejected witness")
        X = [v + 1 for v in sorted(sol.influenced)]
        Y = [v + 1 for v in sorted(sol.immunized)]
    randomized = res.stats.get("mode") == "rand"
    return ResultRecord(
        verdict="yes" if res.verdict else "no",
        algorithm=res.algorithm,
        X=X,
        Y=Y,
        params=params,
        seed=seed if randomized else None,
        trials=res.stats.get("trials") if randomized else None,
        stats={k: v for k, v in res.stats.items() if k not in ("seed", "trials")},
        notes=notes,
        timing={"wall_seconds": round(elapsed, 6)},
    )


def prepare(inst: Instance) -> tuple[Instance, list[int]]:
    """Preprocess an instance; returns it with the removed node ids (0-based)."""
    G, removed = preprocess(inst.graph)
    return Instance(G, min(inst.k, G.n), min(inst.l, G.n)), sorted(removed)
