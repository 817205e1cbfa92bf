from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import Instance, Solution, verify


@dataclass
class SolveResult:
    """Verdict of one solver run.

    ``solution`` is present exactly when ``verdict`` is True and has already
    been passed through :func:`iib.graph.verify`.
    """

    verdict: bool
    solution: Solution | None
    algorithm: str
    stats: dict[str, Any] = field(default_factory=dict)


def certified(inst: Instance, X, algorithm: str, **stats) -> SolveResult:
    """Wrap a candidate witness; refuses to report yes unless verify accepts."""
    sol = verify(inst, X)
    if not sol.verdict:
        raise AssertionError(
            f"{algorithm} produced a witness rejected by verify: X={sorted(X)}"
        )
    return SolveResult(True, sol, algorithm, dict(stats))


def negative(algorithm: str, **stats) -> SolveResult:
    return SolveResult(False, None, algorithm, dict(stats))
