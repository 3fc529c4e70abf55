"""Solve dispatch: embedded CDCL or external DIMACS process, with an
unconditional model check on every Sat result."""
from __future__ import annotations

import os
import tempfile
import time
from dataclasses import dataclass

from . import cdcl, dimacs
from .problem import SatProblem


class SolverBackendError(RuntimeError):
    """Backend malfunction (process failure, bogus model); distinct from Unsat."""


@dataclass(frozen=True)
class SolveOutcome:
    verdict: str  # "sat" | "unsat" | "timeout"
    model: list[bool] | None
    wall_time: float
    backend: str
    seed: int

    def __post_init__(self):
        assert (self.verdict == "sat") == (self.model is not None)


def solve(
    problem: SatProblem,
    timeout_s: float | None = None,
    seed: int = 0,
    backend: str = "embedded",
) -> SolveOutcome:
    """Solve the problem; Sat models are re-verified before returning."""
    start = time.monotonic()
    if backend == "embedded":
        status, model = cdcl.solve_cnf(problem.num_vars, problem.clauses, timeout_s, seed)
    elif backend.startswith("dimacs:"):
        binary = backend.split(":", 1)[1]
        fd, path = tempfile.mkstemp(suffix=".cnf", prefix="stabsched_")
        os.close(fd)
        try:
            status, model = dimacs.run_external(binary, problem, path, timeout_s)
        except RuntimeError as e:
            raise SolverBackendError(str(e)) from e
        finally:
            try:
                os.unlink(path)
            except OSError:
                pass
        if status == "sat" and model is None:
            raise SolverBackendError(f"{backend}: SAT answer without a model")
    else:
        raise SolverBackendError(f"unknown backend {backend!r}")
    elapsed = time.monotonic() - start
    if status == "sat" and not problem.check_model(model):
        raise SolverBackendError(f"backend {backend!r} returned a model violating the clauses")
    return SolveOutcome(status, model if status == "sat" else None, elapsed, backend, seed)
