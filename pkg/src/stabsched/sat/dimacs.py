"""DIMACS CNF export and SAT-competition-style solver output parsing."""
from __future__ import annotations

import subprocess

from .problem import SatProblem


def to_dimacs(problem: SatProblem) -> str:
    lines = [f"p cnf {problem.num_vars} {len(problem.clauses)}"]
    for clause in problem.clauses:
        lines.append(" ".join(str(l) for l in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_solver_output(text: str, num_vars: int) -> tuple[str, list[bool] | None]:
    """Parse ``s SATISFIABLE``/``s UNSATISFIABLE`` plus ``v`` value lines."""
    status = None
    values: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("s "):
            word = line[2:].strip().upper()
            if word == "SATISFIABLE":
                status = "sat"
            elif word == "UNSATISFIABLE":
                status = "unsat"
            elif word in ("UNKNOWN", "INDETERMINATE"):
                status = "timeout"
        elif line.startswith("v "):
            values.extend(int(t) for t in line[2:].split())
    if status is None:
        raise ValueError("no status line in solver output")
    if status != "sat":
        return status, None
    model = [False] * (num_vars + 1)
    for lit in values:
        if lit == 0:
            continue
        v = abs(lit)
        if v <= num_vars:
            model[v] = lit > 0
    return status, model


def run_external(
    binary: str, problem: SatProblem, cnf_path: str, timeout_s: float | None
) -> tuple[str, list[bool] | None]:
    """Write DIMACS, run the solver process, parse its output.

    A timeout kills the process and reports verdict "timeout"; any other
    failure (missing binary, bad output) raises, it is never an Unsat.
    """
    with open(cnf_path, "w") as fh:
        fh.write(to_dimacs(problem))
    try:
        proc = subprocess.run(
            [binary, cnf_path],
            capture_output=True,
            text=True,
            timeout=timeout_s,
        )
    except subprocess.TimeoutExpired:
        return "timeout", None
    except OSError as e:
        raise RuntimeError(f"solver process {binary!r} failed to start: {e}") from e
    out = proc.stdout
    # accepted conventions: exit 10 = SAT, 20 = UNSAT, with s/v lines
    try:
        return parse_solver_output(out, problem.num_vars)
    except ValueError:
        if proc.returncode == 10:
            return "sat", None
        if proc.returncode == 20:
            return "unsat", None
        raise RuntimeError(
            f"solver {binary!r} produced no parsable output (exit {proc.returncode}): "
            f"{out[:200]!r} {proc.stderr[:200]!r}"
        )
