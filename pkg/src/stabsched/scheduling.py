"""Syndrome-extraction schedulers: constraint encoding, optimal-depth search,
ASAP and coloration baselines, and the solver-independent validator.

A schedule assigns each Tanner edge (check i, qubit j) a tick in [1, D];
non-edges carry the sentinel -1. Three rules define validity: per tick a
qubit joins at most one gate (occupation), every edge fires exactly once
(integrality), and every check pair has an even inversion count over its
anticommuting shared qubits (commutation parity).
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import sat, tanner
from .codes import Pauli, StabilizerCode
from .sat import SatProblem
from .tanner import TannerGraph


@dataclass(frozen=True)
class Schedule:
    """Tick assignment for every check-qubit interaction of a code."""

    code_name: str
    ticks: np.ndarray  # (m, n) int16, -1 on non-edges
    optimality: str = "unknown"  # "optimal" | "near-optimal" | "fallback" | "unknown"
    seed: int = 0

    @property
    def depth(self) -> int:
        return int(self.ticks.max(initial=0))

    def tick_of(self, i: int, j: int) -> int:
        return int(self.ticks[i, j])

    def __eq__(self, other):
        if not isinstance(other, Schedule):
            return NotImplemented
        return (
            self.code_name == other.code_name
            and self.optimality == other.optimality
            and self.seed == other.seed
            and np.array_equal(self.ticks, other.ticks)
        )


@dataclass(frozen=True)
class Violation:
    kind: str  # DataOccupation | AncillaOccupation | Integrality | CommutativityParity
    witness: tuple

    def __str__(self):
        return f"{self.kind}{self.witness}"


@dataclass
class DepthSearchLog:
    records: list[dict] = field(default_factory=list)

    def add(self, t_max: int, verdict: str, wall_time: float, seed: int) -> None:
        if self.records and t_max <= self.records[-1]["t_max"]:
            raise ValueError("T_max must increase strictly")
        self.records.append(
            {"t_max": t_max, "verdict": verdict, "wall_time": round(wall_time, 6), "seed": seed}
        )


def lower_bound(code: StabilizerCode) -> int:
    """Depth lower bound: the Tanner graph's maximum degree."""
    return tanner.max_degree(tanner.from_code(code))


def anticommuting_shared_qubits(code: StabilizerCode, i: int, j: int) -> list[int]:
    """Qubits where checks i and j anticommute locally."""
    x, z = code.x_block(), code.z_block()
    mask = (x[i] & z[j]) ^ (z[i] & x[j])
    return [int(q) for q in np.nonzero(mask)[0]]


def _pair_constraints(code: StabilizerCode) -> list[tuple[int, int, list[int]]]:
    """All check pairs with their (even-sized) anticommuting overlap sets."""
    x, z = code.x_block(), code.z_block()
    out = []
    for i in range(code.m):
        xi, zi = x[i], z[i]
        masks = (x[i + 1 :] & zi[None, :]) ^ (z[i + 1 :] & xi[None, :])
        for off in np.nonzero(masks.any(axis=1))[0]:
            j = i + 1 + int(off)
            out.append((i, j, [int(q) for q in np.nonzero(masks[off])[0]]))
    return out


def encode(
    code: StabilizerCode, t_max: int, seed: int = 0
) -> tuple[SatProblem, dict[tuple[int, int, int], int]]:
    """CNF whose models are exactly the valid schedules of depth <= t_max.

    Variables exist only for Tanner edges; edge-order variables are defined
    from prefix ("fired by tick k") variables so the pair-parity constraint
    is a plain XOR over order variables.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    g = tanner.from_code(code)
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i, j, _ in g.edges]
    order = rng.permutation(len(edges)) if seed else np.arange(len(edges))
    p = SatProblem()
    a: dict[tuple[int, int, int], int] = {}
    for idx in order:
        i, j = edges[idx]
        for k in range(1, t_max + 1):
            a[(i, j, k)] = p.new_var(("A", i, j, k))
    # integrality: each edge fires exactly once
    for i, j in edges:
        p.add_exactly_one([a[(i, j, k)] for k in range(1, t_max + 1)])
    # occupation: data qubits
    by_qubit: dict[int, list[tuple[int, int]]] = {}
    by_check: dict[int, list[tuple[int, int]]] = {}
    for i, j in edges:
        by_qubit.setdefault(j, []).append((i, j))
        by_check.setdefault(i, []).append((i, j))
    for k in range(1, t_max + 1):
        for j, es in by_qubit.items():
            if len(es) > 1:
                p.add_at_most_one([a[(i2, j2, k)] for i2, j2 in es])
        for i, es in by_check.items():
            if len(es) > 1:
                p.add_at_most_one([a[(i2, j2, k)] for i2, j2 in es])
    # tight-packing strengthening (redundant, model-preserving): a node with
    # exactly t_max gates must be busy at every tick
    for es in list(by_qubit.values()) + list(by_check.values()):
        if len(es) == t_max and t_max > 1:
            for k in range(1, t_max + 1):
                p.add_clause(tuple(a[(i2, j2, k)] for i2, j2 in es))
    # commutation parity per check pair over anticommuting shared qubits
    prefix: dict[tuple[int, int, int], int] = {}

    def prefix_var(i: int, j: int, k: int) -> int:
        if k == 1:
            return a[(i, j, 1)]
        key = (i, j, k)
        if key not in prefix:
            v = p.new_var(("P", i, j, k))
            prefix[key] = v
            p.add_or_def(v, [prefix_var(i, j, k - 1), a[(i, j, k)]])
        return prefix[key]

    for i, j2, shared in _pair_constraints(code):
        order_vars = []
        for l in shared:
            conj = []
            for k in range(2, t_max + 1):
                c = p.new_var(("C", i, j2, l, k))
                p.add_and_def(c, [a[(j2, l, k)], prefix_var(i, l, k - 1)])
                conj.append(c)
            o = p.new_var(("O", i, j2, l))
            if conj:
                p.add_or_def(o, conj)
            else:
                p.add_clause((-o,))
            order_vars.append(o)
        p.add_xor_even(order_vars)
    return p, a


def decode_model(
    code: StabilizerCode,
    model: list[bool],
    varmap: dict[tuple[int, int, int], int],
    seed: int = 0,
    optimality: str = "unknown",
) -> Schedule:
    ticks = np.full((code.m, code.n), -1, dtype=np.int16)
    for (i, j, k), v in varmap.items():
        if model[v]:
            if ticks[i, j] != -1:
                raise AssertionError(f"edge ({i},{j}) fired twice in model")
            ticks[i, j] = k
    return Schedule(code.name, ticks, optimality, seed)


def validate_schedule(code: StabilizerCode, s: Schedule) -> list[Violation]:
    """Check the three rules directly on the tick matrix; no solver involved."""
    violations: list[Violation] = []
    g = tanner.from_code(code)
    edge_set = {(i, j) for i, j, _ in g.edges}
    ticks = s.ticks
    depth = s.depth
    # integrality and sentinel discipline
    for i in range(code.m):
        for j in range(code.n):
            t = int(ticks[i, j])
            if (i, j) in edge_set:
                if not (1 <= t <= depth):
                    violations.append(Violation("Integrality", (i, j, t)))
            elif t != -1:
                violations.append(Violation("Integrality", (i, j, t)))
    # occupation per tick: data qubits and ancillas
    for k in range(1, depth + 1):
        hits = ticks == k
        per_qubit = hits.sum(axis=0)
        for j in np.nonzero(per_qubit > 1)[0]:
            involved = tuple(int(i) for i in np.nonzero(hits[:, j])[0])
            violations.append(Violation("DataOccupation", (int(j), k, involved)))
        per_check = hits.sum(axis=1)
        for i in np.nonzero(per_check > 1)[0]:
            involved = tuple(int(j) for j in np.nonzero(hits[i])[0])
            violations.append(Violation("AncillaOccupation", (int(i), k, involved)))
    # pair parity
    for i, j2, shared in _pair_constraints(code):
        inversions = sum(1 for l in shared if ticks[i, l] < ticks[j2, l])
        if inversions % 2:
            violations.append(Violation("CommutativityParity", (i, j2, tuple(shared))))
    return violations


def solve_optimal(
    code: StabilizerCode,
    per_depth_timeout: float | None = None,
    seed: int = 0,
    backend: str = "embedded",
    t_start: int | None = None,
    t_stop: int | None = None,
) -> tuple[Schedule | None, DepthSearchLog]:
    """Iterate T_max from the degree lower bound to twice the bound.

    Sat at depth T decodes, validates, and returns; Timeout records and
    moves on, so a later Sat is only "near-optimal". Returns no schedule
    if every depth fails.
    """
    delta = lower_bound(code)
    log = DepthSearchLog()
    t_begin = t_start if t_start is not None else delta
    t_end = t_stop if t_stop is not None else 2 * delta
    timed_out = False
    for t_max in range(t_begin, t_end + 1):
        problem, varmap = encode(code, t_max, seed=seed)
        outcome = sat.solve(problem, timeout_s=per_depth_timeout, seed=seed, backend=backend)
        log.add(t_max, outcome.verdict, outcome.wall_time, seed)
        if outcome.verdict == "timeout":
            timed_out = True
            continue
        if outcome.verdict == "sat":
            flag = "near-optimal" if timed_out and t_max > delta else "optimal"
            schedule = decode_model(code, outcome.model, varmap, seed=seed, optimality=flag)
            bad = validate_schedule(code, schedule)
            if bad:
                raise AssertionError(f"decoded schedule failed validation: {bad[:3]}")
            return schedule, log
    return None, log


def asap_schedule(code: StabilizerCode) -> Schedule:
    """Greedy earliest-tick placement in (check, qubit) order.

    Gates on an anticommuting shared qubit follow the uniform direction
    "lower check index first", which keeps every pair's inversion count
    even because anticommuting overlaps have even size.
    """
    g = tanner.from_code(code)
    ticks = np.full((code.m, code.n), -1, dtype=np.int16)
    x, z = code.x_block(), code.z_block()
    check_busy: dict[tuple[int, int], bool] = {}
    qubit_busy: dict[tuple[int, int], bool] = {}
    for i, j, _ in sorted(g.edges, key=lambda e: (e[0], e[1])):
        # precedence: all earlier checks' gates on an anticommuting shared
        # qubit must come strictly before this one
        floor = 0
        for i2 in range(i):
            if ticks[i2, j] > floor and ((x[i2, j] & z[i, j]) ^ (z[i2, j] & x[i, j])):
                floor = int(ticks[i2, j])
        k = floor + 1
        while check_busy.get((i, k)) or qubit_busy.get((j, k)):
            k += 1
        ticks[i, j] = k
        check_busy[(i, k)] = True
        qubit_busy[(j, k)] = True
    s = Schedule(code.name, ticks, "baseline-asap")
    bad = validate_schedule(code, s)
    if bad:
        raise AssertionError(f"asap produced an invalid schedule: {bad[:3]}")
    return s


def coloration_schedule(code: StabilizerCode) -> Schedule:
    """Edge-color X gates, then Z gates, then Y gates; concatenate layers."""
    g = tanner.from_code(code)
    ticks = np.full((code.m, code.n), -1, dtype=np.int16)
    offset = 0
    for label in (Pauli.X, Pauli.Z, Pauli.Y):
        coloring = tanner.bipartite_edge_coloring(g, label)
        for (i, j), c in coloring.colors.items():
            ticks[i, j] = offset + c + 1
        offset += coloring.n_colors
    s = Schedule(code.name, ticks, "baseline-color")
    bad = validate_schedule(code, s)
    if bad:
        raise AssertionError(f"coloration produced an invalid schedule: {bad[:3]}")
    return s


def serialize_schedule(code: StabilizerCode, s: Schedule, log: DepthSearchLog | None = None, extra: dict | None = None) -> str:
    """Canonical JSON text; bit-exact round trip with parse_schedule."""
    g = tanner.from_code(code)
    gates = [
        {"check": i, "qubit": j, "pauli": p.value, "tick": int(s.ticks[i, j])}
        for i, j, p in sorted(g.edges, key=lambda e: (e[0], e[1]))
    ]
    doc = {
        "code": s.code_name,
        "depth": s.depth,
        "optimality": s.optimality,
        "seed": s.seed,
        "m": code.m,
        "n": code.n,
        "gates": gates,
        "search_log": log.records if log else [],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_schedule(text: str) -> tuple[Schedule, dict]:
    doc = json.loads(text)
    ticks = np.full((doc["m"], doc["n"]), -1, dtype=np.int16)
    for gate in doc["gates"]:
        ticks[gate["check"], gate["qubit"]] = gate["tick"]
    s = Schedule(doc["code"], ticks, doc["optimality"], doc["seed"])
    return s, doc
