"""Embedded CDCL SAT solver: watched literals, VSIDS, restarts, LBD pruning.

Literals are encoded internally as 2*v (positive) and 2*v + 1 (negative)
for dense array indexing. The solver is deterministic for a fixed seed;
timeouts are checked cooperatively at conflict boundaries.
"""
from __future__ import annotations

import random
import time
from heapq import heappush, heappop

UNDEF, TRUE, FALSE = 0, 1, 2

SAT, UNSAT, TIMEOUT = "sat", "unsat", "timeout"


def _luby(x: int) -> int:
    size, seq = 1, 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x %= size
    return 1 << seq


class CdclSolver:
    def __init__(self, num_vars: int, clauses: list[tuple[int, ...]], seed: int = 0):
        self.n = num_vars
        self.seed = seed
        self.rng = random.Random(seed)
        nl = 2 * num_vars + 2
        self.val = [UNDEF] * nl                # indexed by literal code
        self.watches: list[list] = [[] for _ in range(nl)]
        self.reason: list = [None] * (num_vars + 1)
        self.level = [0] * (num_vars + 1)
        self.trail: list[int] = []             # literal codes
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.activity = [0.0] * (num_vars + 1)
        self.var_inc = 1.0
        self.heap: list[tuple[float, int]] = []
        self.phase = [False] * (num_vars + 1)
        self.clauses: list[list[int]] = []     # problem clauses then learnt
        self.learnt_from = 0
        self.lbd: dict[int, int] = {}
        self.ok = True
        self.units: list[int] = []
        for c in clauses:
            if not self._add_clause([self._enc(l) for l in c]):
                self.ok = False
                break
        self.first_learnt = len(self.clauses)
        self.max_learnt = max(4000, len(self.clauses) // 2)

    @staticmethod
    def _enc(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    @staticmethod
    def _dec(code: int) -> int:
        return code // 2 if code % 2 == 0 else -(code // 2)

    def _add_clause(self, lits: list[int], learnt: bool = False) -> bool:
        if not learnt:
            lits = list(dict.fromkeys(lits))
            lit_set = set(lits)
            if any(l ^ 1 in lit_set for l in lits):
                return True  # tautology
        if len(lits) == 1:
            self.units.append(lits[0])
            return True
        idx = len(self.clauses)
        self.clauses.append(lits)
        self.watches[lits[0]].append(idx)
        self.watches[lits[1]].append(idx)
        return True

    def _bump(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for i in range(1, self.n + 1):
                self.activity[i] *= 1e-100
            self.var_inc *= 1e-100
        heappush(self.heap, (-self.activity[v], v))

    def _assign(self, code: int, reason) -> None:
        self.val[code] = TRUE
        self.val[code ^ 1] = FALSE
        v = code >> 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.phase[v] = not (code & 1)
        self.trail.append(code)

    def _propagate(self):
        """Returns a conflicting clause (list) or None."""
        val = self.val
        watches = self.watches
        clauses = self.clauses
        trail = self.trail
        level = self.level
        reason = self.reason
        phase = self.phase
        cur_level = len(self.trail_lim)
        while self.qhead < len(trail):
            code = trail[self.qhead]
            self.qhead += 1
            falsified = code ^ 1
            watch_list = watches[falsified]
            i = 0
            j = 0
            n_w = len(watch_list)
            while i < n_w:
                ci = watch_list[i]
                i += 1
                c = clauses[ci]
                # ensure falsified is c[1]
                if c[0] == falsified:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                if val[first] == TRUE:
                    watch_list[j] = ci
                    j += 1
                    continue
                found = False
                for k in range(2, len(c)):
                    lk = c[k]
                    if val[lk] != FALSE:
                        c[1], c[k] = lk, falsified
                        watches[lk].append(ci)
                        found = True
                        break
                if found:
                    continue
                watch_list[j] = ci
                j += 1
                if val[first] == FALSE:
                    # conflict: keep remaining watches, restore list
                    while i < n_w:
                        watch_list[j] = watch_list[i]
                        j += 1
                        i += 1
                    del watch_list[j:]
                    return c
                # inlined assignment
                val[first] = TRUE
                val[first ^ 1] = FALSE
                v = first >> 1
                level[v] = cur_level
                reason[v] = ci
                phase[v] = not (first & 1)
                trail.append(first)
            del watch_list[j:]
        return None

    def _analyze(self, conflict: list[int]) -> tuple[list[int], int, int]:
        """1UIP learning; returns (learnt clause codes, backjump level, lbd)."""
        n = self.n
        seen = bytearray(n + 1)
        learnt = [0]
        path_count = 0
        p = -1  # asserted literal being resolved on
        c = conflict
        trail = self.trail
        idx = len(trail) - 1
        cur_level = len(self.trail_lim)
        while True:
            for q in c:
                if q == p:
                    continue
                v = q >> 1
                if not seen[v] and self.level[v] > 0:
                    seen[v] = 1
                    self._bump(v)
                    if self.level[v] >= cur_level:
                        path_count += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            v = p >> 1
            seen[v] = 0
            path_count -= 1
            idx -= 1
            if path_count == 0:
                learnt[0] = p ^ 1
                break
            reason = self.reason[v]
            c = self.clauses[reason] if isinstance(reason, int) else []
        # clause minimization: drop literals implied by the rest
        marked = bytearray(n + 1)
        for q in learnt:
            marked[q >> 1] = 1
        minimized = [learnt[0]]
        for q in learnt[1:]:
            r = self.reason[q >> 1]
            if not isinstance(r, int):
                minimized.append(q)
                continue
            if all(marked[o >> 1] or self.level[o >> 1] == 0 for o in self.clauses[r] if o != (q ^ 1)):
                continue
            minimized.append(q)
        learnt = minimized
        if len(learnt) == 1:
            bj = 0
        else:
            levels = sorted((self.level[q >> 1] for q in learnt[1:]), reverse=True)
            bj = levels[0]
            # move a literal of backjump level to position 1
            for k in range(1, len(learnt)):
                if self.level[learnt[k] >> 1] == bj:
                    learnt[1], learnt[k] = learnt[k], learnt[1]
                    break
        lbd = len({self.level[q >> 1] for q in learnt})
        return learnt, bj, lbd

    def _backjump(self, target: int) -> None:
        while len(self.trail_lim) > target:
            lim = self.trail_lim.pop()
            for code in reversed(self.trail[lim:]):
                v = code >> 1
                self.val[code] = UNDEF
                self.val[code ^ 1] = UNDEF
                self.reason[v] = None
                heappush(self.heap, (-self.activity[v], v))
            del self.trail[lim:]
        self.qhead = min(self.qhead, len(self.trail))

    def _reduce_db(self) -> None:
        """Drop the worst half of learnt clauses by (lbd, length)."""
        learnt_idx = [
            i
            for i in range(self.first_learnt, len(self.clauses))
            if len(self.clauses[i]) > 2 and i not in self._locked()
        ]
        learnt_idx.sort(key=lambda i: (self.lbd.get(i, 9), len(self.clauses[i])))
        keep = set(learnt_idx[: len(learnt_idx) // 2])
        keep.update(self._locked())
        old = self.clauses
        remap: dict[int, int] = {}
        new_clauses = old[: self.first_learnt]
        for i in range(self.first_learnt, len(old)):
            if i in keep or len(old[i]) <= 2:
                remap[i] = len(new_clauses)
                new_clauses.append(old[i])
        self.clauses = new_clauses
        new_lbd = {}
        for i, ni in remap.items():
            if i in self.lbd:
                new_lbd[ni] = self.lbd[i]
        self.lbd = new_lbd
        for wl in self.watches:
            wl.clear()
        for idx, c in enumerate(self.clauses):
            self.watches[c[0]].append(idx)
            self.watches[c[1]].append(idx)
        for v in range(1, self.n + 1):
            r = self.reason[v]
            if isinstance(r, int):
                self.reason[v] = remap.get(r, r if r < self.first_learnt else None)
        self.max_learnt = int(self.max_learnt * 1.3)

    def _locked(self) -> set[int]:
        out = set()
        for v in range(1, self.n + 1):
            r = self.reason[v]
            if isinstance(r, int) and r >= self.first_learnt:
                out.add(r)
        return out

    def _decide(self) -> int:
        while self.heap:
            _, v = heappop(self.heap)
            if self.val[2 * v] == UNDEF:
                if self.rng.random() < 0.02:
                    return 2 * v + (1 if self.rng.random() < 0.5 else 0)
                return 2 * v + (0 if self.phase[v] else 1)
        for v in range(1, self.n + 1):
            if self.val[2 * v] == UNDEF:
                return 2 * v + (0 if self.phase[v] else 1)
        return -1

    def solve(self, timeout_s: float | None = None):
        """Returns (status, model) with model as 1-indexed bools for SAT."""
        if not self.ok:
            return UNSAT, None
        deadline = None if timeout_s is None else time.monotonic() + timeout_s
        for code in self.units:
            if self.val[code] == FALSE:
                return UNSAT, None
            if self.val[code] == UNDEF:
                self._assign(code, None)
        if self._propagate() is not None:
            return UNSAT, None
        for v in range(self.n, 0, -1):
            heappush(self.heap, (0.0, v))
        # seed-dependent initial phases for model diversity
        for v in range(1, self.n + 1):
            self.phase[v] = self.rng.random() < 0.5
        conflicts = 0
        restart_idx = 0
        budget = 256 * _luby(0)
        while True:
            conflict = self._propagate()
            if conflict is not None:
                conflicts += 1
                budget -= 1
                if not self.trail_lim:
                    return UNSAT, None
                learnt, bj, lbd = self._analyze(conflict)
                self._backjump(bj)
                if len(learnt) == 1:
                    self._assign(learnt[0], None)
                else:
                    idx = len(self.clauses)
                    self.clauses.append(learnt)
                    self.watches[learnt[0]].append(idx)
                    self.watches[learnt[1]].append(idx)
                    self.lbd[idx] = lbd
                    self._assign(learnt[0], idx)
                self.var_inc /= 0.95
                if conflicts % 64 == 0 and deadline is not None and time.monotonic() > deadline:
                    return TIMEOUT, None
                continue
            if budget <= 0:
                # restart
                restart_idx += 1
                budget = 256 * _luby(restart_idx)
                self._backjump(0)
                if deadline is not None and time.monotonic() > deadline:
                    return TIMEOUT, None
                if len(self.clauses) - self.first_learnt > self.max_learnt:
                    self._reduce_db()
                continue
            code = self._decide()
            if code < 0:
                model = [False] * (self.n + 1)
                for v in range(1, self.n + 1):
                    model[v] = self.val[2 * v] == TRUE
                return SAT, model
            self.trail_lim.append(len(self.trail))
            self._assign(code, None)


def solve_cnf(num_vars: int, clauses: list[tuple[int, ...]], timeout_s=None, seed=0):
    return CdclSolver(num_vars, clauses, seed=seed).solve(timeout_s)
