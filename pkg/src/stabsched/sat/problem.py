"""Propositional problem construction: clauses, cardinality, parity.

Variables are dense positive integers; a literal is +v or -v. Cardinality
constraints use pairwise encodings for small sets and a sequential ladder
beyond; parity uses a chained XOR ladder. All auxiliary definitions are
biconditional, so problem models correspond exactly to assignments of the
original variables that satisfy the encoded predicate.
"""
from __future__ import annotations

from typing import Hashable, Iterable

VarId = int


class SatProblem:
    """A CNF formula under construction plus variable annotations."""

    def __init__(self):
        self.num_vars: int = 0
        self.clauses: list[tuple[int, ...]] = []
        self.tags: dict[VarId, Hashable] = {}

    def new_var(self, tag: Hashable = None) -> VarId:
        self.num_vars += 1
        if tag is not None:
            self.tags[self.num_vars] = tag
        return self.num_vars

    def add_clause(self, lits: Iterable[int]) -> None:
        clause = tuple(lits)
        if not clause:
            raise ValueError("empty clause")
        for lit in clause:
            if lit == 0 or abs(lit) > self.num_vars:
                raise ValueError(f"literal {lit} references an unallocated variable")
        self.clauses.append(clause)

    def add_at_most_one(self, vars: list[VarId]) -> None:
        """Sum of vars <= 1: pairwise up to 6 vars, sequential ladder beyond."""
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variable in at-most-one")
        if len(vars) <= 1:
            return
        if len(vars) <= 6:
            for i in range(len(vars)):
                for j in range(i + 1, len(vars)):
                    self.add_clause((-vars[i], -vars[j]))
            return
        # sequential ladder with defined prefixes: s_i <-> (v_1 | ... | v_i)
        prev = None
        for i, v in enumerate(vars[:-1]):
            s = self.new_var(("amo", i))
            self.add_clause((-v, s))
            if prev is None:
                self.add_clause((-s, v))
            else:
                self.add_clause((-prev, s))
                self.add_clause((-s, prev, v))
                self.add_clause((-prev, -v))
            prev = s
        self.add_clause((-prev, -vars[-1]))

    def add_exactly_one(self, vars: list[VarId]) -> None:
        if not vars:
            raise ValueError("exactly-one over an empty set is unsatisfiable")
        self.add_clause(tuple(vars))
        self.add_at_most_one(vars)

    def add_xor_even(self, vars: list[VarId]) -> None:
        """Parity constraint: XOR of vars = 0. Chained ladder over 2-ary steps."""
        vars = list(vars)
        if not vars:
            return
        if len(vars) == 1:
            self.add_clause((-vars[0],))
            return
        acc = vars[0]
        for i, v in enumerate(vars[1:-1], start=1):
            nxt = self.new_var(("xor", id(vars), i))
            self._add_xor3(acc, v, nxt)
            acc = nxt
        # acc XOR last = 0  =>  acc == last
        self.add_clause((-acc, vars[-1]))
        self.add_clause((acc, -vars[-1]))

    def _add_xor3(self, a: int, b: int, out: int) -> None:
        """out <-> a XOR b."""
        self.add_clause((-a, -b, -out))
        self.add_clause((a, b, -out))
        self.add_clause((a, -b, out))
        self.add_clause((-a, b, out))

    def add_and_def(self, out: VarId, lits: list[int]) -> None:
        """out <-> AND(lits)."""
        for lit in lits:
            self.add_clause((-out, lit))
        self.add_clause((out, *(-lit for lit in lits)))

    def add_or_def(self, out: VarId, lits: list[int]) -> None:
        """out <-> OR(lits)."""
        for lit in lits:
            self.add_clause((-lit, out))
        self.add_clause((-out, *lits))

    def check_model(self, model: list[bool]) -> bool:
        """True iff the assignment (1-indexed) satisfies every clause."""
        if len(model) < self.num_vars + 1:
            return False
        for clause in self.clauses:
            for lit in clause:
                if model[lit] if lit > 0 else not model[-lit]:
                    break
            else:
                return False
        return True
