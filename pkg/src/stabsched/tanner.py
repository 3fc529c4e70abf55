"""Check-qubit Tanner graphs: degrees and optimal bipartite edge coloring."""
from __future__ import annotations

from dataclasses import dataclass, field

from .codes import Pauli, StabilizerCode


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite graph of m checks vs n data qubits with Pauli edge labels."""

    m: int
    n: int
    edges: tuple[tuple[int, int, Pauli], ...]

    def check_degree(self, i: int) -> int:
        return sum(1 for e in self.edges if e[0] == i)

    def qubit_degree(self, j: int) -> int:
        return sum(1 for e in self.edges if e[1] == j)

    def to_dot(self) -> str:
        lines = ["graph tanner {"]
        for i in range(self.m):
            lines.append(f'  c{i} [shape=square label="c{i}"];')
        for i, j, p in self.edges:
            lines.append(f'  c{i} -- q{j} [label="{p.value}"];')
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring: no two edges sharing an endpoint share a color."""

    colors: dict[tuple[int, int], int]
    n_colors: int


def from_code(code: StabilizerCode) -> TannerGraph:
    """Tanner graph with one edge per nonzero check-qubit interaction."""
    edges = []
    x, z = code.x_block(), code.z_block()
    for i in range(code.m):
        for j in range(code.n):
            if x[i, j] and z[i, j]:
                edges.append((i, j, Pauli.Y))
            elif x[i, j]:
                edges.append((i, j, Pauli.X))
            elif z[i, j]:
                edges.append((i, j, Pauli.Z))
    return TannerGraph(code.m, code.n, tuple(edges))


def max_degree(g: TannerGraph) -> int:
    """Maximum degree over all nodes, checks and data qubits alike."""
    deg_c = [0] * g.m
    deg_q = [0] * g.n
    for i, j, _ in g.edges:
        deg_c[i] += 1
        deg_q[j] += 1
    return max(deg_c + deg_q, default=0)


def bipartite_edge_coloring(g: TannerGraph, label: Pauli | None = None) -> EdgeColoring:
    """Color the edges with the given label (or all) in exactly Delta colors.

    Uses the alternating-path argument behind Koenig's theorem: for each new
    edge pick colors free at both ends; if they differ, flip the two-color
    path from the qubit side, which frees the check-side color there.
    """
    edges = [(i, j) for i, j, p in g.edges if label is None or p is label]
    if not edges:
        return EdgeColoring({}, 0)
    deg_c: dict[int, int] = {}
    deg_q: dict[int, int] = {}
    for i, j in edges:
        deg_c[i] = deg_c.get(i, 0) + 1
        deg_q[j] = deg_q.get(j, 0) + 1
    delta = max(max(deg_c.values()), max(deg_q.values()))
    # at_c[i][color] / at_q[j][color] -> partner node or -1
    at_c = {i: [-1] * delta for i in deg_c}
    at_q = {j: [-1] * delta for j in deg_q}
    colors: dict[tuple[int, int], int] = {}

    for i, j in edges:
        a = next(c for c in range(delta) if at_c[i][c] == -1)
        b = next(c for c in range(delta) if at_q[j][c] == -1)
        if a != b:
            # walk the alternating a/b path from qubit j; it cannot reach
            # check i (a is free at i), so flipping it frees a at j
            path: list[tuple[int, int, int]] = []  # (check, qubit, old color)
            side_q, node, want = True, j, a
            while True:
                table = at_q if side_q else at_c
                partner = table[node][want]
                if partner == -1:
                    break
                path.append((partner, node, want) if side_q else (node, partner, want))
                side_q, node = not side_q, partner
                want = b if want == a else a
            for ci, qj, old in path:
                at_c[ci][old] = -1
                at_q[qj][old] = -1
            for ci, qj, old in path:
                new = b if old == a else a
                colors[(ci, qj)] = new
                at_c[ci][new] = qj
                at_q[qj][new] = ci
        colors[(i, j)] = a
        at_c[i][a] = j
        at_q[j][a] = i
    used = 1 + max(colors.values())
    coloring = EdgeColoring(colors, used)
    _assert_proper(coloring, edges)
    return coloring


def _assert_proper(coloring: EdgeColoring, edges: list[tuple[int, int]]) -> None:
    seen_c: dict[tuple[int, int], tuple[int, int]] = {}
    seen_q: dict[tuple[int, int], tuple[int, int]] = {}
    for (i, j) in edges:
        c = coloring.colors[(i, j)]
        if (i, c) in seen_c or (j, c) in seen_q:
            raise AssertionError(f"improper coloring at edge ({i}, {j}) color {c}")
        seen_c[(i, c)] = (i, j)
        seen_q[(j, c)] = (i, j)
