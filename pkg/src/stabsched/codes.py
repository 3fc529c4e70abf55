"""Stabilizer-code models: binary symplectic form, parsers, code families.

Conventions: a check matrix H has shape (m, 2n) with X components in
columns [0, n) and Z components in [n, 2n). CSS codes keep separate Hx/Hz
blocks; converting to BSF puts X rows first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .gf2 import BitMatrix


class CodeError(ValueError):
    """Raised for malformed or inconsistent code descriptions."""


class Pauli(enum.Enum):
    X = "X"
    Y = "Y"
    Z = "Z"


def _commutation_defects(x: np.ndarray, z: np.ndarray) -> list[tuple[int, int]]:
    """Row pairs whose symplectic product is odd (i.e. anticommute)."""
    sym = (x.astype(np.int64) @ z.T.astype(np.int64) + z.astype(np.int64) @ x.T.astype(np.int64)) & 1
    bad = np.argwhere(np.triu(sym, k=1))
    return [(int(i), int(j)) for i, j in bad]


@dataclass(frozen=True)
class StabilizerCode:
    """A stabilizer code given by its (m, 2n) binary symplectic check matrix."""

    name: str
    H: BitMatrix

    def __post_init__(self):
        if self.H.cols % 2:
            raise CodeError("BSF matrix must have an even column count")
        if self.H.rows == 0:
            raise CodeError("no checks")
        bits = self.H.to_array()
        n = self.H.cols // 2
        weights = bits.sum(axis=1)
        if (weights == 0).any():
            raise CodeError(f"all-zero check row {int(np.argmax(weights == 0))}")
        defects = _commutation_defects(bits[:, :n], bits[:, n:])
        if defects:
            i, j = defects[0]
            raise CodeError(f"checks {i} and {j} do not commute")

    @property
    def n(self) -> int:
        return self.H.cols // 2

    @property
    def m(self) -> int:
        return self.H.rows

    def x_block(self) -> np.ndarray:
        return self.H.to_array()[:, : self.n]

    def z_block(self) -> np.ndarray:
        return self.H.to_array()[:, self.n :]

    def pauli_at(self, row: int, qubit: int) -> Pauli | None:
        x = self.H.get(row, qubit)
        z = self.H.get(row, qubit + self.n)
        if x and z:
            return Pauli.Y
        if x:
            return Pauli.X
        if z:
            return Pauli.Z
        return None


@dataclass(frozen=True)
class CssCode:
    """CSS code with X-type checks Hx and Z-type checks Hz on n qubits."""

    name: str
    Hx: BitMatrix
    Hz: BitMatrix

    def __post_init__(self):
        if self.Hx.rows and self.Hz.rows and self.Hx.cols != self.Hz.cols:
            raise CodeError("Hx and Hz column counts differ")
        hx, hz = self.Hx.to_array(), self.Hz.to_array()
        for label, block in (("Hx", hx), ("Hz", hz)):
            if block.shape[0] and (block.sum(axis=1) == 0).any():
                raise CodeError(f"all-zero row in {label}")
        if hx.shape[0] and hz.shape[0]:
            prod = (hx.astype(np.int64) @ hz.T.astype(np.int64)) & 1
            if prod.any():
                i, j = map(int, np.argwhere(prod)[0])
                raise CodeError(f"Hx row {i} and Hz row {j} overlap on an odd qubit count")

    @property
    def n(self) -> int:
        return self.Hx.cols if self.Hx.rows else self.Hz.cols

    @property
    def mx(self) -> int:
        return self.Hx.rows

    @property
    def mz(self) -> int:
        return self.Hz.rows


def css_to_bsf(code: CssCode) -> StabilizerCode:
    """Stack a CSS code into one BSF matrix: X-type rows first, then Z-type."""
    n = code.n
    hx, hz = code.Hx.to_array(), code.Hz.to_array()
    top = np.hstack([hx, np.zeros_like(hx)]) if code.mx else np.zeros((0, 2 * n), dtype=np.uint8)
    bot = np.hstack([np.zeros_like(hz), hz]) if code.mz else np.zeros((0, 2 * n), dtype=np.uint8)
    return StabilizerCode(code.name, BitMatrix.from_array(np.vstack([top, bot])))


def _strip_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _parse_bit_row(line: str, width: int, what: str) -> np.ndarray:
    compact = line.replace(" ", "")
    if len(compact) != width or set(compact) - {"0", "1"}:
        raise CodeError(f"{what}: expected {width} bits, got {line!r}")
    return np.frombuffer(compact.encode(), dtype=np.uint8) - ord("0")


def parse_bsf(text: str, name: str = "bsf") -> StabilizerCode:
    """Parse the BSF text format: header ``BSF <m> <n>`` then m rows of 2n bits."""
    lines = _strip_lines(text)
    if not lines:
        raise CodeError("empty input")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "BSF":
        raise CodeError(f"malformed header {lines[0]!r}")
    try:
        m, n = int(head[1]), int(head[2])
    except ValueError as e:
        raise CodeError(f"malformed header {lines[0]!r}") from e
    if m == 0:
        raise CodeError("no checks")
    if len(lines) - 1 != m:
        raise CodeError(f"expected {m} rows, found {len(lines) - 1}")
    rows = [_parse_bit_row(line, 2 * n, f"row {i}") for i, line in enumerate(lines[1:])]
    return StabilizerCode(name, BitMatrix.from_array(np.array(rows, dtype=np.uint8)))


def parse_css(text: str, name: str = "css") -> CssCode:
    """Parse the CSS text format: ``CSS <mx> <mz> <n>`` then Hx rows then Hz rows."""
    lines = _strip_lines(text)
    if not lines:
        raise CodeError("empty input")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "CSS":
        raise CodeError(f"malformed header {lines[0]!r}")
    try:
        mx, mz, n = int(head[1]), int(head[2]), int(head[3])
    except ValueError as e:
        raise CodeError(f"malformed header {lines[0]!r}") from e
    if len(lines) - 1 != mx + mz:
        raise CodeError(f"expected {mx + mz} rows, found {len(lines) - 1}")
    rows = [_parse_bit_row(line, n, f"row {i}") for i, line in enumerate(lines[1:])]
    hx = np.array(rows[:mx], dtype=np.uint8).reshape(mx, n)
    hz = np.array(rows[mx:], dtype=np.uint8).reshape(mz, n)
    return CssCode(name, BitMatrix.from_array(hx), BitMatrix.from_array(hz))


def emit_css(code: CssCode) -> str:
    lines = [f"CSS {code.mx} {code.mz} {code.n}"]
    for row in code.Hx.to_array():
        lines.append("".join(map(str, row)))
    for row in code.Hz.to_array():
        lines.append("".join(map(str, row)))
    return "\n".join(lines) + "\n"


_STEANE_H = np.array(
    [
        [1, 1, 1, 1, 0, 0, 0],
        [1, 1, 0, 0, 1, 1, 0],
        [1, 0, 1, 0, 1, 0, 1],
    ],
    dtype=np.uint8,
)


def steane_css() -> CssCode:
    h = BitMatrix.from_array(_STEANE_H)
    return CssCode("steane", h, h)


def steane() -> StabilizerCode:
    """The [[7,1,3]] code with identical weight-4 X and Z check blocks."""
    return css_to_bsf(steane_css())


def surface_code(d: int, name: str | None = None) -> CssCode:
    """Rotated surface code on a d x d data grid (d odd, >= 3).

    Plaquettes sit on the (d+1) x (d+1) cell corners in a checkerboard;
    weight-2 boundary checks are kept only on their matching side (X on
    top/bottom, Z on left/right), giving (d^2 - 1) / 2 checks of each type.
    """
    if d < 3 or d % 2 == 0:
        raise CodeError("surface code distance must be odd and >= 3")

    def qubit(r: int, c: int) -> int:
        return r * d + c

    x_rows, z_rows = [], []
    for i in range(d + 1):
        for j in range(d + 1):
            support = [
                qubit(r, c)
                for r, c in ((i - 1, j - 1), (i - 1, j), (i, j - 1), (i, j))
                if 0 <= r < d and 0 <= c < d
            ]
            if len(support) < 2:
                continue
            is_x = (i + j) % 2 == 0
            if len(support) == 2:
                on_horizontal_edge = i in (0, d)
                if is_x != on_horizontal_edge:
                    continue
            row = np.zeros(d * d, dtype=np.uint8)
            row[support] = 1
            (x_rows if is_x else z_rows).append(row)
    hx = BitMatrix.from_array(np.array(x_rows, dtype=np.uint8))
    hz = BitMatrix.from_array(np.array(z_rows, dtype=np.uint8))
    return CssCode(name or f"surface_d{d}", hx, hz)


def _shift(size: int, power: int) -> np.ndarray:
    return np.roll(np.eye(size, dtype=np.uint8), shift=power % size, axis=1)


def _circulant_sum(l: int, m: int, terms: list[tuple[int, int]]) -> np.ndarray:
    if not terms:
        raise CodeError("term list must be nonempty")
    if len(set((p % l, q % m) for p, q in terms)) != len(terms):
        raise CodeError("duplicate monomial term")
    total = np.zeros((l * m, l * m), dtype=np.uint8)
    for p, q in terms:
        if not (0 <= p < l and 0 <= q < m):
            raise CodeError(f"exponent ({p}, {q}) out of range for group Z_{l} x Z_{m}")
        total ^= np.kron(_shift(l, p), _shift(m, q))
    return total


def bb_code(
    l: int,
    m: int,
    a_terms: list[tuple[int, int]],
    b_terms: list[tuple[int, int]],
    name: str | None = None,
) -> CssCode:
    """Bivariate bicycle code over the group Z_l x Z_m.

    A and B are sums of monomials x^p y^q acting as commuting circulant
    permutations; Hx = [A | B] and Hz = [B^T | A^T] on n = 2*l*m qubits.
    """
    a = _circulant_sum(l, m, a_terms)
    b = _circulant_sum(l, m, b_terms)
    hx = np.hstack([a, b])
    hz = np.hstack([b.T, a.T])
    return CssCode(name or f"bb_{2 * l * m}", BitMatrix.from_array(hx), BitMatrix.from_array(hz))


def gb_code(
    blocklen: int,
    a_terms: list[int],
    b_terms: list[int],
    name: str | None = None,
) -> CssCode:
    """Generalized bicycle code from univariate circulants on n = 2*blocklen qubits."""
    a = _circulant_sum(blocklen, 1, [(p, 0) for p in a_terms])
    b = _circulant_sum(blocklen, 1, [(p, 0) for p in b_terms])
    hx = np.hstack([a, b])
    hz = np.hstack([b.T, a.T])
    return CssCode(name or f"gb_{2 * blocklen}", BitMatrix.from_array(hx), BitMatrix.from_array(hz))


def hgp(h1: BitMatrix, h2: BitMatrix, name: str | None = None) -> CssCode:
    """Hypergraph product of two classical parity-check matrices."""
    a, b = h1.to_array(), h2.to_array()
    m1, n1 = a.shape
    m2, n2 = b.shape
    hx = np.hstack([np.kron(a, np.eye(n2, dtype=np.uint8)), np.kron(np.eye(m1, dtype=np.uint8), b.T)])
    hz = np.hstack([np.kron(np.eye(n1, dtype=np.uint8), b), np.kron(a.T, np.eye(m2, dtype=np.uint8))])
    return CssCode(name or f"hgp_{n1 * n2 + m1 * m2}", BitMatrix.from_array(hx), BitMatrix.from_array(hz))


def _quotient_basis(ambient: list[np.ndarray], sub: np.ndarray, count: int) -> list[np.ndarray]:
    """Pick ``count`` vectors from ``ambient`` independent modulo rowspace(sub)."""
    chosen: list[np.ndarray] = []
    stack = sub.copy() if sub.size else np.zeros((0, ambient[0].size if ambient else 0), dtype=np.uint8)
    base = gf2.rank(BitMatrix.from_array(stack)) if stack.shape[0] else 0
    for v in ambient:
        if len(chosen) == count:
            break
        candidate = np.vstack([stack, v.reshape(1, -1)])
        r = gf2.rank(BitMatrix.from_array(candidate))
        if r > base:
            chosen.append(v)
            stack = candidate
            base = r
    if len(chosen) != count:
        raise CodeError("failed to extract full logical basis")
    return chosen


def logical_operators_css(code: CssCode) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Logical X and Z operator bases; pairing matrix Lx @ Lz^T has rank k."""
    n = code.n
    rx = gf2.rank(code.Hx) if code.mx else 0
    rz = gf2.rank(code.Hz) if code.mz else 0
    k = n - rx - rz
    if k == 0:
        return [], []
    hx_arr = code.Hx.to_array() if code.mx else np.zeros((0, n), dtype=np.uint8)
    hz_arr = code.Hz.to_array() if code.mz else np.zeros((0, n), dtype=np.uint8)
    ker_hx = gf2.kernel_basis(code.Hx) if code.mx else [row for row in np.eye(n, dtype=np.uint8)]
    ker_hz = gf2.kernel_basis(code.Hz) if code.mz else [row for row in np.eye(n, dtype=np.uint8)]
    lz = _quotient_basis(ker_hx, hz_arr, k)
    lx = _quotient_basis(ker_hz, hx_arr, k)
    pairing = (np.array(lx).astype(np.int64) @ np.array(lz).T.astype(np.int64)) & 1
    if gf2.rank(BitMatrix.from_array(pairing.astype(np.uint8))) != k:
        raise CodeError("logical operator pairing is degenerate")
    return lx, lz


def code_parameters(code: StabilizerCode | CssCode) -> tuple[int, int]:
    """(physical qubits, logical qubits) from check-matrix ranks."""
    if isinstance(code, CssCode):
        rx = gf2.rank(code.Hx) if code.mx else 0
        rz = gf2.rank(code.Hz) if code.mz else 0
        return code.n, code.n - rx - rz
    return code.n, code.n - gf2.rank(code.H)
