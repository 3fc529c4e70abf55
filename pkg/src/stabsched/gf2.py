"""Dense bit-matrix linear algebra over GF(2).

Rows are packed into 64-bit words internally; every public contract is
expressed per-bit. Vectors are plain numpy uint8 arrays of 0/1 entries.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

_WORD = 64


def _pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a (rows, cols) 0/1 array into (rows, words) uint64."""
    rows, cols = bits.shape
    nwords = max(1, (cols + _WORD - 1) // _WORD)
    padded = np.zeros((rows, nwords * _WORD), dtype=np.uint8)
    padded[:, :cols] = bits & 1
    # packbits uses big-endian bit order within bytes; use little to keep
    # bit c of a row at word c // 64, offset c % 64.
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(np.uint64).reshape(rows, nwords)


def _unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    rows = words.shape[0]
    as_bytes = words.reshape(rows, -1).view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return bits[:, :cols].copy()


class BitMatrix:
    """Immutable dense matrix over GF(2) with word-packed rows."""

    __slots__ = ("rows", "cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        self.rows = rows
        self.cols = cols
        nwords = max(1, (cols + _WORD - 1) // _WORD)
        if words is None:
            words = np.zeros((rows, nwords), dtype=np.uint64)
        self._words = words

    @classmethod
    def from_rows(cls, data: Sequence[Iterable[int]], cols: int | None = None) -> "BitMatrix":
        arr = np.array([list(r) for r in data], dtype=np.uint8)
        if arr.size == 0:
            arr = arr.reshape(len(data), cols or 0)
        if cols is not None and arr.shape[1] != cols:
            raise ValueError(f"expected {cols} columns, got {arr.shape[1]}")
        return cls.from_array(arr)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "BitMatrix":
        arr = np.atleast_2d(np.asarray(arr, dtype=np.uint8))
        return cls(arr.shape[0], arr.shape[1], _pack_rows(arr))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_array(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    def to_array(self) -> np.ndarray:
        return _unpack_rows(self._words, self.cols)

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"bit ({r}, {c}) out of range")
        return int((self._words[r, c // _WORD] >> np.uint64(c % _WORD)) & np.uint64(1))

    def row(self, r: int) -> np.ndarray:
        return _unpack_rows(self._words[r : r + 1], self.cols)[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self._words, other._words))
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __repr__(self):
        return f"BitMatrix({self.rows}x{self.cols})"


def _row_reduce_words(words: np.ndarray, rows: int, cols: int) -> tuple[np.ndarray, list[int]]:
    """In-place RREF on a copy of packed rows; returns (words, pivot cols)."""
    w = words.copy()
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        word, off = c // _WORD, np.uint64(c % _WORD)
        pivot = -1
        for i in range(r, rows):
            if (w[i, word] >> off) & np.uint64(1):
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            w[[r, pivot]] = w[[pivot, r]]
        hits = ((w[:, word] >> off) & np.uint64(1)).astype(bool)
        hits[r] = False
        w[hits] ^= w[r]
        pivots.append(c)
        r += 1
    return w, pivots


def row_reduce(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form of ``m`` and its pivot columns (ascending)."""
    w, pivots = _row_reduce_words(m._words, m.rows, m.cols)
    return BitMatrix(m.rows, m.cols, w), pivots


def rank(m: BitMatrix) -> int:
    """Rank of ``m`` over GF(2)."""
    return len(row_reduce(m)[1])


def kernel_basis(m: BitMatrix) -> list[np.ndarray]:
    """Basis of the right kernel {v : M v = 0}, free columns ascending."""
    red, pivots = row_reduce(m)
    bits = red.to_array()
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = np.zeros(m.cols, dtype=np.uint8)
        v[f] = 1
        for i, p in enumerate(pivots):
            if bits[i, f]:
                v[p] = 1
        basis.append(v)
    return basis


def mat_vec(m: BitMatrix, v: np.ndarray) -> np.ndarray:
    """GF(2) matrix-vector product."""
    v = np.asarray(v, dtype=np.uint8)
    if v.shape != (m.cols,):
        raise ValueError(f"vector length {v.shape} does not match {m.cols} columns")
    vw = _pack_rows(v.reshape(1, -1))[0]
    prod = m._words & vw
    # parity of popcount per row
    out = np.zeros(m.rows, dtype=np.uint8)
    as_bytes = prod.view(np.uint8).reshape(m.rows, -1)
    counts = np.unpackbits(as_bytes, axis=1).sum(axis=1)
    out[:] = counts & 1
    return out


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) matrix product A @ B."""
    if a.cols != b.rows:
        raise ValueError("inner dimensions mismatch")
    prod = (a.to_array().astype(np.int64) @ b.to_array().astype(np.int64)) & 1
    return BitMatrix.from_array(prod.astype(np.uint8))


def in_rowspace(m: BitMatrix, v: np.ndarray) -> bool:
    """True iff ``v`` lies in the GF(2) row space of ``m``."""
    base = rank(m)
    stacked = np.vstack([m.to_array(), np.asarray(v, dtype=np.uint8).reshape(1, -1)])
    return rank(BitMatrix.from_array(stacked)) == base
