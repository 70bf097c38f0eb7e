"""Dense GF(2) matrices with rows packed into Python integers (bit j = column j)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class BinaryMatrix:
    rows: tuple[int, ...]
    ncols: int

    @classmethod
    def from_array(cls, arr) -> "BinaryMatrix":
        arr = np.asarray(arr, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        packed = np.packbits(arr, axis=1, bitorder="little")
        rows = tuple(int.from_bytes(r.tobytes(), "little") for r in packed)
        return cls(rows, arr.shape[1])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=np.uint8)
        nbytes = (self.ncols + 7) // 8
        for i, r in enumerate(self.rows):
            b = np.frombuffer(r.to_bytes(nbytes, "little"), dtype=np.uint8)
            out[i] = np.unpackbits(b, bitorder="little")[: self.ncols]
        return out

    def packed_words(self, columns: Sequence[int] | None = None) -> np.ndarray:
        """Rows as ``uint64`` words, optionally restricted to (and reordered by) ``columns``."""
        arr = self.to_array()
        if columns is not None:
            arr = arr[:, list(columns)]
        return pack_rows(arr)

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])

    def gram_is_zero(self, other: "BinaryMatrix | None" = None) -> bool:
        """True iff ``self @ other.T == 0`` over GF(2) (``other`` defaults to ``self``)."""
        other = self if other is None else other
        return all((a & b).bit_count() % 2 == 0 for a in self.rows for b in other.rows)

    def append_parity_column(self) -> "BinaryMatrix":
        n = self.ncols
        return BinaryMatrix(tuple(r | ((r.bit_count() & 1) << n) for r in self.rows), n + 1)

    def __str__(self):
        return "\n".join(format(r, f"0{self.ncols}b")[::-1] for r in self.rows)


def pack_rows(arr: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix into ``(rows, ceil(cols/64))`` little-endian ``uint64`` words."""
    arr = np.asarray(arr, dtype=np.uint8)
    nr, nc = arr.shape
    nw = max(1, (nc + 63) // 64)
    padded = np.zeros((nr, nw * 64), dtype=np.uint8)
    padded[:, :nc] = arr
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(nr, nw)


def rref(rows: Iterable[int], ncols: int, column_order: Sequence[int] | None = None):
    """Reduced row echelon form over GF(2).

    Columns are considered in ``column_order`` (default natural order).  Returns
    ``(rows, pivots)`` where ``rows[i]`` has its leading one in ``pivots[i]``
    and zero rows are dropped.
    """
    work = [r for r in rows]
    order = range(ncols) if column_order is None else column_order
    pivots: list[int] = []
    top = 0
    for col in order:
        bit = 1 << col
        hit = next((i for i in range(top, len(work)) if work[i] & bit), None)
        if hit is None:
            continue
        work[top], work[hit] = work[hit], work[top]
        p = work[top]
        for i in range(len(work)):
            if i != top and work[i] & bit:
                work[i] ^= p
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rref_array(arr: np.ndarray, column_order: Sequence[int] | None = None):
    """Vectorised variant of :func:`rref` on a dense 0/1 array (returns a copy)."""
    a = np.array(arr, dtype=np.uint8) & 1
    nr, nc = a.shape
    order = range(nc) if column_order is None else column_order
    pivots = []
    top = 0
    for col in order:
        if top == nr:
            break
        hits = np.flatnonzero(a[top:, col])
        if not len(hits):
            continue
        h = top + hits[0]
        if h != top:
            a[[top, h]] = a[[h, top]]
        mask = a[:, col].astype(bool)
        mask[top] = False
        a[mask] ^= a[top]
        pivots.append(col)
        top += 1
    return a[:top], pivots
