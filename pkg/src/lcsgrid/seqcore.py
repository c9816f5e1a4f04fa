"""Core domain types and indexing conventions for the grid-graph LCS engine.

Two input strings define an implicit grid graph: the row string (length m)
and the column string (length n) span a lattice of (m+1) x (n+1) vertices.
A weight-1 diagonal edge (r, c) -> (r+1, c+1) exists exactly where
row symbol r equals column symbol c; horizontal and vertical edges have
weight 0 and weight-0 diagonals do not exist.  The LCS length equals the
maximum path weight from the top-left vertex to the bottom-right vertex.

Rows and columns are 1-based at the API boundary; internal arrays are
0-based.  Unreachability is encoded by a per-instance integer sentinel
``n + 2`` that compares above every legal column index (at most ``n + 1``),
so reach vectors stay flat integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

SequenceLike = Union[str, bytes, bytearray]


def as_bytes(seq: SequenceLike) -> bytes:
    """Coerce an input string to raw octets (latin-1 for text)."""
    if isinstance(seq, bytes):
        return seq
    if isinstance(seq, bytearray):
        return bytes(seq)
    if isinstance(seq, str):
        return seq.encode("latin-1")
    raise TypeError(f"expected str or bytes, got {type(seq).__name__}")


def inf_value(n: int) -> int:
    """Unreachable sentinel for a grid with n columns: above any column index."""
    return n + 2


def _symbol(symbol: Union[int, SequenceLike]) -> int:
    if isinstance(symbol, int):
        if not 0 <= symbol <= 255:
            raise ValueError(f"symbol out of octet range: {symbol}")
        return symbol
    raw = as_bytes(symbol)
    if len(raw) != 1:
        raise ValueError("symbol must be a single octet")
    return raw[0]


@dataclass(frozen=True)
class GridModel:
    """The implicit grid graph over a row string and a column string.

    Never materialized as an adjacency structure: every operation reads
    ``row_seq``/``col_seq`` directly.  Immutable, safe to share across
    threads.
    """

    row_seq: bytes
    col_seq: bytes
    _arrays: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "row_seq", as_bytes(self.row_seq))
        object.__setattr__(self, "col_seq", as_bytes(self.col_seq))

    @property
    def m(self) -> int:
        return len(self.row_seq)

    @property
    def n(self) -> int:
        return len(self.col_seq)

    @property
    def inf(self) -> int:
        return inf_value(self.n)

    @property
    def row_arr(self) -> np.ndarray:
        if "row" not in self._arrays:
            self._arrays["row"] = np.frombuffer(self.row_seq, dtype=np.uint8)
        return self._arrays["row"]

    @property
    def col_arr(self) -> np.ndarray:
        if "col" not in self._arrays:
            self._arrays["col"] = np.frombuffer(self.col_seq, dtype=np.uint8)
        return self._arrays["col"]


def match_positions(seq: SequenceLike, symbol: Union[int, SequenceLike]) -> np.ndarray:
    """All 1-based positions of ``symbol`` in ``seq``, strictly increasing."""
    raw = np.frombuffer(as_bytes(seq), dtype=np.uint8)
    return (np.flatnonzero(raw == _symbol(symbol)) + 1).astype(np.intc)


def diagonal_weight(g: GridModel, r: int, c: int) -> int:
    """Weight of the diagonal edge (r, c) -> (r+1, c+1): 1 on a symbol match."""
    assert 1 <= r <= g.m and 1 <= c <= g.n, f"grid cell ({r}, {c}) out of range"
    return int(g.row_seq[r - 1] == g.col_seq[c - 1])


@dataclass(frozen=True)
class LcsResult:
    """One longest common subsequence with its positions in both inputs.

    ``row_positions`` / ``col_positions`` are 1-based indices into the first
    and second input of the solve, strictly increasing, and aligned with
    ``subsequence`` symbol by symbol.
    """

    length: int
    subsequence: bytes
    row_positions: tuple
    col_positions: tuple

    def validate(self, row_seq: SequenceLike, col_seq: SequenceLike) -> None:
        """Raise ValueError unless this is a genuine common subsequence."""
        a = as_bytes(row_seq)
        b = as_bytes(col_seq)
        if not (
            self.length
            == len(self.subsequence)
            == len(self.row_positions)
            == len(self.col_positions)
        ):
            raise ValueError("length fields disagree")
        for name, positions, seq in (
            ("row", self.row_positions, a),
            ("col", self.col_positions, b),
        ):
            for prev, cur in zip(positions, positions[1:]):
                if cur <= prev:
                    raise ValueError(f"{name}_positions not strictly increasing")
            for k, pos in enumerate(positions):
                if not 1 <= pos <= len(seq):
                    raise ValueError(f"{name}_positions[{k}] out of range")
                if seq[pos - 1] != self.subsequence[k]:
                    raise ValueError(f"{name}_positions[{k}] does not match subsequence")
