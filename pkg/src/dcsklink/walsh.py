"""Walsh codes (Sylvester-Hadamard rows) and the index-bit mapping.

Row 1 is the all-ones vector, rows are kept in natural Hadamard order, and
index symbols are 1-based: a = 1 + binary value of the index bits read
MSB-first, so all-zeros maps to 1 and all-ones maps to N.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import hadamard


def _is_power_of_two(value: int) -> bool:
    return value > 0 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class WalshMatrix:
    """N orthogonal +-1 row vectors of length N (N a power of two >= 2)."""

    order: int
    rows: np.ndarray

    def row(self, index: int) -> np.ndarray:
        """1-based row access matching the index-symbol convention."""
        if not 1 <= index <= self.order:
            raise ValueError(f"row index {index} outside 1..{self.order}")
        return self.rows[index - 1]


@dataclass(frozen=True)
class IndexMapping:
    """Index-bit width and the Walsh order it addresses (order = 2^m_c)."""

    m_c: int

    @property
    def order(self) -> int:
        return 1 << self.m_c

    def to_index(self, bits) -> int:
        if len(bits) != self.m_c:
            raise ValueError(f"expected {self.m_c} index bits, got {len(bits)}")
        return bits_to_index(bits)

    def to_bits(self, index: int) -> np.ndarray:
        return index_to_bits(index, self.m_c)


def walsh_matrix(order: int) -> WalshMatrix:
    """Sylvester-Hadamard matrix of the given power-of-two order (>= 2)."""
    if order < 2 or not _is_power_of_two(order):
        raise ValueError(f"Walsh order must be a power of two >= 2, got {order}")
    rows = hadamard(order).astype(np.int8)
    rows.setflags(write=False)
    return WalshMatrix(order=order, rows=rows)


def bits_to_index(bits) -> int:
    """Map a bit vector (MSB first) to the 1-based index symbol."""
    value = 0
    for b in bits:
        b = int(b)
        if b not in (0, 1):
            raise ValueError(f"index bits must be 0/1, got {b}")
        value = (value << 1) | b
    return value + 1


def index_to_bits(index: int, m_c: int) -> np.ndarray:
    """Inverse of bits_to_index; returns an MSB-first 0/1 vector of length m_c."""
    if m_c < 1:
        raise ValueError("m_c must be >= 1")
    n = 1 << m_c
    if not 1 <= index <= n:
        raise ValueError(f"index symbol {index} outside 1..{n}")
    value = index - 1
    return np.array([(value >> k) & 1 for k in range(m_c - 1, -1, -1)], dtype=np.int64)
