"""Exact linear algebra over the integers and rationals.

Kept deliberately small: fraction-free rank for large integer
matrices, and an incremental reduced echelon form for membership
and residual tests on short rational vectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def int_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss elimination.

    Division-free apart from the exact minor cancellation, so entries
    stay polynomially bounded instead of exploding like naive integer
    Gaussian elimination.
    """
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, len(M)):
            if M[r][col]:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        lead = M[rank][col]
        top = M[rank]
        for r in range(rank + 1, len(M)):
            row = M[r]
            head = row[col]
            # rows with zero head still pick up the lead/prev scaling
            for c in range(col + 1, ncols):
                row[c] = (lead * row[c] - head * top[c]) // prev
            row[col] = 0
        prev = lead
        rank += 1
        if rank == len(M):
            break
    return rank


class FractionEchelon:
    """Reduced row echelon span of rational vectors, built incrementally."""

    def __init__(self, width: int):
        if width < 0:
            raise ValueError("width must be a natural")
        self.width = width
        self._rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        """Residual of vec modulo the current span."""
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        v = [Fraction(x) for x in vec]
        for col, row in self._rows.items():
            c = v[col]
            if c:
                for j in range(self.width):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def insert(self, vec: Sequence) -> bool:
        """Add vec to the span; True when it was independent."""
        v = self.reduce(vec)
        for col, x in enumerate(v):
            if x:
                row = [y / x for y in v]
                # keep every stored row fully reduced so residuals are
                # independent of elimination order
                for other in self._rows.values():
                    c = other[col]
                    if c:
                        for j in range(self.width):
                            if row[j]:
                                other[j] -= c * row[j]
                self._rows[col] = row
                return True
        return False

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))
