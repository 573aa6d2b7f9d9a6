"""
GF(2) linear algebra on int bitsets.

A vector is a Python int whose bit j is the coefficient of basis element j.
A matrix is a list of column vectors. Reduction pivots on the lowest
non-zero entry (the highest set bit) of each column.
"""

from dataclasses import dataclass, field
from typing import AbstractSet, Dict, Iterable, List, Sequence


def low(vector: int) -> int:
    """Index of the highest set bit, -1 for the zero vector."""
    return vector.bit_length() - 1


def apply(columns: Sequence[int], vector: int) -> int:
    """Image of a vector under the matrix given by its columns."""
    image = 0
    while vector:
        j = low(vector)
        image ^= columns[j]
        vector ^= 1 << j
    return image


class EchelonBasis:
    """Incrementally built reduced basis of a subspace, keyed by pivot row."""

    def __init__(self, vectors: Iterable[int] = ()):
        self._pivots: Dict[int, int] = {}
        for vector in vectors:
            self.add(vector)

    def __len__(self) -> int:
        return len(self._pivots)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, vector: int) -> int:
        while vector:
            pivot = self._pivots.get(low(vector))
            if pivot is None:
                break
            vector ^= pivot
        return vector

    def add(self, vector: int) -> bool:
        """Insert a vector; True when it enlarged the span."""
        residue = self.reduce(vector)
        if not residue:
            return False
        self._pivots[low(residue)] = residue
        return True

    def contains(self, vector: int) -> bool:
        return not self.reduce(vector)

    def copy(self) -> "EchelonBasis":
        clone = EchelonBasis()
        clone._pivots = dict(self._pivots)
        return clone


@dataclass
class Reduction:
    """Outcome of a column reduction."""

    pivot_rows: Dict[int, int] = field(default_factory=dict)  # pivot row -> column
    kernel: List[int] = field(default_factory=list)  # masks over column indices

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)


def reduce_columns(
    columns: Sequence[int], cleared: AbstractSet[int] = frozenset(), track: bool = False
) -> Reduction:
    """
    Column-reduce a matrix left to right.

    Args:
        columns: Matrix columns as bitsets
        cleared: Columns known to reduce to zero; skipped, and absent
            from the kernel when tracking
        track: Record the column combinations that reduce to zero

    Returns:
        Pivot rows and, when tracking, a kernel basis
    """
    result = Reduction()
    reduced: Dict[int, int] = {}
    combos: Dict[int, int] = {}

    for j, column in enumerate(columns):
        if j in cleared:
            continue
        combo = 1 << j if track else 0
        while column:
            row = low(column)
            if row not in reduced:
                break
            column ^= reduced[row]
            if track:
                combo ^= combos[row]
        if column:
            row = low(column)
            reduced[row] = column
            result.pivot_rows[row] = j
            if track:
                combos[row] = combo
        elif track:
            result.kernel.append(combo)
    return result


def rank(columns: Sequence[int]) -> int:
    return reduce_columns(columns).rank


def kernel_basis(columns: Sequence[int]) -> List[int]:
    """Basis of the null space, as bitsets over the column indices."""
    return reduce_columns(columns, track=True).kernel


def span_rank(vectors: Iterable[int]) -> int:
    return EchelonBasis(vectors).rank


def combine(basis: Sequence[int], mask: int) -> int:
    """Sum of the basis vectors selected by mask."""
    return apply(basis, mask)
