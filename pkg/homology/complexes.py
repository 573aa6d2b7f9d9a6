"""
Simplicial complexes and GF(2) chain complexes.
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import HOMOLOGY_CONFIG
from errors import ComplexError, ConsistencyError, ResourceBudgetError

from .gf2 import apply, reduce_columns

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


class ChainComplexF2:
    """
    A finite chain complex of GF(2) vector spaces.

    `sizes[k]` is the dimension of C_k; `boundaries[k]` lists, for each
    basis element of C_k, its boundary as a bitset over C_{k-1}. The
    degree-0 boundary is zero. d o d = 0 is checked at construction.
    """

    def __init__(self, sizes: Sequence[int], boundaries: Dict[int, List[int]], check: bool = True):
        self.sizes = tuple(sizes)
        self.boundaries = {k: list(boundaries.get(k, [0] * self.sizes[k])) for k in range(len(self.sizes))}
        if self.sizes:
            self.boundaries[0] = [0] * self.sizes[0]
        for k, columns in self.boundaries.items():
            if len(columns) != self.sizes[k]:
                raise ComplexError(f"degree {k}: {len(columns)} boundary columns for {self.sizes[k]} cells")
        self._ranks: Optional[Dict[int, int]] = None
        if check:
            self.check_square_zero()

    @property
    def top_degree(self) -> int:
        return len(self.sizes) - 1

    def check_square_zero(self) -> None:
        for k in range(2, len(self.sizes)):
            lower = self.boundaries[k - 1]
            for j, column in enumerate(self.boundaries[k]):
                if apply(lower, column):
                    raise ConsistencyError(f"boundary squares to non-zero on cell {j} of degree {k}")

    def boundary_ranks(self) -> Dict[int, int]:
        """
        Rank of every boundary map, reducing from the top degree down.

        A (k)-cell that is the pivot row of a reduced column of d_{k+1}
        bounds a combination of earlier cells; its d_k column is skipped.
        """
        if self._ranks is not None:
            return self._ranks
        ranks = {0: 0}
        cleared = frozenset()
        for k in range(self.top_degree, 0, -1):
            reduction = reduce_columns(self.boundaries[k], cleared=cleared)
            ranks[k] = reduction.rank
            cleared = frozenset(reduction.pivot_rows)
            logger.debug("  rank d_%d = %d (%d columns, %d cleared)",
                         k, reduction.rank, self.sizes[k], len(cleared))
        self._ranks = ranks
        return ranks

    def homology_ranks(self) -> List[int]:
        ranks = self.boundary_ranks()
        betti = []
        for k, size in enumerate(self.sizes):
            betti.append(size - ranks.get(k, 0) - ranks.get(k + 1, 0))
        return betti

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.sizes))

    def relative(self, subcells: Dict[int, Iterable[int]]) -> "ChainComplexF2":
        """Chain complex of the pair (self, subcomplex spanned by subcells)."""
        keep: Dict[int, List[int]] = {}
        position: Dict[int, Dict[int, int]] = {}
        for k, size in enumerate(self.sizes):
            dropped = set(subcells.get(k, ()))
            keep[k] = [j for j in range(size) if j not in dropped]
            position[k] = {j: i for i, j in enumerate(keep[k])}

        boundaries = {}
        for k in range(1, len(self.sizes)):
            columns = []
            for j in keep[k]:
                column, image = self.boundaries[k][j], 0
                while column:
                    row = column.bit_length() - 1
                    column ^= 1 << row
                    if row in position[k - 1]:
                        image |= 1 << position[k - 1][row]
                columns.append(image)
            boundaries[k] = columns
        return ChainComplexF2([len(keep[k]) for k in range(len(self.sizes))], boundaries)


class SimplicialComplex:
    """
    An abstract simplicial complex on vertices 0..n_vertices-1.

    Simplices are sorted vertex tuples, stored per dimension in
    lexicographic order; the set is closed under taking faces.
    """

    def __init__(self, simplices: Iterable[Simplex], n_vertices: Optional[int] = None,
                 max_simplices: Optional[int] = None):
        budget = HOMOLOGY_CONFIG["max_simplices"] if max_simplices is None else max_simplices
        by_dim: Dict[int, set] = {}
        total = 0
        for simplex in simplices:
            simplex = tuple(sorted(simplex))
            if not simplex or len(set(simplex)) != len(simplex):
                raise ComplexError(f"not a simplex: {simplex}")
            bucket = by_dim.setdefault(len(simplex) - 1, set())
            if simplex not in bucket:
                bucket.add(simplex)
                total += 1
                if total > budget:
                    raise ResourceBudgetError("simplicial complex", total, budget)
        if not by_dim:
            raise ComplexError("empty complex")

        top = max(by_dim)
        if top > HOMOLOGY_CONFIG["max_dimension"]:
            raise ComplexError(f"dimension {top} exceeds {HOMOLOGY_CONFIG['max_dimension']}")

        self.simplices: Tuple[Tuple[Simplex, ...], ...] = tuple(
            tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1)
        )
        self.index: List[Dict[Simplex, int]] = [
            {s: i for i, s in enumerate(layer)} for layer in self.simplices
        ]
        vertices = {v for (v,) in self.simplices[0]}
        self.n_vertices = n_vertices if n_vertices is not None else max(vertices) + 1
        if vertices != set(range(self.n_vertices)):
            raise ComplexError("vertices must be exactly 0..n_vertices-1")

        for k in range(1, top + 1):
            for simplex in self.simplices[k]:
                for face in combinations(simplex, k):
                    if face not in self.index[k - 1]:
                        raise ComplexError(f"face {face} of {simplex} is missing")
        self._chain: Optional[ChainComplexF2] = None

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence[int]], n_vertices: Optional[int] = None,
                    max_simplices: Optional[int] = None) -> "SimplicialComplex":
        """Close a list of maximal simplices under faces."""

        def faces():
            for facet in facets:
                facet = tuple(sorted(facet))
                for k in range(1, len(facet) + 1):
                    yield from combinations(facet, k)

        return cls(faces(), n_vertices=n_vertices, max_simplices=max_simplices)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(layer) for layer in self.simplices)

    def __len__(self) -> int:
        return sum(self.f_vector)

    def __iter__(self):
        for layer in self.simplices:
            yield from layer

    def __contains__(self, simplex) -> bool:
        simplex = tuple(sorted(simplex))
        k = len(simplex) - 1
        return 0 <= k <= self.dimension and simplex in self.index[k]

    def facets(self) -> List[Simplex]:
        cofaces = set()
        for k in range(1, self.dimension + 1):
            for simplex in self.simplices[k]:
                cofaces.update(combinations(simplex, k))
        return [s for s in self if s not in cofaces]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector))

    def boundary_column(self, simplex: Simplex) -> int:
        k = len(simplex) - 1
        column = 0
        if k > 0:
            lower = self.index[k - 1]
            for face in combinations(simplex, k):
                column ^= 1 << lower[face]
        return column

    def chain_complex(self) -> ChainComplexF2:
        if self._chain is None:
            boundaries = {k: [self.boundary_column(s) for s in layer]
                          for k, layer in enumerate(self.simplices)}
            self._chain = ChainComplexF2(self.f_vector, boundaries)
            logger.debug("  built chain complex with f-vector %s", self.f_vector)
        return self._chain


def homology_ranks(complex_) -> List[int]:
    """F2-Betti numbers of a simplicial complex or a chain complex."""
    if isinstance(complex_, SimplicialComplex):
        complex_ = complex_.chain_complex()
    return complex_.homology_ranks()


def face_flags(simplices: Iterable[Simplex]) -> Dict[Simplex, List[Tuple[Simplex, ...]]]:
    """Maximal chains of faces ending at each simplex, memoized by simplex."""
    flags: Dict[Simplex, List[Tuple[Simplex, ...]]] = {}

    def of(simplex):
        if simplex not in flags:
            if len(simplex) == 1:
                flags[simplex] = [(simplex,)]
            else:
                flags[simplex] = [flag + (simplex,)
                                  for face in combinations(simplex, len(simplex) - 1)
                                  for flag in of(face)]
        return flags[simplex]

    for simplex in simplices:
        of(simplex)
    return flags


def barycentric_subdivision(K: SimplicialComplex, max_simplices: Optional[int] = None):
    """
    First barycentric subdivision of K.

    Returns:
        (subdivision, labels) where labels[v] is the simplex of K whose
        barycentre is vertex v
    """
    labels = [s for s in K]
    vertex_of = {s: i for i, s in enumerate(labels)}
    flags = face_flags(K.facets())

    top_chains = []
    for facet in K.facets():
        for flag in flags[facet]:
            top_chains.append([vertex_of[s] for s in flag])
    subdivision = SimplicialComplex.from_facets(top_chains, n_vertices=len(labels),
                                                max_simplices=max_simplices)
    logger.info("  subdivided %d simplices into %d", len(K), len(subdivision))
    return subdivision, labels
