"""
Simplicial involutions and their Smith theory over GF(2).

For an involution c on a complex X the Smith complexes are
Sm(X) = ker(1 + c) and Im(1 + c); for a regular involution
Sm(X) = S(F) + Im(1 + c) with F the fixed subcomplex, and Im(1 + c) is
isomorphic to the relative chains of (X/c, F). The long exact sequence

    H_k(Sm) --i--> H_k(X) --pr--> H_k(Im) --delta--> H_{k-1}(Sm)

is computed rank by rank inside the chain group of X.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import HOMOLOGY_CONFIG
from errors import ComplexError, ConsistencyError, NonRegularInvolutionError

from .complexes import ChainComplexF2, SimplicialComplex, barycentric_subdivision
from .gf2 import apply, combine, kernel_basis, span_rank

logger = logging.getLogger(__name__)


def _permute(vector: int, permutation: Sequence[int]) -> int:
    image = 0
    while vector:
        j = vector.bit_length() - 1
        vector ^= 1 << j
        image |= 1 << permutation[j]
    return image


class SimplicialInvolution:
    """A simplicial map of order dividing two, given on vertices."""

    def __init__(self, base: SimplicialComplex, vertex_map: Sequence[int]):
        vertex_map = list(vertex_map)
        if len(vertex_map) != base.n_vertices:
            raise ComplexError(f"vertex map has {len(vertex_map)} entries for {base.n_vertices} vertices")
        if any(vertex_map[vertex_map[v]] != v for v in range(base.n_vertices)):
            raise ComplexError("vertex map is not an involution")

        self.base = base
        self.vertex_map = tuple(vertex_map)
        self.simplex_map: List[Tuple[int, ...]] = []
        for k, layer in enumerate(base.simplices):
            images = []
            for simplex in layer:
                image = tuple(sorted(vertex_map[v] for v in simplex))
                if image not in base.index[k]:
                    raise ComplexError(f"image {image} of {simplex} is not a simplex")
                images.append(base.index[k][image])
            self.simplex_map.append(tuple(images))

    def invariant_cells(self, k: int) -> List[int]:
        return [j for j, image in enumerate(self.simplex_map[k]) if image == j]

    @property
    def is_regular(self) -> bool:
        """Every invariant simplex is fixed vertex by vertex."""
        for k, layer in enumerate(self.base.simplices):
            for j in self.invariant_cells(k):
                if any(self.vertex_map[v] != v for v in layer[j]):
                    return False
        return True

    @property
    def is_free(self) -> bool:
        return not any(self.invariant_cells(k) for k in range(len(self.simplex_map)))

    def fixed_subcomplex_cells(self) -> Dict[int, List[int]]:
        return {k: self.invariant_cells(k) for k in range(len(self.simplex_map))}

    def subdivided(self, max_simplices: Optional[int] = None) -> "SimplicialInvolution":
        """The induced involution on the barycentric subdivision."""
        subdivision, labels = barycentric_subdivision(self.base, max_simplices=max_simplices)
        vertex_of = {s: i for i, s in enumerate(labels)}
        vertex_map = [vertex_of[tuple(sorted(self.vertex_map[v] for v in s))] for s in labels]
        return SimplicialInvolution(subdivision, vertex_map)

    def regularized(self, max_simplices: Optional[int] = None) -> Tuple["SimplicialInvolution", int]:
        """
        Subdivide until regular.

        One subdivision always suffices: an invariant chain of faces has
        each of its members invariant.
        """
        if self.is_regular:
            return self, 0
        return self.subdivided(max_simplices=max_simplices), 1


def _prepare(inv: SimplicialInvolution, auto_subdivide: Optional[bool],
             max_simplices: Optional[int]) -> Tuple[SimplicialInvolution, int]:
    if auto_subdivide is None:
        auto_subdivide = HOMOLOGY_CONFIG["auto_subdivide"]
    if inv.is_regular:
        return inv, 0
    if not auto_subdivide:
        raise NonRegularInvolutionError(
            "involution moves vertices of an invariant simplex; "
            "pass it through SimplicialInvolution.subdivided() first"
        )
    return inv.regularized(max_simplices=max_simplices)


@dataclass(frozen=True)
class QuotientComplex:
    """Orbit chain complex of X/c with the orbits of the fixed cells marked."""

    chain: ChainComplexF2
    orbit_of: Tuple[Tuple[int, ...], ...]
    fixed_orbits: Tuple[Tuple[int, ...], ...]

    def homology_ranks(self) -> List[int]:
        return self.chain.homology_ranks()

    def relative_homology_ranks(self) -> List[int]:
        """F2-Betti numbers of the pair (X/c, F)."""
        return self.chain.relative(dict(enumerate(self.fixed_orbits))).homology_ranks()


def quotient_complex(inv: SimplicialInvolution) -> QuotientComplex:
    """Cells of X/c are orbits of simplices; orbit boundaries are summed mod 2."""
    if not inv.is_regular:
        raise NonRegularInvolutionError("quotient needs a regular involution; subdivide first")

    chain = inv.base.chain_complex()
    orbit_of, representatives, fixed = [], [], []
    for k, images in enumerate(inv.simplex_map):
        labels, reps = [0] * len(images), []
        for j, image in enumerate(images):
            if j <= image:
                labels[j] = labels[image] = len(reps)
                reps.append(j)
        orbit_of.append(tuple(labels))
        representatives.append(reps)
        fixed.append(tuple(labels[j] for j in inv.invariant_cells(k)))

    boundaries = {}
    for k in range(1, len(representatives)):
        columns = []
        for j in representatives[k]:
            column, image = chain.boundaries[k][j], 0
            while column:
                row = column.bit_length() - 1
                column ^= 1 << row
                image ^= 1 << orbit_of[k - 1][row]
            columns.append(image)
        boundaries[k] = columns

    quotient = ChainComplexF2([len(r) for r in representatives], boundaries)
    logger.debug("  quotient complex sizes %s", quotient.sizes)
    return QuotientComplex(chain=quotient, orbit_of=tuple(orbit_of), fixed_orbits=tuple(fixed))


@dataclass(frozen=True)
class SmithData:
    """Homology ranks around the Smith long exact sequence."""

    betti_X: Tuple[int, ...]
    betti_F: Tuple[int, ...]
    betti_relative: Tuple[int, ...]  # (X/c, F)
    betti_smith: Tuple[int, ...]  # ker(1 + c)
    rank_inclusion: Tuple[int, ...]
    rank_projection: Tuple[int, ...]
    rank_connecting: Tuple[int, ...]  # H_k(Im) -> H_{k-1}(Sm)
    subdivisions: int = 0

    def __post_init__(self):
        top = len(self.betti_X)
        for k in range(top):
            if self.betti_smith[k] != self.betti_F[k] + self.betti_relative[k]:
                raise ConsistencyError(f"H_{k}(Sm) does not split as H_{k}(F) + H_{k}(X/c, F)")
            incoming = self.rank_connecting[k + 1] if k + 1 < top else 0
            nodes = (
                (f"H_{k}(Sm)", self.betti_smith[k] - self.rank_inclusion[k], incoming),
                (f"H_{k}(X)", self.betti_X[k] - self.rank_projection[k], self.rank_inclusion[k]),
                (f"H_{k}(Im)", self.betti_relative[k] - self.rank_connecting[k], self.rank_projection[k]),
            )
            for node, kernel, image in nodes:
                if kernel != image:
                    raise ConsistencyError(f"Smith sequence not exact at {node}: kernel {kernel}, image {image}")
        if self.beta_star_F + 2 * sum(self.cokernel_inclusion) != self.beta_star_X:
            raise ConsistencyError("Smith identity fails")

    @property
    def beta_star_X(self) -> int:
        return sum(self.betti_X)

    @property
    def beta_star_F(self) -> int:
        return sum(self.betti_F)

    @property
    def cokernel_inclusion(self) -> Tuple[int, ...]:
        return tuple(b - r for b, r in zip(self.betti_X, self.rank_inclusion))

    @property
    def smith_defect(self) -> int:
        return self.beta_star_X - self.beta_star_F


def _cycles(basis: List[int], boundary: List[int]) -> List[int]:
    images = [apply(boundary, v) for v in basis]
    return [combine(basis, mask) for mask in kernel_basis(images)]


def smith_sequence(inv: SimplicialInvolution, auto_subdivide: Optional[bool] = None,
                   max_simplices: Optional[int] = None) -> SmithData:
    """
    Ranks of every group and map in the Smith sequence of an involution.

    Raises:
        NonRegularInvolutionError: if the involution is not regular and
            automatic subdivision is off
    """
    inv, subdivisions = _prepare(inv, auto_subdivide, max_simplices)
    chain = inv.base.chain_complex()
    d = chain.boundaries
    top = inv.base.dimension

    fixed, orbit_sums, lower = [], [], []
    for k, images in enumerate(inv.simplex_map):
        fixed.append([1 << j for j, image in enumerate(images) if image == j])
        orbit_sums.append([(1 << j) | (1 << image) for j, image in enumerate(images) if j < image])
        lower.append(sum(1 << j for j, image in enumerate(images) if j < image))
    smith_basis = [f + o for f, o in zip(fixed, orbit_sums)]

    def boundaries_of(basis_by_degree, k):
        return [apply(d[k + 1], v) for v in basis_by_degree[k + 1]] if k < top else []

    betti_X, betti_sm, betti_rel = [], [], []
    rank_i, rank_pr, rank_delta = [], [], []
    smith_boundaries = []
    for k in range(top + 1):
        z_x = kernel_basis(d[k])
        b_x = list(d[k + 1]) if k < top else []
        z_sm = _cycles(smith_basis[k], d[k])
        b_sm = boundaries_of(smith_basis, k)
        z_im = _cycles(orbit_sums[k], d[k])
        b_im = boundaries_of(orbit_sums, k)
        smith_boundaries.append(b_sm)

        r_bx, r_bsm, r_bim = span_rank(b_x), span_rank(b_sm), span_rank(b_im)
        betti_X.append(len(z_x) - r_bx)
        betti_sm.append(len(z_sm) - r_bsm)
        betti_rel.append(len(z_im) - r_bim)

        rank_i.append(span_rank(z_sm + b_x) - r_bx)
        symmetrized = [z ^ _permute(z, inv.simplex_map[k]) for z in z_x]
        rank_pr.append(span_rank(symmetrized + b_im) - r_bim)

        if k == 0:
            rank_delta.append(0)
        else:
            # lift an invariant cycle by its lower-index half
            lifted = [apply(d[k], z & lower[k]) for z in z_im]
            previous = smith_boundaries[k - 1]
            rank_delta.append(span_rank(lifted + previous) - span_rank(previous))

    nonfixed = {k: [j for j, image in enumerate(images) if image != j]
                for k, images in enumerate(inv.simplex_map)}
    betti_F = chain.relative(nonfixed).homology_ranks()

    quotient_relative = quotient_complex(inv).relative_homology_ranks()
    if quotient_relative != betti_rel:
        raise ConsistencyError(
            f"orbit complex gives H(X/c, F) = {quotient_relative}, Smith complex gives {betti_rel}"
        )

    logger.info("  Smith sequence: H(X)=%s H(F)=%s H(X/c,F)=%s", betti_X, betti_F, betti_rel)
    return SmithData(
        betti_X=tuple(betti_X),
        betti_F=tuple(betti_F),
        betti_relative=tuple(betti_rel),
        betti_smith=tuple(betti_sm),
        rank_inclusion=tuple(rank_i),
        rank_projection=tuple(rank_pr),
        rank_connecting=tuple(rank_delta),
        subdivisions=subdivisions,
    )


def maximality_exactness(inv: SimplicialInvolution, auto_subdivide: Optional[bool] = None) -> bool:
    """
    True iff every connecting map is injective and every inclusion
    H(Sm) -> H(X) is onto; equivalent to beta*(F) = beta*(X).
    """
    data = smith_sequence(inv, auto_subdivide=auto_subdivide)
    exact = (all(r == b for r, b in zip(data.rank_connecting, data.betti_relative))
             and all(r == b for r, b in zip(data.rank_inclusion, data.betti_X)))
    if exact != (data.smith_defect == 0):
        raise ConsistencyError(
            f"exactness test says {exact} but beta*(F) = {data.beta_star_F}, beta*(X) = {data.beta_star_X}"
        )
    return exact


def double_cover_class_eval(cover: SimplicialInvolution, cycle: Iterable[Sequence[int]]) -> int:
    """
    Evaluate the characteristic class of the double cover X -> X/c on a 1-cycle.

    Args:
        cover: Involution acting freely on the edges of the cycle
        cycle: Edges of X, each standing for its orbit in X/c; repeated
            orbits cancel mod 2

    Returns:
        1 when the lift of the cycle does not close up, else 0
    """
    vm = cover.vertex_map
    representatives: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for edge in cycle:
        edge = tuple(sorted(edge))
        if edge not in cover.base.index[1]:
            raise ComplexError(f"{edge} is not an edge")
        image = tuple(sorted(vm[v] for v in edge))
        if image == edge or any(vm[v] == v for v in edge):
            raise ComplexError(f"involution is not free on edge {edge}")
        key = min(edge, image)
        if key in representatives:
            del representatives[key]
        else:
            representatives[key] = edge

    boundary = set()
    for edge in representatives.values():
        boundary ^= set(edge)
    if any(vm[v] not in boundary for v in boundary):
        raise ComplexError("edges do not form a cycle of the quotient")

    return sum(1 for v in boundary if v < vm[v]) % 2
