"""
Products and symmetric squares of complexes.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from config import HOMOLOGY_CONFIG
from errors import ConsistencyError, OracleMismatchError, ResourceBudgetError

from .complexes import ChainComplexF2, SimplicialComplex, homology_ranks
from .triangulations import triangulate

logger = logging.getLogger(__name__)


def kunneth_product(K: SimplicialComplex, L: SimplicialComplex) -> List[int]:
    """F2-Betti numbers of K x L by convolving those of K and L."""
    a, b = homology_ranks(K), homology_ranks(L)
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return product


def product_triangulation(K: SimplicialComplex, L: SimplicialComplex,
                          max_simplices: Optional[int] = None) -> SimplicialComplex:
    """
    Staircase triangulation of K x L.

    Vertex (v, w) is numbered v * |L| + w; each product of facets is cut
    into the simplices spanned by monotone lattice paths.
    """
    width = L.n_vertices
    facets = []
    for sigma in K.facets():
        for tau in L.facets():
            p, q = len(sigma) - 1, len(tau) - 1
            for steps in combinations(range(p + q), p):
                i = j = 0
                path = [sigma[0] * width + tau[0]]
                for step in range(p + q):
                    if step in steps:
                        i += 1
                    else:
                        j += 1
                    path.append(sigma[i] * width + tau[j])
                facets.append(path)
    product = SimplicialComplex.from_facets(facets, n_vertices=K.n_vertices * width,
                                            max_simplices=max_simplices)
    logger.info("  product triangulation with f-vector %s", product.f_vector)
    return product


def check_kunneth(K: SimplicialComplex, L: SimplicialComplex) -> List[int]:
    """Kunneth Betti numbers, confirmed by the homology of a product triangulation."""
    expected = kunneth_product(K, L)
    computed = homology_ranks(product_triangulation(K, L))
    if computed != expected:
        raise OracleMismatchError(f"Kunneth gives {expected}, product triangulation gives {computed}")
    return expected


def _face_indices(F: SimplicialComplex) -> Tuple[List[Tuple[int, ...]], List[List[int]]]:
    cells = list(F)
    position = {s: i for i, s in enumerate(cells)}
    faces = []
    for s in cells:
        faces.append([position[f] for k in range(1, len(s) + 1) for f in combinations(s, k)])
    return cells, faces


def count_square_subdivision(F: SimplicialComplex) -> int:
    """Number of simplices in the barycentric subdivision of the cell complex F x F."""
    cells, faces = _face_indices(F)
    n = len(cells)
    order = sorted(range(n * n), key=lambda c: len(cells[c // n]) + len(cells[c % n]))
    chains_ending = {}
    for c in order:
        i, j = divmod(c, n)
        chains_ending[c] = 1 + sum(chains_ending[a * n + b]
                                   for a in faces[i] for b in faces[j] if a * n + b != c)
    return sum(chains_ending.values())


def symmetric_square_oracle(F, max_simplices: Optional[int] = None) -> List[int]:
    """
    F2-Betti numbers of the symmetric square of a surface, by brute force.

    F x F is given the product cell structure, subdivided once
    barycentrically so that the factor swap is regular, and the orbit
    complex of the swap is reduced over GF(2).

    Args:
        F: a SimplicialComplex, or a RealComponent to triangulate

    Raises:
        ResourceBudgetError: if the subdivision exceeds the simplex budget
        OracleMismatchError: if beta_3 differs from beta_1 of F
    """
    if not isinstance(F, SimplicialComplex):
        F = triangulate(F)
    budget = HOMOLOGY_CONFIG["max_simplices"] if max_simplices is None else max_simplices
    needed = count_square_subdivision(F)
    if needed > budget:
        raise ResourceBudgetError("subdivided square", needed, budget)
    logger.info("Symmetric square of a complex with f-vector %s (%d simplices upstairs)",
                F.f_vector, needed)

    cells, faces = _face_indices(F)
    n = len(cells)
    order = sorted(range(n * n), key=lambda c: len(cells[c // n]) + len(cells[c % n]))

    def swap(c):
        i, j = divmod(c, n)
        return j * n + i

    chains_ending: Dict[int, List[Tuple[int, ...]]] = {}
    layers: Dict[int, set] = {}
    for c in order:
        i, j = divmod(c, n)
        chains = [(c,)]
        for a in faces[i]:
            for b in faces[j]:
                d = a * n + b
                if d != c:
                    chains.extend(chain + (c,) for chain in chains_ending[d])
        chains_ending[c] = chains
        for chain in chains:
            swapped = tuple(swap(x) for x in chain)
            layers.setdefault(len(chain) - 1, set()).add(min(chain, swapped))
    del chains_ending

    top = max(layers)
    ordered = [sorted(layers[k]) for k in range(top + 1)]
    index = [{chain: i for i, chain in enumerate(layer)} for layer in ordered]

    def canonical(chain):
        swapped = tuple(swap(x) for x in chain)
        return min(chain, swapped)

    boundaries = {}
    for k in range(1, top + 1):
        columns = []
        for chain in ordered[k]:
            column = 0
            for p in range(k + 1):
                column ^= 1 << index[k - 1][canonical(chain[:p] + chain[p + 1:])]
            columns.append(column)
        boundaries[k] = columns

    quotient = ChainComplexF2([len(layer) for layer in ordered], boundaries)
    betti = quotient.homology_ranks()
    logger.info("  orbit complex sizes %s, Betti numbers %s", quotient.sizes, betti)

    betti_F = homology_ranks(F)
    chi_F = F.euler_characteristic()
    if betti[3] != betti_F[1]:
        raise OracleMismatchError(f"beta_3 of the symmetric square is {betti[3]}, beta_1(F) is {betti_F[1]}")
    if quotient.euler_characteristic() != (chi_F * chi_F + chi_F) // 2:
        raise ConsistencyError("Euler characteristic of the symmetric square is off")
    return betti
