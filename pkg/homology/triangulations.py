"""
Built-in triangulated surfaces and involutions on them.

Vertex conventions:
    octahedron      0, 1 = +x, -x; 2, 3 = +y, -y; 4, 5 = +z, -z
    grid a x b      (x, y) -> x * b + y
"""

from itertools import combinations
from typing import List, Sequence, Tuple

from errors import ComplexError

from .complexes import SimplicialComplex

# 6-vertex real projective plane (half of the icosahedron)
RP2_FACETS = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, an (n-1)-sphere."""
    return SimplicialComplex.from_facets(combinations(range(n + 1), n))


def sphere() -> SimplicialComplex:
    return simplex_boundary(3)


def octahedron() -> SimplicialComplex:
    return SimplicialComplex.from_facets(
        (a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)
    )


def octahedron_reflection() -> List[int]:
    """z -> -z; fixes the equatorial square 0-2-1-3."""
    return [0, 1, 2, 3, 5, 4]


def octahedron_antipodal() -> List[int]:
    return [1, 0, 3, 2, 5, 4]


def minimal_torus() -> SimplicialComplex:
    """Moebius' 7-vertex torus."""
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex.from_facets(facets)


def projective_plane() -> SimplicialComplex:
    return SimplicialComplex.from_facets(RP2_FACETS)


def _grid_facets(a: int, b: int, wrap) -> List[Tuple[int, ...]]:
    facets = []
    for x in range(a):
        for y in range(b):
            p, q = wrap(x, y), wrap(x + 1, y)
            r, s = wrap(x + 1, y + 1), wrap(x, y + 1)
            facets.append((p, q, r))
            facets.append((p, s, r))
    return facets


def grid_torus(a: int, b: int) -> SimplicialComplex:
    if a < 3 or b < 3:
        raise ComplexError("grid torus needs at least 3 x 3 squares")
    return SimplicialComplex.from_facets(_grid_facets(a, b, lambda x, y: (x % a) * b + y % b))


def cycle_graph(n: int) -> SimplicialComplex:
    """A circle with n edges."""
    return SimplicialComplex.from_facets((i, (i + 1) % n) for i in range(n))


def connected_sum(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """
    Connected sum of two triangulated surfaces along a triangle.

    The last facet of K and the first facet of L are removed and their
    boundaries identified.
    """
    k_facets = [f for f in K.facets() if len(f) == 3]
    l_facets = [f for f in L.facets() if len(f) == 3]
    if len(k_facets) != len(K.facets()) or len(l_facets) != len(L.facets()):
        raise ComplexError("connected sum is defined for pure 2-dimensional complexes")

    glued_k, glued_l = k_facets[-1], l_facets[0]
    relabel = dict(zip(glued_l, glued_k))
    offset = K.n_vertices
    for v in range(L.n_vertices):
        if v not in relabel:
            relabel[v] = offset
            offset += 1

    facets = [f for f in k_facets if f != glued_k]
    facets += [tuple(relabel[v] for v in f) for f in l_facets if f != glued_l]
    return SimplicialComplex.from_facets(facets, n_vertices=offset)


def iterated_sum(piece: SimplicialComplex, count: int) -> SimplicialComplex:
    result = piece
    for _ in range(count - 1):
        result = connected_sum(result, piece)
    return result


def klein_bottle() -> SimplicialComplex:
    return connected_sum(projective_plane(), projective_plane())


def triangulate(component) -> SimplicialComplex:
    """
    A triangulation of a closed connected surface.

    Args:
        component: a RealComponent (orientable flag and genus or
            crosscap number)
    """
    count = component.genus_or_crosscaps
    if component.orientable:
        return sphere() if count == 0 else iterated_sum(minimal_torus(), count)
    return iterated_sum(projective_plane(), count)


def torus_double_cover() -> Tuple[SimplicialComplex, List[int]]:
    """6 x 3 grid torus with the free involution (x, y) -> (x + 3, y)."""
    K = grid_torus(6, 3)
    return K, [((x + 3) % 6) * 3 + y for x in range(6) for y in range(3)]


def hexagon_antipodal() -> Tuple[SimplicialComplex, List[int]]:
    return cycle_graph(6), [(i + 3) % 6 for i in range(6)]


def swapped_triangles() -> Tuple[SimplicialComplex, List[int]]:
    """Two disjoint triangle circles exchanged: the trivial double cover."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return SimplicialComplex.from_facets(edges), [3, 4, 5, 0, 1, 2]


def parse_facets(lines: Sequence[str]) -> List[Tuple[int, ...]]:
    """Maximal simplices from whitespace-separated vertex lists."""
    facets = []
    for number, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            facets.append(tuple(int(v) for v in line.split()))
        except ValueError:
            raise ComplexError(f"line {number}: expected vertex indices, got {line!r}") from None
    return facets
