"""GF(2) simplicial homology with involutions: the explicit-complex oracle."""

from .complexes import ChainComplexF2, SimplicialComplex, barycentric_subdivision, homology_ranks
from .gf2 import EchelonBasis, kernel_basis, rank, reduce_columns, span_rank
from .involutions import (
    QuotientComplex,
    SimplicialInvolution,
    SmithData,
    double_cover_class_eval,
    maximality_exactness,
    quotient_complex,
    smith_sequence,
)
from .products import (
    check_kunneth,
    count_square_subdivision,
    kunneth_product,
    product_triangulation,
    symmetric_square_oracle,
)
from .triangulations import triangulate

__all__ = [
    'ChainComplexF2',
    'SimplicialComplex',
    'barycentric_subdivision',
    'homology_ranks',
    'EchelonBasis',
    'kernel_basis',
    'rank',
    'reduce_columns',
    'span_rank',
    'QuotientComplex',
    'SimplicialInvolution',
    'SmithData',
    'double_cover_class_eval',
    'maximality_exactness',
    'quotient_complex',
    'smith_sequence',
    'check_kunneth',
    'count_square_subdivision',
    'kunneth_product',
    'product_triangulation',
    'symmetric_square_oracle',
    'triangulate',
]
