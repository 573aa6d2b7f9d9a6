"""
Brute-force homology of symmetric squares of triangulated surfaces.
"""

import pytest

from errors import ResourceBudgetError
from homology import count_square_subdivision, symmetric_square_oracle
from homology import triangulations as tri
from surfaces import RealComponent
from tasks import VerificationTasks

pytestmark = pytest.mark.slow


def test_symmetric_square_of_the_sphere():
    # the complex projective plane
    assert symmetric_square_oracle(tri.sphere()) == [1, 0, 1, 0, 1]


def test_symmetric_square_of_the_projective_plane():
    # the real projective 4-space
    assert symmetric_square_oracle(RealComponent.with_crosscaps(1)) == [1, 1, 1, 1, 1]


def test_symmetric_square_of_the_torus():
    betti = symmetric_square_oracle(RealComponent.of_genus(1))
    assert betti[3] == 2
    assert sum((-1) ** k * b for k, b in enumerate(betti)) == 0


def test_subdivision_budget():
    needed = count_square_subdivision(tri.sphere())
    with pytest.raises(ResourceBudgetError) as info:
        symmetric_square_oracle(tri.sphere(), max_simplices=needed - 1)
    assert info.value.needed == needed


def test_symsq_suite():
    results = VerificationTasks.symsq()
    assert len(results) == 4
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_zero_subdivision_budget_is_honoured():
    with pytest.raises(ResourceBudgetError) as info:
        symmetric_square_oracle(tri.sphere(), max_simplices=0)
    assert info.value.budget == 0
