"""
Generating-function oracle for the Betti numbers of Hilbert schemes of
points on a surface.

The product

    prod_{m>=1} (1 + z^(2m-1) q^m)^b1 (1 + z^(2m+1) q^m)^b3
                / ((1 - z^(2m-2) q^m)^b0 (1 - z^(2m) q^m)^b2 (1 - z^(2m+2) q^m)^b4)

is expanded as a truncated polynomial in (z, q) with integer coefficients;
the coefficient of z^i q^n is b_i(X^[n]).
"""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, Optional, Sequence, Tuple

from sympy import ZZ, Poly, symbols

from config import GOETTSCHE_CONFIG
from errors import HypothesisError, ResourceBudgetError

logger = logging.getLogger(__name__)

z, q = symbols("z q")


@dataclass(frozen=True)
class BettiSeries:
    """Betti numbers b_i(X^[n]) for 0 <= n <= n_max."""

    b_input: Tuple[int, int, int, int, int]
    n_max: int
    table: Dict[int, Tuple[int, ...]] = field(repr=False)

    def __post_init__(self):
        if self.table[0] != (1,):
            raise ValueError("X^[0] is a point")
        if self.n_max >= 1 and self.table[1] != tuple(self.b_input):
            raise ValueError(f"row n=1 must equal the input, got {self.table[1]}")
        for n, row in self.table.items():
            if len(row) != 4 * n + 1 or any(c < 0 for c in row):
                raise ValueError(f"row n={n} is malformed: {row}")
            if row != row[::-1]:
                raise ValueError(f"row n={n} violates Poincare duality: {row}")

    def row(self, n: int) -> Tuple[int, ...]:
        return self.table[n]

    def total(self, n: int) -> int:
        return sum(self.table[n])

    def euler_characteristic(self, n: int) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.table[n]))

    def records(self) -> Iterator[Tuple[int, int, int]]:
        """(n, i, b_i(X^[n])) in lexicographic order."""
        for n in range(self.n_max + 1):
            for i, value in enumerate(self.table[n]):
                yield n, i, value


def _factor(z_step: int, m: int, exponent: int, n_max: int, denominator: bool) -> Poly:
    """(1 + z^e q^m)^b, or the series of (1 - z^e q^m)^(-b), up to q^n_max."""
    terms = {(0, 0): 1}
    if exponent:
        for k in range(1, n_max // m + 1):
            coeff = comb(exponent + k - 1, k) if denominator else comb(exponent, k)
            if coeff:
                terms[(z_step * k, m * k)] = coeff
    return Poly.from_dict(terms, z, q, domain=ZZ)


def _truncate(poly: Poly, n_max: int) -> Poly:
    kept = {monom: c for monom, c in poly.as_dict().items() if monom[1] <= n_max}
    return Poly.from_dict(kept or {(0, 0): 0}, z, q, domain=ZZ)


def hilb_betti_series(
    b: Sequence[int], n_max: int, max_coefficients: Optional[int] = None
) -> BettiSeries:
    """
    Expand the product formula up to q^n_max.

    Args:
        b: Rational Betti numbers (b0, ..., b4) of a connected surface
        n_max: Highest number of points
        max_coefficients: Size budget for the coefficient table; defaults
            to GOETTSCHE_CONFIG["max_coefficients"]

    Raises:
        HypothesisError: if b is not five non-negative integers with b0 = 1
        ResourceBudgetError: if the table would exceed the budget
    """
    b = tuple(int(x) for x in b)
    if len(b) != 5 or any(x < 0 for x in b) or b[0] != 1:
        raise HypothesisError(f"need five non-negative Betti numbers with b0 = 1, got {b}")
    if n_max < 1:
        raise HypothesisError(f"n_max must be positive, got {n_max}")

    budget = GOETTSCHE_CONFIG["max_coefficients"] if max_coefficients is None else max_coefficients
    needed = (n_max + 1) * (2 * n_max + 1)
    if needed > budget:
        raise ResourceBudgetError("Goettsche coefficient table", needed, budget)

    b0, b1, b2, b3, b4 = b
    series = Poly(1, z, q, domain=ZZ)
    for m in range(1, n_max + 1):
        for z_step, exponent, denominator in (
            (2 * m - 1, b1, False),
            (2 * m + 1, b3, False),
            (2 * m - 2, b0, True),
            (2 * m, b2, True),
            (2 * m + 2, b4, True),
        ):
            series = _truncate(series * _factor(z_step, m, exponent, n_max, denominator), n_max)
        logger.debug("expanded factor m=%d, %d terms", m, len(series.terms()))

    coefficients = series.as_dict()
    table = {}
    for n in range(n_max + 1):
        table[n] = tuple(int(coefficients.get((i, n), 0)) for i in range(4 * n + 1))
    return BettiSeries(b_input=b, n_max=n_max, table=table)


def hilbert_square_total(b: Sequence[int]) -> int:
    """Closed form b*(X^[2]) = b*(b*+1)/2 + b* - 2 b1."""
    total = sum(b)
    return total * (total + 1) // 2 + total - 2 * b[1]


def check_cx_relation(b: Sequence[int]) -> bool:
    """True iff the series row n=2 sums to the closed form for b*(X^[2])."""
    series = hilb_betti_series(b, 2)
    expected = hilbert_square_total(b)
    logger.debug("b=%s: series total %d, closed form %d", tuple(b), series.total(2), expected)
    return series.total(2) == expected


def euler_series(chi: int, n_max: int) -> Tuple[int, ...]:
    """Coefficients of prod_{m>=1} (1 - q^m)^(-chi) up to q^n_max."""
    qs = symbols("q")
    series = Poly(1, qs, domain=ZZ)
    for m in range(1, n_max + 1):
        terms = {}
        for k in range(n_max // m + 1):
            if chi >= 0:
                coeff = comb(chi + k - 1, k) if k else 1
            else:
                coeff = (-1) ** k * comb(-chi, k)
            if coeff:
                terms[(m * k,)] = coeff
        series = series * Poly.from_dict(terms, qs, domain=ZZ)
        series = Poly.from_dict(
            {monom: c for monom, c in series.as_dict().items() if monom[0] <= n_max} or {(0,): 0},
            qs,
            domain=ZZ,
        )
    coefficients = series.as_dict()
    return tuple(int(coefficients.get((n,), 0)) for n in range(n_max + 1))


def check_euler_specialization(b: Sequence[int], n_max: int) -> bool:
    """Setting z = -1 in the product must give the Euler characteristic series."""
    series = hilb_betti_series(b, n_max)
    chi = sum((-1) ** i * x for i, x in enumerate(b))
    expected = euler_series(chi, n_max)
    computed = tuple(series.euler_characteristic(n) for n in range(n_max + 1))
    return computed == expected
