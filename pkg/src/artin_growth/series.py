"""Power-series reciprocal of a polynomial with unit constant term."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonUnitConstantTerm
from .polynomial import IntPolynomial

DEFAULT_DEGREE = 20


@dataclass(frozen=True)
class GrowthSeries:
    """Coefficients c_0..c_d of 1/source, truncated after t**d."""

    coefficients: tuple[int, ...]
    source: IntPolynomial
    degree: int

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


def invert_series(p: IntPolynomial, d: int = DEFAULT_DEGREE) -> GrowthSeries:
    if d < 0:
        raise ValueError("truncation degree must be >= 0")
    if p[0] != 1:
        raise NonUnitConstantTerm(p[0])
    coeffs = p.coefficients
    c = [1]
    for n in range(1, d + 1):
        c.append(-sum(coeffs[i] * c[n - i] for i in range(1, min(n, p.degree) + 1)))
    return GrowthSeries(tuple(c), p, d)


def truncated_product(a, b, d: int) -> tuple[int, ...]:
    """Coefficients 0..d of the product of two coefficient sequences."""
    a, b = list(a), list(b)
    return tuple(
        sum(a[i] * b[n - i] for i in range(n + 1) if i < len(a) and n - i < len(b))
        for n in range(d + 1)
    )
