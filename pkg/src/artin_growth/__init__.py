"""Skew-growth polynomials of finite-type Artin monoids."""

from .coxeter import (
    INFINITY,
    CoxeterMatrix,
    IrreducibleType,
    SubsetSelection,
    classify,
    decompose,
    direct_sum,
    make_named,
    validate_finite_type,
)
from .degrees import count_positive_roots, deg_delta, fundamental_degree
from .errors import (
    BudgetExceeded,
    ClosureExceededCap,
    NonUnitConstantTerm,
    NotFiniteType,
    NumericalAmbiguity,
    RankTooLarge,
)
from .oracle import count_elements, verify_inversion
from .polynomial import IntPolynomial
from .series import GrowthSeries, invert_series
from .skewgrowth import (
    SizeStatistics,
    count_families,
    derivative_at_one,
    size_statistics,
    skew_growth_poly,
    theorem_table,
    value_at_one,
    verify_identities,
)

__version__ = "0.1.0"
