"""Skew-growth polynomials by signed subset enumeration, and brute-force
checks of the closed forms for their derivatives at t = 1.

The enumeration is a flat loop over all 2**rank vertex subsets.  Each subset
is decomposed independently; nothing is shared between subsets, so the loop
could be split across workers without changing the result.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator

from .coxeter import (
    CoxeterMatrix,
    IrreducibleType,
    component_masks,
    make_named,
    validate_finite_type,
)
from .degrees import deg_delta
from .errors import RankTooLarge
from .polynomial import IntPolynomial

DEFAULT_RANK_CAP = 24

# Base-case value printed for N'_{D4}(1) in the published derivation; the
# exhaustive count disagrees and the verify report says so.
PUBLISHED_D4_BASE_VALUE = 12


def _check_enumerable(M: CoxeterMatrix, cap: int) -> None:
    if M.rank > cap:
        raise RankTooLarge(M.rank, cap)
    validate_finite_type(M)


def skew_growth_poly(M: CoxeterMatrix, cap: int = DEFAULT_RANK_CAP) -> IntPolynomial:
    """Sum of ``(-1)**#J * t**deg(Delta_J)`` over all vertex subsets J."""
    _check_enumerable(M, cap)
    coeffs = [0] * (deg_delta(M, M.full_mask) + 1)
    for mask in range(1 << M.rank):
        coeffs[deg_delta(M, mask)] += -1 if mask.bit_count() & 1 else 1
    return IntPolynomial(tuple(coeffs))


def value_at_one(p: IntPolynomial) -> int:
    return sum(p.coefficients)


def derivative_at_one(p: IntPolynomial) -> int:
    return sum(n * c for n, c in enumerate(p.coefficients))


def beta(l: int, j: int) -> int:
    """Largest possible number of components of a j-subset of the A_l path."""
    return min(j, l - j + 1)


@dataclass(frozen=True)
class SizeStatistics:
    """Per-size degree data for one matrix.

    ``by_size[j]`` is the generating polynomial of deg(Delta_J) over subsets
    with #J = j and ``degree_sums[j]`` is its derivative at 1.  For the A_l
    path the statistics are refined by component count k:
    ``component_sums[j, k]`` and ``normalized_sums[j, k]`` (the former divided
    by binom(l - j + 1, k)), and ``observed_k[j]`` lists the k that occur.
    """

    rank: int
    by_size: tuple[IntPolynomial, ...]
    degree_sums: tuple[int, ...]
    component_sums: dict[tuple[int, int], int] | None = None
    normalized_sums: dict[tuple[int, int], int | Fraction] | None = None
    observed_k: dict[int, tuple[int, ...]] | None = None

    def total(self) -> IntPolynomial:
        acc = IntPolynomial()
        for j, p in enumerate(self.by_size):
            acc = acc + (p if j % 2 == 0 else -p)
        return acc

    def signed_degree_sum(self) -> int:
        return sum((-1) ** j * c for j, c in enumerate(self.degree_sums))


def is_type_a_path(M: CoxeterMatrix) -> bool:
    return M == make_named("A", M.rank)


def size_statistics(M: CoxeterMatrix, cap: int = DEFAULT_RANK_CAP) -> SizeStatistics:
    _check_enumerable(M, cap)
    l = M.rank
    refine = is_type_a_path(M)
    terms = [Counter() for _ in range(l + 1)]
    sums = [0] * (l + 1)
    by_jk: dict[tuple[int, int], int] = defaultdict(int)
    seen_k: dict[int, set[int]] = defaultdict(set)
    for mask in range(1 << l):
        j = mask.bit_count()
        d = deg_delta(M, mask)
        terms[j][d] += 1
        sums[j] += d
        if refine and j:
            k = len(component_masks(M.neighbors, mask))
            by_jk[j, k] += d
            seen_k[j].add(k)
    polys = tuple(IntPolynomial.from_terms(dict(t)) for t in terms)
    if not refine:
        return SizeStatistics(l, polys, tuple(sums))

    component_sums = {}
    normalized = {}
    for j in range(1, l + 1):
        for k in range(1, beta(l, j) + 1):
            c = by_jk.get((j, k), 0)
            component_sums[j, k] = c
            q = Fraction(c, comb(l - j + 1, k))
            normalized[j, k] = int(q) if q.denominator == 1 else q
    observed = {j: tuple(sorted(seen_k[j])) for j in range(1, l + 1)}
    return SizeStatistics(l, polys, tuple(sums), component_sums, normalized, observed)


def compositions(j: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of positive integers summing to ``j``."""
    for k in range(1, j + 1):
        for cuts in combinations(range(1, j), k - 1):
            bounds = (0,) + cuts + (j,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def composition_counts(l: int) -> Counter:
    """Tally every nonempty subset of the A_l path by its ordered component sizes."""
    M = make_named("A", l)
    counts: Counter = Counter()
    for mask in range(1, 1 << l):
        counts[tuple(c.bit_count() for c in component_masks(M.neighbors, mask))] += 1
    return counts


def count_families(l: int, tau) -> int:
    """Number of subsets of the A_l path whose components, left to right, have sizes ``tau``."""
    tau = tuple(tau)
    if not tau or any(t < 1 for t in tau) or sum(tau) > l:
        raise ValueError(f"{tau} is not a composition of some j <= {l}")
    return composition_counts(l)[tau]


# ---------------------------------------------------------------------------
# closed forms and reports
# ---------------------------------------------------------------------------

_EXCEPTIONAL_DERIVATIVES = {
    ("E", 6): 7,
    ("E", 7): -16,
    ("E", 8): 44,
    ("F", 4): 10,
    ("H", 3): -8,
    ("H", 4): 42,
}


def expected_derivative(tag: IrreducibleType) -> int:
    """Closed-form value of N'(1) for an irreducible type."""
    l = tag.rank
    sign = -1 if l % 2 else 1
    if tag.family == "A":
        return sign
    if tag.family == "B":
        return sign * l
    if tag.family == "D":
        return sign * (l - 2)
    if tag.family == "I2":
        return tag.p - 2
    return _EXCEPTIONAL_DERIVATIVES[tag.family, l]


@dataclass(frozen=True)
class TableRow:
    name: str
    computed: int
    expected: int
    value_at_one: int

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    @property
    def simple_root(self) -> bool:
        return self.value_at_one == 0 and self.computed != 0


def table_types(max_rank: int) -> list[IrreducibleType]:
    tags = [IrreducibleType("A", l) for l in range(1, max_rank + 1)]
    tags += [IrreducibleType("B", l) for l in range(2, max_rank + 1)]
    tags += [IrreducibleType("D", l) for l in range(4, max_rank + 1)]
    tags += [IrreducibleType.parse(s) for s in ("E6", "E7", "E8", "F4", "H3", "H4")]
    tags += [IrreducibleType("I2", 2, p) for p in range(5, max_rank + 1)]
    return tags


def theorem_table(max_rank: int, cap: int = DEFAULT_RANK_CAP) -> list[TableRow]:
    """Computed N'(1) next to its closed form for every listed irreducible type."""
    rows = []
    for tag in table_types(max_rank):
        poly = skew_growth_poly(tag.matrix(), cap)
        rows.append(TableRow(str(tag), derivative_at_one(poly), expected_derivative(tag), value_at_one(poly)))
    return rows


@dataclass
class IdentityCheck:
    name: str
    statement: str
    cases: int = 0
    passed: bool = True
    first_failure: dict | None = None
    detail: str | None = None

    def record(self, ok: bool, **case) -> None:
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.first_failure = case


@dataclass
class VerificationReport:
    l_max: int
    checks: list[IdentityCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "l_max": self.l_max,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
            "notes": list(self.notes),
        }


def _derivative(family: str, l: int, cap: int) -> int:
    return derivative_at_one(skew_growth_poly(make_named(family, l), cap))


def verify_identities(l_max: int, cap: int = DEFAULT_RANK_CAP) -> VerificationReport:
    """Check the degree-sum identities and derivative formulas for all ranks up to ``l_max``.

    Every quantity on the left-hand sides comes from exhaustive enumeration.
    Failures are recorded in the report, never raised.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    if l_max + 1 > cap:
        raise RankTooLarge(l_max + 1, cap)
    report = VerificationReport(l_max)

    def new(name, statement):
        c = IdentityCheck(name, statement)
        report.checks.append(c)
        return c

    a_stats = {l: size_statistics(make_named("A", l), cap) for l in range(1, l_max + 2)}
    a_der = {l: _derivative("A", l, cap) for l in range(1, l_max + 2)}
    b_der = {l: _derivative("B", l, cap) for l in range(2, l_max + 1)}
    d_der = {l: _derivative("D", l, cap) for l in range(4, l_max + 1)}

    chk = new("component_count_range",
              "size-j subsets of the A_l path have exactly 1..min(j, l-j+1) components")
    for l in range(1, l_max + 1):
        for j in range(1, l + 1):
            got = a_stats[l].observed_k[j]
            chk.record(got == tuple(range(1, beta(l, j) + 1)), l=l, j=j, observed=list(got))

    chk = new("normalized_component_sum",
              "C~(k)_{A_l,j} = k * binom(j+1, k+1)")
    for l in range(1, l_max + 1):
        for (j, k), got in a_stats[l].normalized_sums.items():
            want = k * comb(j + 1, k + 1)
            chk.record(got == want, l=l, j=j, k=k, computed=str(got), expected=want)

    chk = new("composition_family_count",
              "#subsets of A_l with ordered component sizes tau = binom(l-j+1, k)")
    for l in range(1, l_max + 1):
        counts = composition_counts(l)
        for j in range(1, l + 1):
            for tau in compositions(j):
                want = comb(l - j + 1, len(tau))
                chk.record(counts[tau] == want, l=l, tau=list(tau), computed=counts[tau], expected=want)

    chk = new("degree_sum_recursion",
              "C_{A_{l+1},j+1} - C_{A_l,j} = (j+1) * binom(l+1, j+1)")
    for l in range(1, l_max + 1):
        for j in range(1, l + 1):
            got = a_stats[l + 1].degree_sums[j + 1] - a_stats[l].degree_sums[j]
            want = (j + 1) * comb(l + 1, j + 1)
            chk.record(got == want, l=l, j=j, computed=got, expected=want)

    chk = new("a_derivative_alternation", "N'_{A_{l+1}}(1) + N'_{A_l}(1) = 0")
    for l in range(1, l_max + 1):
        got = a_der[l + 1] + a_der[l]
        chk.record(got == 0, l=l, computed=got, expected=0)

    short = new("binomial_sum_short",
                "sum_{k=1}^{j+1} binom(j,k-1) binom(l-j+1,k) = binom(l+1,j+1) when j+1 <= ceil((l+1)/2)")
    long_ = new("binomial_sum_long",
                "sum_{k=1}^{l-j+1} binom(j,k-1) binom(l-j+1,k) = binom(l+1,j+1) when j+1 > ceil((l+1)/2)")
    for l in range(1, l_max + 1):
        half = -(-(l + 1) // 2)
        for j in range(1, l + 1):
            want = comb(l + 1, j + 1)
            if j + 1 <= half:
                got = sum(comb(j, k - 1) * comb(l - j + 1, k) for k in range(1, j + 2))
                short.record(got == want, l=l, j=j, computed=got, expected=want)
            else:
                got = sum(comb(j, k - 1) * comb(l - j + 1, k) for k in range(1, l - j + 2))
                long_.record(got == want, l=l, j=j, computed=got, expected=want)

    chk = new("signed_degree_sum", "sum_j (-1)^j C_{A_l,j} = N'_{A_l}(1)")
    for l in range(1, l_max + 1):
        got = a_stats[l].signed_degree_sum()
        chk.record(got == a_der[l], l=l, computed=got, expected=a_der[l])

    chk = new("b_minus_a_derivative", "N'_{B_l}(1) - N'_{A_l}(1) = (-1)^l (l-1)")
    for l in range(2, l_max + 1):
        got = b_der[l] - a_der[l]
        want = (-1) ** l * (l - 1)
        chk.record(got == want, l=l, computed=got, expected=want)

    chk = new("d_derivative_closed_form", "N'_{D_l}(1) = (-1)^l (l-2)")
    for l in range(4, l_max + 1):
        want = (-1) ** l * (l - 2)
        chk.record(d_der[l] == want, l=l, computed=d_der[l], expected=want)

    chk = new("d_derivative_step", "N'_{D_l}(1) - N'_{D_{l-1}}(1) = (-1)^l (2l-5)")
    for l in range(5, l_max + 1):
        got = d_der[l] - d_der[l - 1]
        want = (-1) ** l * (2 * l - 5)
        chk.record(got == want, l=l, computed=got, expected=want)

    chk = new("d4_base_case", "N'_{D_4}(1) = (-1)^4 (4-2) = 2")
    if l_max >= 4:
        got = d_der[4]
        chk.record(got == 2, computed=got, expected=2)
        verdict = "agreeing with" if got == 2 else "CONTRADICTING"
        chk.detail = (
            f"exhaustive enumeration gives N'_{{D4}}(1) = {got}, {verdict} (-1)^l (l-2) = 2; "
            f"the published base-case value {PUBLISHED_D4_BASE_VALUE} is "
            f"{'also reproduced' if got == PUBLISHED_D4_BASE_VALUE else 'not reproduced'} "
            f"({PUBLISHED_D4_BASE_VALUE} coincides with deg(Delta_D4))"
        )
        report.notes.append("D4 base case: " + chk.detail)
    return report
