"""Brute-force element counts for Artin monoids.

Every word of length n is generated and words are flood-filled into classes
under single braid-relation rewrites.  No normal forms are used, so the counts
are independent of the skew-growth machinery they are compared against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .coxeter import CoxeterMatrix
from .errors import BudgetExceeded
from .series import invert_series
from .skewgrowth import skew_growth_poly

Word = tuple[int, ...]

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "ARTIN_GROWTH_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    return DEFAULT_BUDGET


def work_estimate(rank: int, n: int) -> int:
    """Words x positions x generator pairs for degree ``n``."""
    pairs = max(rank * (rank - 1) // 2, 1)
    return rank**n * max(n, 1) * pairs


def _check_budget(rank: int, n: int, budget: int | None) -> None:
    budget = default_budget() if budget is None else budget
    estimate = work_estimate(rank, n)
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)


def alternating(a: int, b: int, m: int) -> Word:
    return tuple(a if i % 2 == 0 else b for i in range(m))


def braid_rewrites(M: CoxeterMatrix, word: Word) -> list[Word]:
    """All words reachable from ``word`` by replacing one factor aba... with bab..."""
    out = []
    n = len(word)
    for i in range(n - 1):
        a, b = word[i], word[i + 1]
        if a == b:
            continue
        m = M.m(a, b)
        if i + m > n:
            continue
        if word[i:i + m] == alternating(a, b, m):
            out.append(word[:i] + alternating(b, a, m) + word[i + m:])
    return out


@dataclass(frozen=True)
class EquivalenceClassing:
    """Partition of all words of one length into braid-equivalence classes."""

    rank: int
    length: int
    classes: tuple[tuple[Word, ...], ...]

    def __len__(self):
        return len(self.classes)

    def index(self) -> dict[Word, int]:
        return {w: i for i, cls in enumerate(self.classes) for w in cls}


def equivalence_classes(M: CoxeterMatrix, n: int, budget: int | None = None) -> EquivalenceClassing:
    if n < 0:
        raise ValueError("degree must be >= 0")
    _check_budget(M.rank, n, budget)
    seen: set[Word] = set()
    classes = []
    for w in product(range(1, M.rank + 1), repeat=n):
        if w in seen:
            continue
        seen.add(w)
        orbit = [w]
        stack = [w]
        while stack:
            for v in braid_rewrites(M, stack.pop()):
                if v not in seen:
                    seen.add(v)
                    orbit.append(v)
                    stack.append(v)
        classes.append(tuple(sorted(orbit)))
    return EquivalenceClassing(M.rank, n, tuple(classes))


def count_elements(M: CoxeterMatrix, n: int, budget: int | None = None) -> int:
    """Number of distinct monoid elements of degree ``n``."""
    return len(equivalence_classes(M, n, budget))


def left_multiplication_consistent(M: CoxeterMatrix, n: int, budget: int | None = None) -> bool:
    """True iff a*w lands in one class for every class of w and every generator a."""
    lower = equivalence_classes(M, n, budget)
    upper = equivalence_classes(M, n + 1, budget).index()
    for cls in lower.classes:
        for a in range(1, M.rank + 1):
            if len({upper[(a,) + w] for w in cls}) != 1:
                return False
    return True


@dataclass(frozen=True)
class InversionReport:
    series: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.series == self.counts

    @property
    def first_mismatch(self) -> int | None:
        for n, (s, c) in enumerate(zip(self.series, self.counts)):
            if s != c:
                return n
        return None

    def to_dict(self) -> dict:
        return {
            "series": list(self.series),
            "oracle": list(self.counts),
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
        }


def verify_inversion(M: CoxeterMatrix, d: int, budget: int | None = None) -> InversionReport:
    """Compare the reciprocal of N(t) with brute-force element counts up to degree ``d``."""
    _check_budget(M.rank, d, budget)
    series = invert_series(skew_growth_poly(M), d)
    counts = tuple(count_elements(M, n, budget) for n in range(d + 1))
    return InversionReport(series.coefficients, counts)
