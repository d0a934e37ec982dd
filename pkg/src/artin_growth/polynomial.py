"""Dense univariate polynomials with Python ``int`` coefficients."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

_TERM_RE = re.compile(r"([+-]?)(?:(\d+)(?:\*(t)(?:\^(\d+))?)?|(t)(?:\^(\d+))?)")
_POLY_RE = re.compile(r"[+-]?(?:\d+|\d+\*t(?:\^\d+)?|t(?:\^\d+)?)(?:[+-](?:\d+|\d+\*t(?:\^\d+)?|t(?:\^\d+)?))*")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficient ``coefficients[n]`` multiplies ``t**n``; trailing zeros are stripped."""

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in self.coefficients))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPolynomial":
        if not terms:
            return cls()
        coeffs = [0] * (max(terms) + 1)
        for n, c in terms.items():
            coeffs[n] += c
        return cls(tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Inverse of ``str``: accepts terms like ``3``, ``-t``, ``2*t^5``."""
        compact = text.replace(" ", "")
        if compact == "0":
            return cls()
        if not _POLY_RE.fullmatch(compact):
            raise ValueError(f"cannot parse polynomial {text!r}")
        terms: dict[int, int] = {}
        for sign, coef, var, power, bare, bare_power in _TERM_RE.findall(compact):
            c = int(coef) if coef else 1
            if bare:
                var, power = bare, bare_power
            n = (int(power) if power else 1) if var else 0
            terms[n] = terms.get(n, 0) + (-c if sign == "-" else c)
        return cls.from_terms(terms)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        if 0 <= n < len(self.coefficients):
            return self.coefficients[n]
        return 0

    def __iter__(self):
        return iter(self.coefficients)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(n * c for n, c in enumerate(self.coefficients) if n))

    def __str__(self):
        """Ascending powers, e.g. ``1 - 2*t + t^3``."""
        parts = []
        for n, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if n == 0:
                body = str(mag)
            else:
                power = "t" if n == 1 else f"t^{n}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts) if parts else "0"
