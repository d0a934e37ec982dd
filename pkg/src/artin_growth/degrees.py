"""Degrees of fundamental elements.

``deg_delta`` sums per-component table values; ``count_positive_roots`` is an
independent floating-point check of that table via reflection closure in the
geometric representation.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .coxeter import CoxeterMatrix, IrreducibleType, classify, component_masks
from .errors import ClosureExceededCap, NumericalAmbiguity

_EXCEPTIONAL_DEGREES = {
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("H", 3): 15,
    ("H", 4): 60,
}


def fundamental_degree(tag: IrreducibleType) -> int:
    """Length of the fundamental element of an irreducible type (its number of positive roots)."""
    n = tag.rank
    if tag.family == "A":
        return n * (n + 1) // 2
    if tag.family == "B":
        return n * n
    if tag.family == "D":
        return n * (n - 1)
    if tag.family == "I2":
        return tag.p
    return _EXCEPTIONAL_DEGREES[tag.family, n]


def deg_delta(M: CoxeterMatrix, mask: int) -> int:
    """Degree of the fundamental element of the parabolic submonoid on ``mask``.

    The fundamental element of a disconnected subset is the commuting product
    of the components' fundamental elements, so degrees add.
    """
    return sum(fundamental_degree(classify(M, c)) for c in component_masks(M.neighbors, mask))


def bilinear_form(M: CoxeterMatrix) -> np.ndarray:
    m = np.array(M.entries, dtype=float)
    return -np.cos(np.pi / m)


def count_positive_roots(
    M: CoxeterMatrix,
    cap: int = 100_000,
    eps: float = 1e-6,
    decimals: int = 9,
) -> int:
    """Count positive roots by closing the simple roots under simple reflections.

    Roots are deduplicated on coordinates rounded to ``decimals`` places.
    Raises :class:`ClosureExceededCap` once more than ``cap`` roots appear,
    which happens for every infinite Coxeter group.  Raises
    :class:`NumericalAmbiguity` if two distinct keys lie within ``eps`` of each
    other or a root is neither positive nor negative up to ``eps``.
    """
    l = M.rank
    form = bilinear_form(M)

    def key(v):
        return tuple(float(x) + 0.0 for x in np.round(v, decimals))

    roots: dict[tuple, np.ndarray] = {}
    queue: deque[np.ndarray] = deque()
    for i in range(l):
        e = np.zeros(l)
        e[i] = 1.0
        roots[key(e)] = e
        queue.append(e)

    while queue:
        v = queue.popleft()
        pairings = form @ v
        for i in range(l):
            if abs(pairings[i]) < eps:
                continue
            w = v.copy()
            w[i] -= 2.0 * pairings[i]
            k = key(w)
            if k not in roots:
                roots[k] = w
                if len(roots) > cap:
                    raise ClosureExceededCap(cap)
                queue.append(w)

    vecs = np.array(list(roots.values()))
    positive = np.all(vecs >= -eps, axis=1)
    negative = np.all(vecs <= eps, axis=1)
    if np.any(~(positive | negative)):
        raise NumericalAmbiguity("a root has coordinates of both signs beyond eps")
    diffs = np.abs(vecs[:, None, :] - vecs[None, :, :]).max(axis=2)
    np.fill_diagonal(diffs, np.inf)
    if diffs.min() < eps:
        raise NumericalAmbiguity("two deduplicated roots agree to within eps")
    n_pos = int(positive.sum())
    if 2 * n_pos != len(roots):
        raise NumericalAmbiguity(f"{n_pos} positive roots out of {len(roots)} total")
    return n_pos
