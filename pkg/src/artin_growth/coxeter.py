"""Coxeter matrices, their graphs, and finite-type recognition.

Vertices are numbered 1..l.  Subsets of vertices are plain ``int`` bitmasks
in which bit ``i - 1`` stands for vertex ``i``.  Two vertices are adjacent in
the Coxeter graph iff their matrix entry is at least 3.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import NotFiniteType

INFINITY = math.inf

FAMILIES = ("A", "B", "D", "E", "F", "H", "I2")


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of braid-relation lengths.

    ``entries`` is stored 0-based; use :meth:`m` for the 1-based accessor.
    """

    entries: tuple[tuple[int, ...], ...]
    neighbors: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        l = len(rows)
        if l == 0:
            raise ValueError("a Coxeter matrix needs rank >= 1")
        for i, row in enumerate(rows):
            if len(row) != l:
                raise ValueError(f"row {i + 1} has length {len(row)}, expected {l}")
            for j, m in enumerate(row):
                if m == INFINITY:
                    raise ValueError(f"m({i + 1},{j + 1}) is infinite; only finite entries are supported")
                if isinstance(m, bool) or not isinstance(m, int):
                    raise ValueError(f"m({i + 1},{j + 1}) = {m!r} is not an integer")
                if i == j and m != 1:
                    raise ValueError(f"diagonal entry m({i + 1},{i + 1}) must be 1, got {m}")
                if i != j and m < 2:
                    raise ValueError(f"off-diagonal entry m({i + 1},{j + 1}) must be >= 2, got {m}")
                if rows[j][i] != m:
                    raise ValueError(f"matrix is not symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "entries", rows)
        nbrs = tuple(
            sum(1 << j for j in range(l) if j != i and rows[i][j] >= 3) for i in range(l)
        )
        object.__setattr__(self, "neighbors", nbrs)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def full_mask(self) -> int:
        return (1 << self.rank) - 1

    def m(self, alpha: int, beta: int) -> int:
        return self.entries[alpha - 1][beta - 1]

    def edges(self, mask: int | None = None) -> Iterator[tuple[int, int, int]]:
        """Yield ``(alpha, beta, m)`` with alpha < beta for graph edges inside ``mask``."""
        verts = vertices_of(self.full_mask if mask is None else mask)
        for i, a in enumerate(verts):
            for b in verts[i + 1:]:
                m = self.m(a, b)
                if m >= 3:
                    yield a, b, m

    def restrict(self, mask: int) -> "CoxeterMatrix":
        """Submatrix on the vertices of ``mask``, renumbered 1..#mask in order."""
        verts = vertices_of(mask)
        return CoxeterMatrix(tuple(tuple(self.m(a, b) for b in verts) for a in verts))

    def to_text(self) -> str:
        lines = [f"rank {self.rank}"]
        lines += [f"{a} {b} {m}" for a, b, m in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edges(cls, rank: int, edges: Iterable[tuple[int, int, int]]) -> "CoxeterMatrix":
        rows = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for a, b, m in edges:
            if not (1 <= a <= rank and 1 <= b <= rank) or a == b:
                raise ValueError(f"bad edge ({a}, {b})")
            rows[a - 1][b - 1] = rows[b - 1][a - 1] = m
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_text(cls, text: str) -> "CoxeterMatrix":
        """Parse the ``rank l`` / ``alpha beta m`` matrix file format.

        Blank lines and ``#`` comments are ignored; unlisted pairs default to 2.
        """
        rank = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if rank is None:
                if len(parts) != 2 or parts[0] != "rank" or not parts[1].isdigit():
                    raise ValueError(f"line {lineno}: expected 'rank <l>', got {raw!r}")
                rank = int(parts[1])
                continue
            if len(parts) != 3 or not all(p.isdigit() for p in parts):
                raise ValueError(f"line {lineno}: expected '<alpha> <beta> <m>', got {raw!r}")
            edges.append(tuple(int(p) for p in parts))
        if rank is None:
            raise ValueError("missing 'rank <l>' header")
        return cls.from_edges(rank, edges)


def direct_sum(*matrices: CoxeterMatrix) -> CoxeterMatrix:
    """Block-diagonal matrix; vertices of later blocks are shifted past earlier ones."""
    if not matrices:
        raise ValueError("direct_sum needs at least one matrix")
    total = sum(m.rank for m in matrices)
    rows = [[1 if i == j else 2 for j in range(total)] for i in range(total)]
    offset = 0
    for mat in matrices:
        for i in range(mat.rank):
            for j in range(mat.rank):
                rows[offset + i][offset + j] = mat.entries[i][j]
        offset += mat.rank
    return CoxeterMatrix(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# irreducible types
# ---------------------------------------------------------------------------

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "H": lambda n: 3 <= n <= 4,
}

_TAG_RE = re.compile(r"^(?:([ABDEFH])(\d+)|I2\((\d+)\))$")


@dataclass(frozen=True, order=True)
class IrreducibleType:
    family: str
    rank: int
    p: int | None = None

    def __post_init__(self):
        if self.family == "I2":
            if self.rank != 2 or self.p is None or self.p < 5:
                raise ValueError(f"I2 needs rank 2 and p >= 5, got rank={self.rank}, p={self.p}")
        elif self.family in _RANK_OK:
            if self.p is not None or not _RANK_OK[self.family](self.rank):
                raise ValueError(f"invalid rank {self.rank} for family {self.family}")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @classmethod
    def of(cls, family: str, rank_or_p: int) -> "IrreducibleType":
        if family == "I2":
            return cls("I2", 2, rank_or_p)
        return cls(family, rank_or_p)

    @classmethod
    def parse(cls, text: str) -> "IrreducibleType":
        match = _TAG_RE.match(text.strip())
        if not match:
            raise ValueError(f"cannot parse type {text!r}")
        if match.group(3) is not None:
            return cls("I2", 2, int(match.group(3)))
        return cls(match.group(1), int(match.group(2)))

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.p})"
        return f"{self.family}{self.rank}"

    def matrix(self) -> CoxeterMatrix:
        return make_named(self.family, self.p if self.family == "I2" else self.rank)


def _a_entry(a: int, b: int, l: int) -> int:
    if a == b:
        return 1
    if abs(a - b) == 1:
        return 3
    return 2


def _b_entry(a: int, b: int, l: int) -> int:
    # label 4 sits on the edge {1, 2}
    if a == b:
        return 1
    if a + b == 3:
        return 4
    if abs(a - b) == 1:
        return 3
    return 2


def _d_entry(a: int, b: int, l: int) -> int:
    # path 1..l-1 plus the edge {l-2, l}; l-1 and l are the forked leaves
    if a == b:
        return 1
    if a + b == 2 * l - 1:
        return 2
    if abs(a - b) == 1 and a + b < 2 * l - 1:
        return 3
    if a + b == 2 * l - 2:
        return 3
    return 2


_EXCEPTIONAL_EDGES = {
    ("E", 6): [(1, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (2, 4, 3)],
    ("E", 7): [(1, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (2, 4, 3)],
    ("E", 8): [(1, 3, 3), (3, 4, 3), (4, 5, 3), (5, 6, 3), (6, 7, 3), (7, 8, 3), (2, 4, 3)],
    ("F", 4): [(1, 2, 3), (2, 3, 4), (3, 4, 3)],
    ("H", 3): [(1, 2, 5), (2, 3, 3)],
    ("H", 4): [(1, 2, 5), (2, 3, 3), (3, 4, 3)],
}


def make_named(family: str, rank_or_p: int) -> CoxeterMatrix:
    """Build the Coxeter matrix of a named irreducible type.

    ``rank_or_p`` is the rank, except for ``"I2"`` where it is the edge label p.
    A, B and D follow the numbering used throughout this package: B has its
    4-edge on {1, 2}; D branches at vertex l-2 with leaves l-1 and l.
    """
    tag = IrreducibleType.of(family, rank_or_p)  # validates
    if family == "I2":
        return CoxeterMatrix.from_edges(2, [(1, 2, tag.p)])
    if family in ("A", "B", "D"):
        entry = {"A": _a_entry, "B": _b_entry, "D": _d_entry}[family]
        l = rank_or_p
        return CoxeterMatrix(
            tuple(tuple(entry(a, b, l) for b in range(1, l + 1)) for a in range(1, l + 1))
        )
    return CoxeterMatrix.from_edges(rank_or_p, _EXCEPTIONAL_EDGES[family, rank_or_p])


# ---------------------------------------------------------------------------
# component decomposition and classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubsetSelection:
    """A vertex subset together with its connected components.

    ``components`` are bitmasks ordered by their smallest vertex.
    """

    parent: CoxeterMatrix = field(repr=False)
    mask: int
    components: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def component_vertices(self) -> list[tuple[int, ...]]:
        return [vertices_of(c) for c in self.components]


def component_masks(neighbors: Sequence[int], mask: int) -> list[int]:
    """Connected components of the induced graph, lowest vertex first."""
    comps = []
    remaining = mask
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = neighbors[bit.bit_length() - 1] & remaining & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        remaining &= ~comp
    return comps


def decompose(M: CoxeterMatrix, mask: int) -> SubsetSelection:
    if mask < 0 or mask & ~M.full_mask:
        raise ValueError(f"mask {mask:#x} is not a subset of 1..{M.rank}")
    return SubsetSelection(M, mask, tuple(component_masks(M.neighbors, mask)))


def _walk(adj: dict[int, list[int]], start: int, prev: int) -> list[int]:
    """Follow a chain from ``start`` away from ``prev`` until a leaf."""
    path = [start]
    while True:
        nxt = [v for v in adj[path[-1]] if v != prev]
        if len(nxt) != 1:
            return path
        prev = path[-1]
        path.append(nxt[0])


def classify(M: CoxeterMatrix, component: int) -> IrreducibleType:
    """Recognise a connected vertex set as an irreducible finite type.

    Raises :class:`NotFiniteType` when the induced graph is outside the
    catalogue, and ``ValueError`` when ``component`` is empty or disconnected.
    """
    verts = vertices_of(component)
    n = len(verts)
    if n == 0:
        raise ValueError("cannot classify an empty vertex set")
    if len(component_masks(M.neighbors, component)) != 1:
        raise ValueError(f"vertex set {set(verts)} is not connected")
    edges = list(M.edges(component))

    def fail(reason):
        raise NotFiniteType(verts, reason)

    if len(edges) != n - 1:
        fail("graph contains a cycle")
    if n == 1:
        return IrreducibleType("A", 1)
    if n == 2:
        m = edges[0][2]
        if m == 3:
            return IrreducibleType("A", 2)
        if m == 4:
            return IrreducibleType("B", 2)
        return IrreducibleType("I2", 2, m)

    adj: dict[int, list[int]] = {v: [] for v in verts}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    degree = {v: len(adj[v]) for v in verts}
    high = [(a, b, m) for a, b, m in edges if m >= 4]
    if max(degree.values()) >= 4:
        fail("vertex of degree >= 4")
    branches = [v for v in verts if degree[v] == 3]

    if branches:
        if len(branches) > 1:
            fail("more than one branch vertex")
        if high:
            fail("branched graph with an edge label >= 4")
        center = branches[0]
        legs = sorted(len(_walk(adj, v, center)) for v in adj[center])
        if legs[0] == 1 and legs[1] == 1:
            return IrreducibleType("D", n)
        if legs[:2] == [1, 2] and legs[2] in (2, 3, 4):
            return IrreducibleType("E", n)
        fail(f"branch legs {tuple(legs)} match no catalogue entry")

    if not high:
        return IrreducibleType("A", n)
    if len(high) > 1:
        fail("more than one edge label >= 4")
    a, b, m = high[0]
    terminal = degree[a] == 1 or degree[b] == 1
    if m == 4:
        if terminal:
            return IrreducibleType("B", n)
        if n == 4:
            return IrreducibleType("F", 4)
        fail("interior 4-edge on a path longer than 4")
    if m == 5 and terminal and n in (3, 4):
        return IrreducibleType("H", n)
    fail(f"edge label {m} on a path of {n} vertices")


def validate_finite_type(M: CoxeterMatrix) -> list[IrreducibleType]:
    """Classify every connected component of the whole graph, in vertex order."""
    return [classify(M, c) for c in component_masks(M.neighbors, M.full_mask)]
