"""Rook-matrix ground truth for the integer submonoid.

Integer triplets are n x n partial permutation matrices whose ones sit on
one diagonal in an unbroken block.  Everything here that produces ground
truth (products, Green's relations) works on matrices only and never calls
the closed-form product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    DomainError,
    Element,
    check_ambient,
    domain_of,
    format_element,
    height,
    make_element,
    range_of,
    to_json,
)
from .structure import GreenRelation

MAX_ENUMERATION = 6
MAX_GREEN = 4


@dataclass(frozen=True)
class RookMatrix:
    """Square 0/1 matrix with at most one 1 per row and per column.

    ``rows`` is a tuple of row tuples; row and column ``i`` of the
    mathematical matrix are index ``i - 1`` here.
    """

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise ValueError("rook matrix must be square and nonempty")
        if any(v not in (0, 1) for r in rows for v in r):
            raise ValueError("rook matrix entries must be 0 or 1")
        if any(sum(r) > 1 for r in rows):
            raise ValueError("rook matrix has a row with more than one 1")
        if any(sum(col) > 1 for col in zip(*rows)):
            raise ValueError("rook matrix has a column with more than one 1")

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, size: int) -> "RookMatrix":
        return cls(tuple((0,) * size for _ in range(size)))

    @classmethod
    def from_ones(cls, size: int, ones) -> "RookMatrix":
        """Build from 1-based ``(row, col)`` positions."""
        grid = [[0] * size for _ in range(size)]
        for r, c in ones:
            grid[r - 1][c - 1] = 1
        return cls(tuple(map(tuple, grid)))

    def ones(self) -> List[Tuple[int, int]]:
        """1-based positions of the ones, sorted by row."""
        return [(i + 1, j + 1) for i, r in enumerate(self.rows) for j, v in enumerate(r) if v]

    def transpose(self) -> "RookMatrix":
        return RookMatrix(tuple(zip(*self.rows)))

    def __matmul__(self, other: "RookMatrix") -> "RookMatrix":
        return matrix_multiply(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)


def matrix_multiply(a: RookMatrix, b: RookMatrix) -> RookMatrix:
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")
    cols = list(zip(*b.rows))
    return RookMatrix(tuple(tuple(sum(p * q for p, q in zip(row, col)) for col in cols) for row in a.rows))


def _require_integer(x: Element) -> None:
    if not x.is_zero and any(v.denominator != 1 for v in (x.k, x.d, x.m)):
        raise DomainError(f"{x} has non-integer coordinates; no rook matrix exists")


def to_matrix(x: Element) -> RookMatrix:
    """Ones at ``(i, i + d)`` for every integer row ``i`` in ``[k, m]``."""
    _require_integer(x)
    if x.is_zero:
        return RookMatrix.zeros(x.n)
    k, d, m = int(x.k), int(x.d), int(x.m)
    return RookMatrix.from_ones(x.n, [(i, i + d) for i in range(k, m + 1)])


def from_matrix(a: RookMatrix) -> Optional[Element]:
    """Triplet of a rook matrix, or None if it lies outside the submonoid."""
    n = a.size
    check_ambient(n)
    ones = a.ones()
    if not ones:
        return Element(n)
    diagonals = {c - r for r, c in ones}
    if len(diagonals) != 1:
        return None
    rows = [r for r, _ in ones]
    if rows != list(range(rows[0], rows[-1] + 1)):
        return None
    return make_element(n, rows[0], diagonals.pop(), rows[-1])


def rnk(x: Element) -> int:
    """Rank of the partial transformation, ``h(x) + 1``; integer elements only."""
    _require_integer(x)
    return int(height(x)) + 1


def enumerate_integer_monoid(n: int) -> List[Element]:
    """Zero followed by every integer triplet, ordered by ``(d, k, m)``."""
    check_ambient(n)
    if n > MAX_ENUMERATION:
        raise ValueError(f"enumeration is capped at n <= {MAX_ENUMERATION}, got {n}")
    out = [Element(n)]
    for d in range(-(n - 1), n):
        lo, hi = 1 - min(0, d), n - max(0, d)
        for k in range(lo, hi + 1):
            for m in range(k, hi + 1):
                out.append(Element(n, Fraction(k), Fraction(d), Fraction(m)))
    return out


def integer_monoid_size(n: int) -> int:
    """Closed count ``1 + sum_d (n-|d|)(n-|d|+1)/2``."""
    return 1 + sum((n - abs(d)) * (n - abs(d) + 1) // 2 for d in range(-(n - 1), n))


@dataclass(frozen=True)
class GreenTable:
    """Brute-force relation table over the enumerated integer monoid."""

    rel: GreenRelation
    n: int
    elements: Tuple[Element, ...]
    table: Tuple[Tuple[bool, ...], ...]

    def index(self, x: Element) -> int:
        return self.elements.index(x)

    def related(self, x: Element, y: Element) -> bool:
        return self.table[self.index(x)][self.index(y)]

    def classes(self) -> List[List[Element]]:
        seen = set()
        out = []
        for i, x in enumerate(self.elements):
            if i in seen:
                continue
            cls = [j for j, r in enumerate(self.table[i]) if r]
            seen.update(cls)
            out.append([self.elements[j] for j in cls])
        return out


@lru_cache(maxsize=None)
def _principal_ideals(n: int):
    elements = tuple(enumerate_integer_monoid(n))
    mats = [to_matrix(x) for x in elements]
    # the monoid has an identity, so S^1 = S
    right = [frozenset(a @ b for b in mats) for a in mats]
    left = [frozenset(b @ a for b in mats) for a in mats]
    two = [frozenset(c @ a @ b for b in mats for c in mats) for a in mats]
    return elements, right, left, two


@lru_cache(maxsize=None)
def definitional_green(rel: GreenRelation, n: int) -> GreenTable:
    """Green's relation ``rel`` on the integer monoid from first principles.

    R, L and J compare right, left and two-sided principal ideals computed
    by matrix multiplication; H is R and L together; D is the composite of
    R followed by L.
    """
    check_ambient(n)
    if n > MAX_GREEN:
        raise ValueError(f"definitional Green tables are capped at n <= {MAX_GREEN}, got {n}")
    elements, right, left, two = _principal_ideals(n)
    size = len(elements)
    r = [[right[i] == right[j] for j in range(size)] for i in range(size)]
    lt = [[left[i] == left[j] for j in range(size)] for i in range(size)]
    if rel is GreenRelation.R:
        t = r
    elif rel is GreenRelation.L:
        t = lt
    elif rel is GreenRelation.H:
        t = [[r[i][j] and lt[i][j] for j in range(size)] for i in range(size)]
    elif rel is GreenRelation.D:
        t = [[any(r[i][z] and lt[z][j] for z in range(size)) for j in range(size)] for i in range(size)]
    else:
        t = [[two[i] == two[j] for j in range(size)] for i in range(size)]
    return GreenTable(rel, n, elements, tuple(tuple(row) for row in t))


def integer_inverses(x: Element, elements: Sequence[Element]) -> List[Element]:
    """Every ``y`` in ``elements`` with ``xyx = x`` and ``yxy = y``, via matrices."""
    a = to_matrix(x)
    out = []
    for y in elements:
        b = to_matrix(y)
        if a @ b @ a == a and b @ a @ b == b:
            out.append(y)
    return out


def enumeration_json(n: int) -> Dict:
    return {
        "n": n,
        "size": integer_monoid_size(n),
        "elements": [
            {**to_json(x), "text": format_element(x), "height": str(height(x)), "matrix": [list(r) for r in to_matrix(x).rows]}
            for x in enumerate_integer_monoid(n)
        ],
    }


def eggbox_dot(n: int) -> str:
    """Egg-box diagrams of the integer monoid as a DOT graph.

    One cluster per D-class (that is, per height).  Inside a cluster each
    R-class is a ``rank=same`` row and L-classes line up as columns, held
    in place by invisible edges.
    """
    elements = enumerate_integer_monoid(n)
    by_height: Dict[Fraction, List[Element]] = {}
    for x in elements:
        by_height.setdefault(height(x), []).append(x)

    def node(x):
        return "e" + format_element(x).translate(str.maketrans("(),/-", "__x_m"))

    lines = [f'digraph eggbox_n{n} {{', "  node [shape=box];"]
    for h in sorted(by_height):
        members = by_height[h]
        rows = sorted({range_of(x) for x in members}, key=Element.sort_key)
        cols = sorted({domain_of(x) for x in members}, key=Element.sort_key)
        cell = {(range_of(x), domain_of(x)): x for x in members}
        lines.append(f'  subgraph "cluster_h{h}" {{')
        lines.append(f'    label="D-class h={h}";')
        for x in members:
            lines.append(f'    {node(x)} [label="{format_element(x)}"];')
        for r in rows:
            row = [cell[(r, c)] for c in cols if (r, c) in cell]
            lines.append("    { rank=same; " + " ".join(node(x) for x in row) + " }")
        for c in cols:
            col = [cell[(r, c)] for r in rows if (r, c) in cell]
            for a, b in zip(col, col[1:]):
                lines.append(f"    {node(a)} -> {node(b)} [style=invis];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
