"""Structural theory of the segment monoid in closed form.

Nilpotent indices, roots, Green's relations, ideals, the factorization
``y = z x w``, the Brandt subsemigroup of points, the affine isomorphism
between ambient sizes, the 0-morphism into the circle group and the
witness family for infinite Sierpinski rank.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .algebra import (
    AmbientError,
    DomainError,
    Element,
    RationalLike,
    ValidationError,
    check_ambient,
    height,
    is_idempotent,
    make_element,
    to_rational,
)


class GreenRelation(enum.Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"
    J = "J"

    @classmethod
    def parse(cls, text: str) -> "GreenRelation":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown Green relation {text!r}; expected one of R, L, H, D, J") from None


@dataclass(frozen=True)
class Ideal:
    """Two-sided ideal of all elements with height ``<= bound`` (closed)
    or ``< bound`` (open).

    Closed ideals are the principal ones; open ideals are not principal.
    """

    n: int
    bound: Fraction
    closed: bool = True

    def __post_init__(self):
        check_ambient(self.n)
        if not isinstance(self.bound, Fraction):
            object.__setattr__(self, "bound", to_rational(self.bound))
        mu = self.bound
        if self.closed:
            if not (mu == -1 or 0 <= mu <= self.n - 1):
                raise ValidationError(f"closed ideal bound must be -1 or in [0, {self.n - 1}], got {mu}", "mu")
        elif not 0 < mu <= self.n - 1:
            raise ValidationError(f"open ideal bound must be in (0, {self.n - 1}], got {mu}", "mu")

    def __contains__(self, x: Element) -> bool:
        return ideal_contains(self, x)

    def __str__(self) -> str:
        return f"{'I' if self.closed else 'K'}({self.bound})"


def parse_ideal(text: str, n: int) -> Ideal:
    """Parse ``I(mu)`` or ``K(mu)``."""
    s = "".join(text.split())
    if len(s) < 4 or s[0] not in "IK" or s[1] != "(" or s[-1] != ")":
        raise ValueError(f"malformed ideal literal {text!r}")
    return Ideal(n, to_rational(s[2:-1]), closed=s[0] == "I")


@dataclass(frozen=True)
class CircleImage:
    """Image in the circle group with zero.

    ``angle`` is the exact exponent ``theta`` of ``exp(i theta)``; ``None``
    stands for the zero of the group with zero.
    """

    angle: Optional[Fraction] = None

    @property
    def is_zero(self) -> bool:
        return self.angle is None

    def __mul__(self, other: "CircleImage") -> "CircleImage":
        # angles of nonzero images stay in [-2, 2], well inside (-pi, pi]
        if self.is_zero or other.is_zero:
            return CircleImage()
        return CircleImage(self.angle + other.angle)

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        return complex(math.cos(self.angle), math.sin(self.angle))

    def __str__(self) -> str:
        return "0" if self.is_zero else f"exp(i*{self.angle})"


def nilpotent_index(x: Element) -> Optional[int]:
    """Least ``j`` with ``x**j`` zero; None for zero and idempotents."""
    if is_idempotent(x):
        return None
    return 2 + math.floor(height(x) / abs(x.d))


def jth_root(x: Element, j: int) -> Element:
    """The unique ``y`` with ``y**j == x``.  Zero has many roots and is refused."""
    if isinstance(j, bool) or not isinstance(j, int) or j < 1:
        raise DomainError(f"root order must be a positive integer, got {j!r}")
    if x.is_zero:
        raise DomainError("the zero element has no unique root")
    d = x.d / j
    return Element(x.n, x.k + (j - 1) * min(0, d), d, x.m + (j - 1) * max(0, d))


def green_related(rel: GreenRelation, x: Element, y: Element) -> bool:
    if x.n != y.n:
        raise AmbientError(f"ambient mismatch: n={x.n} vs n={y.n}")
    if x.is_zero or y.is_zero:
        return x.is_zero and y.is_zero
    if rel is GreenRelation.R:
        return x.k == y.k and x.m == y.m
    if rel is GreenRelation.L:
        return x.k + x.d == y.k + y.d and x.m + x.d == y.m + y.d
    if rel is GreenRelation.H:
        return x == y
    return height(x) == height(y)


def d_class_witness(x: Element, y: Element) -> Optional[Element]:
    """An element ``z`` with ``domain_of(z) == domain_of(x)`` and
    ``range_of(z) == range_of(y)``, or None when the heights differ.

    ``z`` rows span those of ``y`` and its columns span those of ``x``.
    """
    if x.n != y.n:
        raise AmbientError(f"ambient mismatch: n={x.n} vs n={y.n}")
    if x.is_zero or y.is_zero:
        raise DomainError("d_class_witness needs nonzero elements")
    if height(x) != height(y):
        return None
    return Element(x.n, y.k, x.k + x.d - y.k, y.m)


def ideal_contains(ideal: Ideal, x: Element) -> bool:
    if ideal.n != x.n:
        raise AmbientError(f"ambient mismatch: n={ideal.n} vs n={x.n}")
    h = height(x)
    return h <= ideal.bound if ideal.closed else h < ideal.bound


def principal_ideal_of(x: Element) -> Ideal:
    return Ideal(x.n, height(x), closed=True)


def element_of_height(n: int, h: RationalLike) -> Element:
    """Idempotent ``(1, 0, 1 + h)`` of height ``h``, or zero for ``h = -1``."""
    h = to_rational(h)
    if h == -1:
        return Element(check_ambient(n))
    return make_element(n, 1, 0, 1 + h)


def factor_through(y: Element, x: Element) -> Optional[Tuple[Element, Element]]:
    """Find ``(z, w)`` with ``z * x * w == y``; None iff ``h(y) > h(x)``.

    For nonzero ``x`` and ``y``, ``z`` carries the rows of ``y`` onto the
    rows of ``x`` and ``w`` carries the matching columns of ``x`` onto the
    columns of ``y``.  When ``y`` is a point both factors are points.
    """
    if x.n != y.n:
        raise AmbientError(f"ambient mismatch: n={x.n} vs n={y.n}")
    if height(y) > height(x):
        return None
    if x.is_zero or y.is_zero:
        return Element(x.n), Element(x.n)
    z = Element(x.n, y.k, x.k - y.k, y.m)
    start = x.k + x.d
    w = Element(x.n, start, y.k + y.d - start, start + y.m - y.k)
    return z, w


def in_brandt(x: Element) -> bool:
    """Membership in the Brandt subsemigroup: zero or a point."""
    return x.is_zero or x.k == x.m


def iso_map(x: Element, q: int) -> Element:
    """Affine isomorphism onto the monoid of ambient size ``q``."""
    check_ambient(q)
    if x.is_zero:
        return Element(q)
    s = Fraction(q - 1, x.n - 1)
    return Element(q, 1 + s * (x.k - 1), s * x.d, 1 + s * (x.m - 1))


def circle_morphism(x: Element) -> CircleImage:
    if x.is_zero:
        return CircleImage()
    return CircleImage(x.d / (x.n - 1))


def sierpinski_element(n: int, i: int) -> Element:
    """``(1, 2**-i, n - 2**-i)``; heights increase towards ``n - 1``."""
    check_ambient(n)
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise DomainError(f"index must be a positive integer, got {i!r}")
    eps = Fraction(1, 2**i)
    return Element(n, Fraction(1), eps, n - eps)
