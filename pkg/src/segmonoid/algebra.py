"""Elements of the segment monoid and its primitive algebra.

A nonzero element is a triplet ``(k, d, m)`` of rationals relative to an
ambient size ``n >= 2``: a segment parallel to the main diagonal of the
square ``[1, n] x [1, n]`` whose rows run from ``k`` to ``m`` and whose
columns are shifted by ``d``.  The only other element is the zero.

All coordinates are :class:`fractions.Fraction`, so every equality test
(idempotence, order, Green's relations) is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

RationalLike = Union[int, Fraction, str]


class ValidationError(ValueError):
    """A triplet violates the defining inequalities for its ambient size.

    ``inequality`` names the bound that failed, e.g. ``"k <= m"``.
    """

    def __init__(self, message: str, inequality: str = ""):
        super().__init__(message)
        self.inequality = inequality


class AmbientError(ValueError):
    """Invalid ambient size, or operands living in different ambients."""


class DomainError(ValueError):
    """An operation was asked for a value outside its mathematical domain."""


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def check_ambient(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise AmbientError(f"ambient size must be an integer, got {n!r}")
    if n < 2:
        raise AmbientError(f"ambient size must be >= 2, got {n}")
    return n


def _violated(n: int, k: Fraction, d: Fraction, m: Fraction) -> Optional[str]:
    if k < 1 - min(0, d):
        return "1 - min(0, d) <= k"
    if k > m:
        return "k <= m"
    if m > n - max(0, d):
        return "m <= n - max(0, d)"
    return None


@dataclass(frozen=True)
class Element:
    """An element of the monoid with ambient size ``n``.

    Zero is represented with ``k = d = m = None``.  Instances are validated
    on construction, so every live Element satisfies the triplet bounds.
    Prefer :func:`make_element`, :func:`zero` and :func:`identity`.
    """

    n: int
    k: Optional[Fraction] = None
    d: Optional[Fraction] = None
    m: Optional[Fraction] = None

    def __post_init__(self):
        check_ambient(self.n)
        parts = (self.k, self.d, self.m)
        if all(p is None for p in parts):
            return
        if any(p is None for p in parts):
            raise ValidationError("triplet must have all of k, d, m set")
        if not all(isinstance(p, Fraction) for p in parts):
            raise TypeError("triplet coordinates must be Fractions")
        failed = _violated(self.n, self.k, self.d, self.m)
        if failed is not None:
            raise ValidationError(
                f"({self.k},{self.d},{self.m}) is not an element for n={self.n}: "
                f"violates {failed}",
                failed,
            )

    @property
    def is_zero(self) -> bool:
        return self.k is None

    @property
    def T(self) -> "Element":
        return inverse(self)

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, j: int) -> "Element":
        return power(self, j)

    def __str__(self) -> str:
        return format_element(self)

    def sort_key(self):
        if self.is_zero:
            return (0,)
        return (1, self.d, self.k, self.m)


def make_element(n: int, k: RationalLike, d: RationalLike, m: RationalLike) -> Element:
    """Build the triplet ``(k, d, m)`` of the monoid of size ``n``.

    Raises :class:`AmbientError` for ``n < 2`` and :class:`ValidationError`
    naming the violated inequality otherwise.  Nothing is ever clamped.
    """
    check_ambient(n)
    return Element(n, to_rational(k), to_rational(d), to_rational(m))


def zero(n: int) -> Element:
    return Element(check_ambient(n))


def identity(n: int) -> Element:
    check_ambient(n)
    return Element(n, Fraction(1), Fraction(0), Fraction(n))


def _same_ambient(x: Element, y: Element) -> int:
    if x.n != y.n:
        raise AmbientError(f"ambient mismatch: n={x.n} vs n={y.n}")
    return x.n


def multiply(x: Element, y: Element) -> Element:
    """Product of two elements; zero whenever the shifted segments miss."""
    n = _same_ambient(x, y)
    if x.is_zero or y.is_zero:
        return Element(n)
    k = max(x.k, y.k - x.d)
    m = min(x.m, y.m - x.d)
    if k > m:
        return Element(n)
    return Element(n, k, x.d + y.d, m)


def inverse(x: Element) -> Element:
    if x.is_zero:
        return x
    return Element(x.n, x.k + x.d, -x.d, x.m + x.d)


def range_of(x: Element) -> Element:
    """The idempotent ``x x^T``."""
    if x.is_zero:
        return x
    return Element(x.n, x.k, Fraction(0), x.m)


def domain_of(x: Element) -> Element:
    """The idempotent ``x^T x``."""
    if x.is_zero:
        return x
    return Element(x.n, x.k + x.d, Fraction(0), x.m + x.d)


def power(x: Element, j: int) -> Element:
    """``x`` multiplied by itself ``j`` times, in closed form.

    ``j = 0`` is refused rather than returning the identity.
    """
    if isinstance(j, bool) or not isinstance(j, int):
        raise TypeError("exponent must be an integer")
    if j < 1:
        raise DomainError(f"exponent must be >= 1, got {j}")
    if x.is_zero:
        return x
    k = x.k - (j - 1) * min(0, x.d)
    m = x.m - (j - 1) * max(0, x.d)
    if k > m:
        return Element(x.n)
    return Element(x.n, k, j * x.d, m)


def is_idempotent(x: Element) -> bool:
    return x.is_zero or x.d == 0


def is_point(x: Element) -> bool:
    return not x.is_zero and x.k == x.m


def height(x: Element) -> Fraction:
    """Vertical extent ``m - k`` of the segment; ``-1`` for zero."""
    if x.is_zero:
        return Fraction(-1)
    return x.m - x.k


def leq_natural(x: Element, y: Element) -> bool:
    """Natural partial order: same diagonal and segment containment.

    Zero is below everything, as given by ``x = x x^T y``.
    """
    _same_ambient(x, y)
    if x.is_zero:
        return True
    if y.is_zero:
        return False
    return x.d == y.d and x.k >= y.k and x.m <= y.m


def restricted_product(x: Element, y: Element) -> Optional[Element]:
    """Product in the underlying groupoid, or None where it is undefined.

    Defined exactly when ``domain_of(x) == range_of(y)``.
    """
    _same_ambient(x, y)
    if domain_of(x) != range_of(y):
        return None
    if x.is_zero:
        return x
    return Element(x.n, x.k, x.d + y.d, x.m)


def format_element(x: Element) -> str:
    """Canonical text: ``0`` or ``(k,d,m)`` with ``p/q`` in lowest terms."""
    if x.is_zero:
        return "0"
    return f"({x.k},{x.d},{x.m})"


def to_json(x: Element) -> dict:
    if x.is_zero:
        return {"zero": True}
    return {"k": str(x.k), "d": str(x.d), "m": str(x.m), "n": x.n}


def from_json(obj: dict, n: Optional[int] = None) -> Element:
    """Inverse of :func:`to_json`; ``n`` is required for the zero form."""
    if obj.get("zero"):
        if n is None:
            n = obj.get("n")
        if n is None:
            raise AmbientError("zero element needs an ambient size")
        return zero(n)
    if n is not None and obj.get("n", n) != n:
        raise AmbientError(f"ambient mismatch: n={obj['n']} vs n={n}")
    return make_element(obj.get("n", n), obj["k"], obj["d"], obj["m"])
