"""Seeded random elements with small-denominator rational coordinates.

Coordinates are drawn from bounded numerators and denominators and the
triplet is redrawn until it satisfies the bounds; nothing is clamped.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional

from .algebra import Element, ValidationError, check_ambient

DENOMINATORS = (1, 1, 2, 2, 3, 4, 6, 8)


def random_rational(rng: random.Random, lo, hi, denominators=DENOMINATORS) -> Fraction:
    """Uniform over the multiples of ``1/q`` in ``[lo, hi]`` for a random ``q``."""
    q = rng.choice(denominators)
    a = math.ceil(Fraction(lo) * q)
    b = math.floor(Fraction(hi) * q)
    return Fraction(rng.randint(a, b), q)


def random_element(
    rng: random.Random,
    n: int,
    zero_prob: float = 0.05,
    idempotent_prob: float = 0.15,
    point_prob: float = 0.1,
    max_tries: int = 1000,
) -> Element:
    """Draw an element of the monoid of size ``n``.

    A share of draws is forced to zero, to an idempotent or to a point so
    that laws conditioned on those cases are exercised.
    """
    check_ambient(n)
    u = rng.random()
    if u < zero_prob:
        return Element(n)
    want_idem = u < zero_prob + idempotent_prob
    want_point = not want_idem and u < zero_prob + idempotent_prob + point_prob
    for _ in range(max_tries):
        d = Fraction(0) if want_idem else random_rational(rng, -(n - 1), n - 1)
        k = random_rational(rng, 1, n)
        m = k if want_point else random_rational(rng, 1, n)
        try:
            return Element(n, k, d, m)
        except ValidationError:
            continue
    raise RuntimeError("rejection sampling did not produce a valid element")


def random_nonzero(rng: random.Random, n: int, **kw) -> Element:
    kw["zero_prob"] = 0.0
    return random_element(rng, n, **kw)


def random_nilpotent(rng: random.Random, n: int, min_abs_d: Optional[Fraction] = None) -> Element:
    """A nonzero element with ``d != 0``."""
    while True:
        x = random_element(rng, n, zero_prob=0.0, idempotent_prob=0.0)
        if x.d != 0 and (min_abs_d is None or abs(x.d) >= min_abs_d):
            return x
