"""Seeded property suite run by ``segmonoid check``.

Every group draws its own reproducible sample from ``seed`` and compares
closed forms against products computed by ``mul``.  Passing a corrupted
``mul`` is how the exit-code contract of ``check`` is exercised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from . import algebra as alg
from . import rook
from . import structure as st
from .algebra import Element
from .sampling import random_element, random_nilpotent, random_nonzero, random_rational

Multiply = Callable[[Element, Element], Element]


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    example: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.cases > 0

    def record(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.example is None:
                self.example = detail

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" first failure: {self.example}" if self.example else ""
        return f"{status} {self.name} ({self.cases - self.failures}/{self.cases}){tail}"


def faulty_multiply(x: Element, y: Element) -> Element:
    """Deliberately wrong product (drops the shift on the right bound)."""
    if x.is_zero or y.is_zero:
        return Element(x.n)
    k = max(x.k, y.k - x.d)
    m = min(x.m, y.m)
    if k > m:
        return Element(x.n)
    return Element(x.n, k, x.d + y.d, m)


def _fold(mul: Multiply, x: Element, j: int) -> Element:
    acc = x
    for _ in range(j - 1):
        acc = mul(acc, x)
    return acc


def _run(result: CheckResult, body: Callable[[], bool], detail: Callable[[], str]) -> None:
    try:
        ok = body()
    except Exception as exc:  # a broken build may raise anywhere
        result.record(False, f"{detail()} raised {type(exc).__name__}: {exc}")
        return
    result.record(ok, detail())


def run_checks(n: int, samples: int = 500, seed: int = 0, mul: Multiply = alg.multiply) -> List[CheckResult]:
    alg.check_ambient(n)
    results = []

    def group(name):
        res = CheckResult(name)
        results.append(res)
        return res, random.Random(f"{seed}:{name}")

    res, rng = group("associativity")
    for _ in range(samples):
        x, y, z = (random_element(rng, n) for _ in range(3))
        _run(res, lambda: mul(mul(x, y), z) == mul(x, mul(y, z)), lambda: f"x={x} y={y} z={z}")

    res, rng = group("inverse laws")
    for _ in range(samples):
        x = random_element(rng, n)
        _run(res, lambda: mul(mul(x, x.T), x) == x and mul(mul(x.T, x), x.T) == x.T, lambda: f"x={x}")

    res, rng = group("involution")
    for _ in range(samples):
        x, y = random_element(rng, n), random_element(rng, n)
        _run(res, lambda: x.T.T == x and mul(x, y).T == mul(y.T, x.T), lambda: f"x={x} y={y}")

    res, rng = group("range and domain")
    for _ in range(samples):
        x = random_element(rng, n)
        _run(
            res,
            lambda: mul(x, x.T) == alg.range_of(x) and mul(x.T, x) == alg.domain_of(x),
            lambda: f"x={x}",
        )

    res, rng = group("idempotents commute")
    for _ in range(samples):
        e, f = alg.range_of(random_element(rng, n)), alg.domain_of(random_element(rng, n))
        _run(res, lambda: mul(e, f) == mul(f, e), lambda: f"e={e} f={f}")

    res, rng = group("powers")
    for _ in range(samples):
        x, j = random_element(rng, n), rng.randint(1, 20)
        _run(res, lambda: alg.power(x, j) == _fold(mul, x, j), lambda: f"x={x} j={j}")

    res, rng = group("nilpotent index")
    for _ in range(samples):
        x = random_nilpotent(rng, n, min_abs_d=Fraction(1, 16))

        def body():
            i = st.nilpotent_index(x)
            return _fold(mul, x, i).is_zero and not _fold(mul, x, i - 1).is_zero

        _run(res, body, lambda: f"x={x}")

    res, rng = group("roots")
    for _ in range(samples):
        x, j = random_nonzero(rng, n), rng.randint(1, 10)
        _run(res, lambda: _fold(mul, st.jth_root(x, j), j) == x, lambda: f"x={x} j={j}")

    res, rng = group("Green D witness")
    for _ in range(samples):
        x = random_nonzero(rng, n)
        y = random_nonzero(rng, n) if rng.random() < 0.5 else alg.inverse(x)

        def body():
            z = st.d_class_witness(x, y)
            if z is None:
                return alg.height(x) != alg.height(y)
            return mul(z.T, z) == mul(x.T, x) and mul(z, z.T) == mul(y, y.T)

        _run(res, body, lambda: f"x={x} y={y}")

    res, rng = group("factorization")
    for _ in range(samples):
        x, y = random_element(rng, n), random_element(rng, n)

        def body():
            found = st.factor_through(y, x)
            if found is None:
                return alg.height(y) > alg.height(x)
            z, w = found
            return mul(mul(z, x), w) == y

        _run(res, body, lambda: f"y={y} x={x}")

    res, rng = group("ideal closure")
    for _ in range(samples):
        a, x, b = (random_element(rng, n) for _ in range(3))
        closed = rng.random() < 0.5
        mu = random_rational(rng, 0, n - 1)
        if not closed and mu == 0:
            mu = Fraction(n - 1)
        ideal = st.Ideal(n, mu, closed)
        _run(
            res,
            lambda: not st.ideal_contains(ideal, x) or st.ideal_contains(ideal, mul(mul(a, x), b)),
            lambda: f"{ideal} a={a} x={x} b={b}",
        )

    res, rng = group("circle morphism")
    for _ in range(samples):
        x, y = random_element(rng, n), random_element(rng, n)

        def body():
            p = mul(x, y)
            phi = st.circle_morphism
            if (phi(x).angle == 0) != (not x.is_zero and x.d == 0):
                return False
            if p.is_zero:
                return phi(p).is_zero
            return phi(p) == phi(x) * phi(y) and abs(phi(p).angle) <= 1

        _run(res, body, lambda: f"x={x} y={y}")

    res, rng = group("isomorphism")
    q = 2 if n != 2 else 3
    for _ in range(samples):
        x, y = random_element(rng, n), random_element(rng, n)

        def body():
            fx, fy = st.iso_map(x, q), st.iso_map(y, q)
            scale = Fraction(q - 1, n - 1)
            return (
                st.iso_map(mul(x, y), q) == alg.multiply(fx, fy)
                and st.iso_map(fx, n) == x
                and (x.is_zero or alg.height(fx) == scale * alg.height(x))
            )

        _run(res, body, lambda: f"x={x} y={y}")

    res, rng = group("natural order")
    for _ in range(samples):
        y = random_element(rng, n)
        x = mul(alg.range_of(random_element(rng, n)), y)

        def body():
            leq = alg.leq_natural(x, y)
            definitional = x == mul(mul(x, x.T), y)
            e_star = not (leq and not x.is_zero and alg.is_idempotent(x)) or alg.is_idempotent(y)
            return leq and leq == definitional and e_star

        _run(res, body, lambda: f"x={x} y={y}")

    if n <= rook.MAX_GREEN:
        res, _ = group("rook oracle")
        elements = rook.enumerate_integer_monoid(n)
        for x in elements:
            for y in elements:
                _run(
                    res,
                    lambda: rook.to_matrix(mul(x, y)) == rook.to_matrix(x) @ rook.to_matrix(y),
                    lambda: f"x={x} y={y}",
                )

        res, _ = group("Green closed forms")
        for rel in st.GreenRelation:
            table = rook.definitional_green(rel, n)
            for x in elements:
                for y in elements:
                    _run(
                        res,
                        lambda: st.green_related(rel, x, y) == table.related(x, y),
                        lambda: f"{rel.value} x={x} y={y}",
                    )
    return results
