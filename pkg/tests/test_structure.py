from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from segmonoid.algebra import (
    AmbientError,
    DomainError,
    ValidationError,
    domain_of,
    height,
    identity,
    inverse,
    is_idempotent,
    is_point,
    leq_natural,
    multiply,
    power,
    range_of,
    zero,
)
from segmonoid.structure import (
    CircleImage,
    GreenRelation,
    Ideal,
    circle_morphism,
    d_class_witness,
    element_of_height,
    factor_through,
    green_related,
    ideal_contains,
    in_brandt,
    iso_map,
    jth_root,
    nilpotent_index,
    parse_ideal,
    principal_ideal_of,
    sierpinski_element,
)

from conftest import el, elements
from oracles import grid_product


def first_zero_power(x, cap=10_000):
    acc, j = x, 1
    while not acc.is_zero:
        acc, j = multiply(acc, x), j + 1
        assert j <= cap
    return j


# --- nilpotent index --------------------------------------------------------

def test_nilpotent_index_examples():
    assert nilpotent_index(el(3, 1, F(1, 2), 2)) == 4
    assert nilpotent_index(el(3, 1, 1, 2)) == 3
    assert nilpotent_index(el(3, 2, -1, 2)) == 2
    assert nilpotent_index(el(3, 1, F(1, 3), 1)) == 2


def test_nilpotent_index_examples_by_grid_iteration():
    for x, expected in [(el(3, 1, F(1, 2), 2), 4), (el(3, 1, 1, 2), 3)]:
        j = 1
        while not grid_product(*[x] * j).is_zero:
            j += 1
        assert j == expected


def test_not_nilpotent():
    assert nilpotent_index(zero(3)) is None
    assert nilpotent_index(el(3, 1, 0, 2)) is None


@given(elements(allow_zero=False, point=True))
def test_points_have_index_two(x):
    assume(x.d != 0)
    assert nilpotent_index(x) == 2


@given(elements(allow_zero=False))
def test_index_is_first_zero_power(x):
    assume(x.d != 0)
    assert nilpotent_index(x) == first_zero_power(x)


@pytest.mark.parametrize("t", [1, 2, 3, 7, 20])
def test_index_grows_as_diagonal_shrinks(t):
    assert nilpotent_index(el(3, 1, F(1, t), 2)) == t + 2


# --- roots ------------------------------------------------------------------

def test_root_example():
    y = jth_root(el(3, 1, 1, 2), 2)
    assert y == el(3, 1, F(1, 2), F(5, 2))
    assert power(y, 2) == el(3, 1, 1, 2)


def test_root_trivial_cases():
    x = el(3, 1, F(2, 3), 2)
    assert jth_root(x, 1) == x
    e = el(3, F(3, 2), 0, F(5, 2))
    assert jth_root(e, 5) == e


def test_root_of_zero_rejected():
    with pytest.raises(DomainError):
        jth_root(zero(3), 2)
    with pytest.raises(DomainError):
        jth_root(identity(3), 0)


@given(elements(allow_zero=False), st.integers(1, 10))
def test_root_then_power(x, j):
    assert power(jth_root(x, j), j) == x


def test_integer_element_can_have_non_integer_root():
    y = jth_root(el(3, 2, -1, 3), 2)
    assert y.d == F(-1, 2)


# --- Green's relations ------------------------------------------------------

def test_green_examples():
    x = el(3, 1, 1, 2)
    assert green_related(GreenRelation.R, x, el(3, 1, F(1, 2), 2))
    y = el(3, 2, -1, 3)
    assert green_related(GreenRelation.D, x, y)
    assert not green_related(GreenRelation.H, x, y)
    assert not green_related(GreenRelation.J, zero(3), y)
    assert green_related(GreenRelation.J, zero(3), zero(3))


@pytest.mark.parametrize("rel", list(GreenRelation))
def test_zero_is_its_own_class(rel):
    assert green_related(rel, zero(3), zero(3))
    assert not green_related(rel, zero(3), identity(3))
    assert not green_related(rel, identity(3), zero(3))


@given(elements(), elements())
def test_green_via_range_and_domain(x, y):
    assert green_related(GreenRelation.R, x, y) == (range_of(x) == range_of(y))
    assert green_related(GreenRelation.L, x, y) == (domain_of(x) == domain_of(y))
    h = green_related(GreenRelation.R, x, y) and green_related(GreenRelation.L, x, y)
    assert green_related(GreenRelation.H, x, y) == h == (x == y)


@given(elements(), elements())
def test_completely_semisimple(x, y):
    if height(x) == height(y) and leq_natural(x, y):
        assert x == y


def test_green_relation_parse():
    assert GreenRelation.parse("d") is GreenRelation.D
    assert GreenRelation.parse(" J ") is GreenRelation.J
    with pytest.raises(ValueError):
        GreenRelation.parse("X")
    assert {r.value for r in GreenRelation} == set("RLHDJ")


def test_green_ambient_mismatch():
    with pytest.raises(AmbientError):
        green_related(GreenRelation.R, identity(2), identity(3))


# --- D-class witness --------------------------------------------------------

def test_d_class_witness_example():
    x, y = el(3, 1, 1, 2), el(3, 2, -1, 3)
    z = d_class_witness(x, y)
    assert z == el(3, 2, 0, 3)
    assert domain_of(z) == domain_of(x) and range_of(z) == range_of(y)


def test_d_class_witness_none_and_errors():
    assert d_class_witness(el(3, 1, 0, 2), el(3, 1, 0, 3)) is None
    with pytest.raises(DomainError):
        d_class_witness(zero(3), identity(3))


@given(elements(allow_zero=False), elements(allow_zero=False))
def test_d_class_witness_postconditions(x, y):
    z = d_class_witness(x, y)
    assert (z is None) == (height(x) != height(y))
    if z is not None:
        assert domain_of(z) == domain_of(x)
        assert range_of(z) == range_of(y)


@given(elements(allow_zero=False))
def test_d_class_witness_on_same_class(x):
    for y in (x, inverse(x), range_of(x), domain_of(x)):
        z = d_class_witness(x, y)
        assert domain_of(z) == domain_of(x) and range_of(z) == range_of(y)


# --- ideals -----------------------------------------------------------------

def test_ideal_bounds_validated():
    Ideal(3, F(-1))
    Ideal(3, F(2))
    Ideal(3, F(1, 2), closed=False)
    for bad in (F(-1, 2), F(5, 2)):
        with pytest.raises(ValidationError):
            Ideal(3, bad)
    for bad in (F(0), F(-1), F(3)):
        with pytest.raises(ValidationError):
            Ideal(3, bad, closed=False)


def test_ideal_special_cases():
    bottom, points = Ideal(3, F(-1)), Ideal(3, F(0))
    assert ideal_contains(bottom, zero(3))
    assert not ideal_contains(bottom, el(3, 2, -1, 2))
    assert ideal_contains(points, zero(3))
    assert ideal_contains(points, el(3, F(3, 2), F(1, 3), F(3, 2)))
    assert not ideal_contains(points, el(3, 1, 0, F(11, 10)))
    assert all(ideal_contains(Ideal(3, F(2)), x) for x in (zero(3), identity(3)))


def test_open_ideal_example():
    k1 = Ideal(3, F(1), closed=False)
    assert ideal_contains(k1, el(3, 1, F(1, 2), F(3, 2)))
    assert not ideal_contains(k1, el(3, 1, F(1, 2), 2))
    assert el(3, 1, F(1, 2), F(3, 2)) in k1


def test_principal_ideal_of():
    assert principal_ideal_of(identity(3)) == Ideal(3, F(2))
    assert principal_ideal_of(zero(3)) == Ideal(3, F(-1))
    assert principal_ideal_of(el(3, 1, F(1, 2), 2)) == Ideal(3, F(1))


def test_ideal_text():
    assert parse_ideal("I(1/2)", 3) == Ideal(3, F(1, 2))
    assert parse_ideal(" K( 2 ) ", 3) == Ideal(3, F(2), closed=False)
    assert str(Ideal(3, F(-1))) == "I(-1)"
    with pytest.raises(ValueError):
        parse_ideal("X(1)", 3)


@given(elements(), elements(), elements(), st.fractions(0, 2), st.booleans())
def test_ideal_closure(a, x, b, mu, closed):
    assume(closed or mu > 0)
    ideal = Ideal(3, mu, closed)
    if ideal_contains(ideal, x):
        assert ideal_contains(ideal, multiply(multiply(a, x), b))


@given(st.fractions(0, 2), st.fractions(0, 2), st.booleans())
def test_ideals_strictly_ordered(a, b, from_bottom):
    assume(a != b)
    mu, xi = (F(-1), max(a, b)) if from_bottom else (min(a, b), max(a, b))
    small, big = Ideal(3, mu), Ideal(3, xi)
    witness = element_of_height(3, xi)
    assert ideal_contains(big, witness) and not ideal_contains(small, witness)
    if mu > 0:
        mid = element_of_height(3, (mu + xi) / 2)
        assert ideal_contains(Ideal(3, xi, False), mid) and not ideal_contains(Ideal(3, mu, False), mid)


@given(elements(), elements())
def test_principal_ideal_generated_by_any_element(x, y):
    # y lies in the ideal generated by x exactly when y factors through x
    assert ideal_contains(principal_ideal_of(x), y) == (factor_through(y, x) is not None)


# --- factorization ----------------------------------------------------------

def test_factor_example():
    y, x = el(3, 2, 0, 2), el(3, 1, 1, 2)
    z, w = factor_through(y, x)
    assert z == el(3, 2, -1, 2)
    assert w == el(3, 2, 0, 2)
    assert multiply(multiply(z, x), w) == y


def test_factor_self():
    x = el(3, 1, F(1, 2), 2)
    z, w = factor_through(x, x)
    assert z == range_of(x) and w == domain_of(x)
    assert multiply(multiply(z, x), w) == x


def test_factor_impossible():
    assert factor_through(identity(3), el(3, 1, F(1, 2), 2)) is None
    assert factor_through(el(3, 1, 0, 1), zero(3)) is None


def test_factor_zero():
    assert factor_through(zero(3), identity(3)) == (zero(3), zero(3))
    assert factor_through(zero(3), zero(3)) == (zero(3), zero(3))


@given(elements(), elements())
def test_factorization(y, x):
    found = factor_through(y, x)
    assert (found is None) == (height(y) > height(x))
    if found is not None:
        z, w = found
        assert multiply(multiply(z, x), w) == y


@given(elements(point=True), elements(allow_zero=False))
def test_point_factors_are_points(y, x):
    z, w = factor_through(y, x)
    assert in_brandt(z) and in_brandt(w)
    assert multiply(multiply(z, x), w) == y


# --- Brandt subsemigroup ----------------------------------------------------

def test_in_brandt_examples():
    assert in_brandt(el(3, 2, -1, 2))
    assert in_brandt(zero(3))
    assert not in_brandt(el(3, 1, 0, 2))


@given(elements(point=True), elements(point=True))
def test_brandt_closure_and_primitivity(x, y):
    assert in_brandt(multiply(x, y)) and in_brandt(inverse(x))
    if is_point(x) and is_point(y) and leq_natural(x, y):
        assert x == y


# --- isomorphism ------------------------------------------------------------

def test_iso_identity_to_identity():
    assert iso_map(identity(3), 2) == identity(2)
    assert iso_map(identity(2), 7) == identity(7)
    assert iso_map(zero(3), 2) == zero(2)


def test_iso_example():
    assert iso_map(el(3, 1, 1, 2), 2) == el(2, 1, F(1, 2), F(3, 2))


def test_iso_rejects_small_target():
    with pytest.raises(AmbientError):
        iso_map(identity(3), 1)


def test_iso_round_trip_sampled(rng):
    from segmonoid.sampling import random_element

    for _ in range(200):
        x = random_element(rng, 3)
        assert iso_map(iso_map(x, 2), 3) == x
        assert iso_map(iso_map(x, 5), 3) == x


@given(elements(), elements(), st.integers(2, 6))
def test_iso_homomorphism(x, y, q):
    assert iso_map(multiply(x, y), q) == multiply(iso_map(x, q), iso_map(y, q))
    if not x.is_zero:
        assert height(iso_map(x, q)) == F(q - 1, 2) * height(x)


# --- circle morphism --------------------------------------------------------

def test_circle_examples():
    assert circle_morphism(el(3, 1, 1, 2)) == CircleImage(F(1, 2))
    assert circle_morphism(zero(3)).is_zero
    assert str(circle_morphism(zero(3))) == "0"
    assert str(circle_morphism(el(3, 1, 1, 2))) == "exp(i*1/2)"
    assert abs(circle_morphism(identity(3)).to_complex() - 1) < 1e-12


@given(elements(), elements())
def test_circle_zero_morphism(x, y):
    p = multiply(x, y)
    if not p.is_zero:
        image = circle_morphism(p)
        assert image == circle_morphism(x) * circle_morphism(y)
        assert abs(image.angle) <= 1


@given(elements())
def test_circle_idempotent_pure(x):
    image = circle_morphism(x)
    assert image.is_zero == x.is_zero
    assert (image.angle == 0) == (not x.is_zero and is_idempotent(x))


# --- Sierpinski witnesses and zero-categoricity -----------------------------

def test_sierpinski_examples():
    y = sierpinski_element(2, 1)
    assert y == el(2, 1, F(1, 2), F(3, 2)) and height(y) == F(1, 2)
    y = sierpinski_element(3, 2)
    assert y == el(3, 1, F(1, 4), F(11, 4)) and height(y) == F(7, 4)


def test_sierpinski_heights_increase():
    for n in (2, 3, 5):
        hs = [height(sierpinski_element(n, i)) for i in range(1, 32)]
        assert all(a < b for a, b in zip(hs, hs[1:]))
        assert all(h < n - 1 for h in hs)


def test_sierpinski_rejects_bad_input():
    with pytest.raises(DomainError):
        sierpinski_element(3, 0)
    with pytest.raises(AmbientError):
        sierpinski_element(1, 1)


def test_not_categorical_at_zero():
    x = el(3, 1, 1, 2)
    assert not multiply(x, x).is_zero
    assert multiply(multiply(x, x), x).is_zero
