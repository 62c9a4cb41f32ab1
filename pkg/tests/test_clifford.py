from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from fueterkit.clifford import (
    Multivector,
    blade_product,
    blade_text,
    geometric_product,
    parity_split,
    vector_embed,
)


def e(j, dim=3):
    return Multivector.basis_vector(j, dim)


def test_generator_relations():
    assert (e(1) * e(2)).terms == {(1, 2): Fraction(1)}
    assert (e(2) * e(1)).terms == {(1, 2): Fraction(-1)}
    assert e(1) * e(1) == Multivector.scalar(-1, 3)


def test_bivector_square():
    e12 = e(1) * e(2)
    assert e12 * e12 == Multivector.scalar(-1, 3)


def test_blade_product_sign_rule():
    sign, blade = blade_product((1, 2), (1, 2))
    assert (sign, blade) == (-1, ())
    sign, blade = blade_product((2,), (1,))
    assert (sign, blade) == (-1, (1, 2))


def test_vector_embed_examples():
    assert vector_embed([1, 0, 0]) == e(1)
    v = vector_embed([1, 2, 0])
    assert v * v == Multivector.scalar(-5, 3)
    assert vector_embed([0, 0, 0]).is_zero()


def test_vector_embed_offset_and_length_check():
    s = vector_embed([1, 0], dim=5, offset=3)
    assert s.terms == {(4,): Fraction(1)}
    with pytest.raises(ValueError):
        vector_embed([1, 2, 3], dim=2)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        geometric_product(Multivector.scalar(1, 2), Multivector.scalar(1, 3))


def test_parity_split_examples():
    a = Multivector(3, {(): 1, (1,): 1, (1, 2): 1})
    even, odd = parity_split(a)
    assert even == Multivector(3, {(): 1, (1, 2): 1})
    assert odd == Multivector(3, {(1,): 1})
    z_even, z_odd = parity_split(Multivector.zero(3))
    assert z_even.is_zero() and z_odd.is_zero()
    tri = Multivector.blade((1, 2, 3), 3)
    even, odd = parity_split(tri)
    assert even.is_zero() and odd == tri


def test_blade_text_forms():
    assert blade_text((), 3) == "1"
    assert blade_text((1, 2), 3) == "e12"
    assert blade_text((1, 12), 12) == "e{1,12}"


def test_blade_validation():
    with pytest.raises(ValueError):
        Multivector(3, {(2, 1): 1})
    with pytest.raises(ValueError):
        Multivector(3, {(4,): 1})


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def multivectors(draw, dim=None):
    d = dim if dim is not None else draw(st.integers(min_value=1, max_value=6))
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        blade = tuple(sorted(draw(st.sets(st.integers(min_value=1, max_value=d), max_size=d))))
        terms[blade] = draw(rationals)
    return Multivector(d, terms)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda d: st.tuples(multivectors(dim=d), multivectors(dim=d), multivectors(dim=d))))
def test_associativity(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=1, max_value=6).flatmap(
    lambda d: st.lists(rationals, min_size=d, max_size=d)))
def test_vector_square_identity(coords):
    v = vector_embed(coords)
    assert v * v == Multivector.scalar(-sum(Fraction(c) ** 2 for c in coords), len(coords))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=6).flatmap(
    lambda d: st.tuples(multivectors(dim=d), multivectors(dim=d))))
def test_parity_grading_of_products(pair):
    a, b = pair
    ae, ao = a.parity_split()
    be, bo = b.parity_split()
    for x, y, parity in ((ae, be, 0), (ao, bo, 0), (ae, bo, 1), (ao, be, 1)):
        prod = x * y
        for blade in prod.terms:
            assert len(blade) % 2 == parity


@settings(max_examples=100, deadline=None)
@given(multivectors())
def test_parity_split_direct_sum(a):
    even, odd = a.parity_split()
    assert even + odd == a
    again_e, again_o = even.parity_split()
    assert again_e == even and again_o.is_zero()


def test_distributivity_and_scalar_action():
    a = Multivector(3, {(1,): Fraction(1, 2), (2, 3): 3})
    b = Multivector(3, {(): 2, (1, 2): -1})
    c = Multivector(3, {(3,): 5})
    assert a * (b + c) == a * b + a * c
    assert 2 * a == a + a
    assert (a - a).is_zero()
