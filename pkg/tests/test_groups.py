"""Ambient group arithmetic and digit encoding."""

from __future__ import annotations

import random

import pytest

from arithproj.errors import InstanceTooLarge, OutOfRange
from arithproj.groups import (
    ELEMENT_MAGNITUDE_CAP,
    AmbientGroup,
    DigitVector,
    digits_to_elem,
    elem_to_digits,
)


def test_integer_group_arithmetic():
    g = AmbientGroup.integers()
    assert g.modulus is None
    assert not g.is_modular
    assert g.add(3, -5) == -2
    assert g.sub(3, -5) == 8
    assert g.neg(7) == -7
    assert g.scale(2, -4) == -8
    assert g.canon(-123) == -123
    assert g.is_canonical(-123)


def test_modular_group_arithmetic():
    g = AmbientGroup.integers_mod(12)
    assert g.modulus == 12
    assert g.is_modular
    assert g.add(7, 8) == 3
    assert g.sub(2, 5) == 9
    assert g.neg(0) == 0
    assert g.neg(5) == 7
    assert g.scale(5, 11) == 7
    assert g.canon(-1) == 11
    assert g.is_canonical(11)
    assert not g.is_canonical(12)
    assert not g.is_canonical(-1)


def test_modulus_must_be_at_least_two():
    with pytest.raises(ValueError):
        AmbientGroup.integers_mod(1)
    with pytest.raises(ValueError):
        AmbientGroup.integers_mod(0)
    with pytest.raises(ValueError):
        AmbientGroup.integers_mod(-5)


def test_group_json_round_trip():
    for g in (AmbientGroup.integers(), AmbientGroup.integers_mod(9)):
        assert AmbientGroup.from_json(g.to_json()) == g
    assert AmbientGroup.integers().to_json() == "Z"
    assert AmbientGroup.integers_mod(9).to_json() == {"mod": 9}


def test_group_axioms_random():
    rng = random.Random(20)
    for _ in range(200):
        g = (
            AmbientGroup.integers()
            if rng.random() < 0.5
            else AmbientGroup.integers_mod(rng.randrange(2, 50))
        )
        x, y, z = (g.canon(rng.randrange(-100, 100)) for _ in range(3))
        assert g.add(x, g.add(y, z)) == g.add(g.add(x, y), z)
        assert g.add(x, y) == g.add(y, x)
        assert g.add(x, g.neg(x)) == g.canon(0)
        assert g.sub(x, y) == g.add(x, g.neg(y))
        assert g.scale(3, x) == g.add(x, g.add(x, x))


def test_digit_vector_validation():
    v = DigitVector(base=7, digits=(6, 0, 1))
    assert v.is_set_element()
    with pytest.raises(ValueError):
        DigitVector(base=1, digits=(0,))
    with pytest.raises(ValueError):
        DigitVector(base=7, digits=())
    # out-of-range digits are allowed (difference vectors are signed),
    # they just fail the set-element predicate
    assert not DigitVector(base=7, digits=(7,)).is_set_element()
    assert not DigitVector(base=7, digits=(-1,)).is_set_element()


def test_digit_round_trip_frozen():
    # 48 = 6 + 6*7 in base 7, least significant digit first
    assert elem_to_digits(48, 7, 2) == DigitVector(base=7, digits=(6, 6))
    assert digits_to_elem(DigitVector(base=7, digits=(6, 6))) == 48
    assert digits_to_elem(DigitVector(base=10, digits=(3, 2, 1))) == 123


def test_digit_round_trip_random():
    rng = random.Random(7)
    for _ in range(300):
        base = rng.randrange(2, 40)
        length = rng.randrange(1, 12)
        x = rng.randrange(base**length)
        vec = elem_to_digits(x, base, length)
        assert len(vec.digits) == length
        assert vec.is_set_element()
        assert digits_to_elem(vec) == x


def test_elem_to_digits_range_errors():
    with pytest.raises(OutOfRange):
        elem_to_digits(-1, 7, 3)
    with pytest.raises(OutOfRange):
        elem_to_digits(7**3, 7, 3)


def test_magnitude_cap_enforced():
    # 2**63 - 1 itself is representable, one more is not
    top = DigitVector(base=2, digits=(1,) * 63)
    assert digits_to_elem(top) == ELEMENT_MAGNITUDE_CAP
    over = DigitVector(base=2, digits=(0,) * 63 + (1,))
    with pytest.raises(InstanceTooLarge):
        digits_to_elem(over)
