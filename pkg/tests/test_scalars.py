import math
import random
from fractions import Fraction

import pytest

from gsp4l.errors import Gsp4Error, IncompatibleRadicals, MixedBackend
from gsp4l.scalars import (
    SqrtRational,
    backend_of,
    default_tolerance,
    half_power,
    scalars_close,
    sqrt_int,
)


def test_radicand_reduction():
    assert SqrtRational(1, 8) == SqrtRational(2, 2)
    assert SqrtRational(1, 4) == 2
    assert SqrtRational(1, 1) == 1
    assert SqrtRational(0, 7) == 0
    assert SqrtRational(Fraction(3, 4), 18).d == 2


def test_multiplication_reduces():
    a = sqrt_int(6)
    b = sqrt_int(10)
    assert a * b == SqrtRational(2, 15)
    assert sqrt_int(2) * sqrt_int(2) == 2
    assert sqrt_int(3) * Fraction(2, 5) == SqrtRational(Fraction(2, 5), 3)


def test_addition_same_radicand():
    assert sqrt_int(2) + sqrt_int(8) == SqrtRational(3, 2)
    assert sqrt_int(5) - sqrt_int(5) == 0
    assert SqrtRational(2) + 3 == 5


def test_addition_incompatible_radicands():
    with pytest.raises(IncompatibleRadicals):
        sqrt_int(2) + sqrt_int(3)


def test_division_and_powers():
    x = SqrtRational(Fraction(3, 2), 5)
    assert x / x == 1
    assert 1 / sqrt_int(2) == SqrtRational(Fraction(1, 2), 2)
    assert sqrt_int(2) ** 2 == 2
    assert sqrt_int(2) ** 3 == SqrtRational(2, 2)
    assert sqrt_int(2) ** -1 == SqrtRational(Fraction(1, 2), 2)
    assert x**0 == 1


def test_half_power():
    assert half_power(2, 3) == SqrtRational(2, 2)
    assert half_power(2, -1) == SqrtRational(Fraction(1, 2), 2)
    assert half_power(3, 4) == 9
    assert half_power(5, -4) == Fraction(1, 25)
    # p^(m/2) * p^(-m/2) = 1 across a sweep
    for p in (2, 3, 5, 7):
        for m in range(-9, 10):
            assert half_power(p, m) * half_power(p, -m) == 1


def test_ordering_matches_float_ordering():
    rng = random.Random(77)
    vals = [
        SqrtRational(Fraction(rng.randint(-20, 20), rng.randint(1, 9)), rng.choice([1, 2, 3, 5]))
        for _ in range(60)
    ]
    fs = [float(v) for v in vals]
    order_exact = sorted(range(60), key=lambda i: vals[i])
    order_float = sorted(range(60), key=lambda i: fs[i])
    # positions of equal floats may permute; compare the float images
    assert [round(fs[i], 12) for i in order_exact] == [
        round(fs[i], 12) for i in order_float
    ]


def test_float_interop_is_rejected():
    with pytest.raises(MixedBackend):
        sqrt_int(2) * 1.5
    with pytest.raises(MixedBackend):
        sqrt_int(2) + 1.5
    with pytest.raises(MixedBackend):
        backend_of([1, 2.0])


def test_backend_of():
    assert backend_of([1, Fraction(1, 2), sqrt_int(3)]) == "exact"
    assert backend_of([1.0, 1j]) == "float"
    with pytest.raises(TypeError):
        backend_of(["x"])


def test_scalars_close():
    assert scalars_close(Fraction(1, 3), Fraction(1, 3))
    assert not scalars_close(Fraction(1, 3), Fraction(1, 2))
    assert scalars_close(1.0, 1.0 + 1e-12)
    assert not scalars_close(1.0, 1.001)
    assert scalars_close(1e20, 1e20 * (1 + 1e-12))
    with pytest.raises(MixedBackend):
        scalars_close(Fraction(1), 1.0)


def test_precision_env_override(monkeypatch):
    monkeypatch.setenv("GSP4_PRECISION", "1e-3")
    assert default_tolerance() == 1e-3
    assert scalars_close(1.0, 1.0005)
    monkeypatch.setenv("GSP4_PRECISION", "bogus")
    with pytest.raises(Gsp4Error):
        default_tolerance()
    monkeypatch.delenv("GSP4_PRECISION")
    assert default_tolerance() == 1e-9


def test_str_and_float():
    assert str(SqrtRational(Fraction(3, 4), 2)) == "3/4*sqrt(2)"
    assert str(SqrtRational(Fraction(-2, 3))) == "-2/3"
    assert math.isclose(float(SqrtRational(2, 2)), 2 * math.sqrt(2))
