import random
from fractions import Fraction
from pathlib import Path

import pytest

from gsp4l.satake import NormalizedSatake, SpinMultiset, spin_multiset
from gsp4l.scalars import SqrtRational

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def random_fraction(rng: random.Random, lo=-8, hi=8, den_max=6, nonzero=False) -> Fraction:
    while True:
        f = Fraction(rng.randint(lo, hi), rng.randint(1, den_max))
        if f != 0 or not nonzero:
            return f


def random_exact_pair(rng: random.Random, p: int) -> NormalizedSatake:
    """Random normalized (alpha, beta), both rational or both rational
    multiples of sqrt(p); either family keeps every eigenvalue identity
    inside the one-radical exact scalars."""
    if rng.random() < 0.5:
        alpha = SqrtRational(random_fraction(rng, nonzero=True))
        beta = SqrtRational(random_fraction(rng, nonzero=True))
    else:
        alpha = SqrtRational(random_fraction(rng, nonzero=True), p)
        beta = SqrtRational(random_fraction(rng, nonzero=True), p)
    return NormalizedSatake(p, alpha, beta)


def random_exact_multiset(rng: random.Random, p: int) -> SpinMultiset:
    return spin_multiset(random_exact_pair(rng, p))


def multiset_from_cd(c, d) -> SpinMultiset:
    """Exact inversion-closed multiset {c, 1/c, d, 1/d} from rationals."""
    c = Fraction(c)
    d = Fraction(d)
    return SpinMultiset((c, 1 / c, d, 1 / d))


# Pairs (c, d), (c', d') with equal A+B = c+1/c+d+1/d but different
# AB = (c+1/c)(d+1/d): used to plant a disagreement at a(p^2) while a(p)
# agrees.  Each entry is verified at import time.
COLLISION_QUADS = [
    ((Fraction(2), Fraction(6)), (Fraction(7, 2), Fraction(14, 3))),
    ((Fraction(3, 2), Fraction(10, 3)), (Fraction(5, 2), Fraction(5, 2))),
    ((Fraction(1), Fraction(5)), (Fraction(7, 3), Fraction(21, 5))),
    ((Fraction(3, 2), Fraction(15, 2)), (Fraction(10, 3), Fraction(6))),
    ((Fraction(1), Fraction(3, 2)), (Fraction(4, 3), Fraction(4, 3))),
    ((Fraction(4, 3), Fraction(8, 3)), (Fraction(8, 5), Fraction(5, 2))),
    ((Fraction(6, 5), Fraction(5, 3)), (Fraction(21, 20), Fraction(12, 7))),
    ((Fraction(1), Fraction(5, 2)), (Fraction(4, 3), Fraction(12, 5))),
    ((Fraction(7, 5), Fraction(7, 2)), (Fraction(5, 3), Fraction(10, 3))),
    ((Fraction(1), Fraction(4, 3)), (Fraction(6, 5), Fraction(5, 4))),
]


def _v(c: Fraction) -> Fraction:
    return c + 1 / c

for (_c, _d), (_c2, _d2) in COLLISION_QUADS:
    assert _v(_c) + _v(_d) == _v(_c2) + _v(_d2)
    assert _v(_c) * _v(_d) != _v(_c2) * _v(_d2)
