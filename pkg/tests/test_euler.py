import random
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import random_exact_multiset, random_exact_pair

from gsp4l.errors import KindMismatch
from gsp4l.euler import (
    ANALYTIC,
    ARITHMETIC,
    a_coefficient_series,
    eigen_series_local,
    normalized_eigen_series_local,
    rankin_reciprocal,
    rescale,
    spin_reciprocal_eigen,
    spin_reciprocal_satake,
    std_reciprocal,
)
from gsp4l.satake import (
    SpinMultiset,
    StdMultiset,
    denormalize,
    eigenvalues_from_normalized,
    spin_multiset,
    std_multiset,
)
from gsp4l.scalars import SqrtRational, half_power


def brute_expand(roots):
    """Elementary-symmetric oracle for prod (1 - g X)."""
    n = len(roots)
    coeffs = []
    for r in range(n + 1):
        e_r = sum(
            (lambda prod: prod)(_product(sub)) for sub in combinations(roots, r)
        ) if r else 1
        coeffs.append((-1) ** r * e_r)
    return coeffs


def _product(vals):
    out = 1
    for v in vals:
        out = out * v
    return out


def test_spin_satake_binomial():
    m = SpinMultiset((1, 1, 1, 1))
    assert spin_reciprocal_satake(m, 2).reciprocal.coeffs == [1, -4, 6, -4, 1]


def test_spin_satake_sign_pairs():
    m = SpinMultiset((1, 1, -1, -1))
    assert spin_reciprocal_satake(m, 2).reciprocal.coeffs == [1, 0, -2, 0, 1]


def test_spin_satake_matches_brute_product():
    rng = random.Random(7)
    for _ in range(50):
        p = rng.choice([2, 3, 5])
        m = random_exact_multiset(rng, p)
        got = spin_reciprocal_satake(m, p).reciprocal.coeffs
        assert got == brute_expand(list(m.values))


def test_spin_eigen_forced_zero():
    p, k = 2, 4
    lp2 = -(p ** (2 * k - 4))
    f = spin_reciprocal_eigen(0, lp2, p, k)
    assert f.reciprocal.coeffs == [1, 0, 0, 0, p ** (4 * k - 6)]
    assert f.normalization == ARITHMETIC


def test_spin_eigen_structure():
    rng = random.Random(13)
    for _ in range(20):
        p, k = rng.choice([2, 3]), rng.randint(3, 8)
        lp = Fraction(rng.randint(-99, 99), rng.randint(1, 9))
        lp2 = Fraction(rng.randint(-99, 99), rng.randint(1, 9))
        f = spin_reciprocal_eigen(lp, lp2, p, k)
        assert f.reciprocal[1] == -lp
        assert f.reciprocal[2] == lp * lp - lp2 - p ** (2 * k - 4)
        assert f.reciprocal[3] == -lp * p ** (2 * k - 3)
        assert f.reciprocal[4] == p ** (4 * k - 6)


def test_spin_eigen_vs_satake_rescaled_alpha2_beta3():
    # exact non-unitary record alpha=2, beta=3 at p=2, k=4
    rng = random.Random(0)
    p, k = 2, 4
    from gsp4l.satake import NormalizedSatake

    n = NormalizedSatake(p, SqrtRational(2), SqrtRational(3))
    lp, lp2 = eigenvalues_from_normalized(n, k)
    arith = spin_reciprocal_eigen(lp, lp2, p, k)
    analytic = spin_reciprocal_satake(spin_multiset(n), p)
    assert rescale(analytic, k, ARITHMETIC).reciprocal == arith.reciprocal
    assert rescale(arith, k, ANALYTIC).reciprocal == analytic.reciprocal


def test_rescale_cross_identity_random():
    rng = random.Random(29)
    for _ in range(100):
        p = rng.choice([2, 3, 5, 7])
        k = rng.randint(3, 10)
        n = random_exact_pair(rng, p)
        lp, lp2 = eigenvalues_from_normalized(n, k)
        arith = spin_reciprocal_eigen(lp, lp2, p, k)
        analytic = spin_reciprocal_satake(spin_multiset(n), p)
        assert rescale(analytic, k, ARITHMETIC).reciprocal == arith.reciprocal


def test_std_binomial():
    m = StdMultiset((1, 1, 1, 1, 1))
    assert std_reciprocal(m, 2).reciprocal.coeffs == [1, -5, 10, -10, 5, -1]


def test_std_example_expansion():
    vals = (1, -1, -1, 2, Fraction(1, 2))
    m = StdMultiset(vals)
    assert std_reciprocal(m, 3).reciprocal.coeffs == brute_expand(list(vals))


def test_std_palindromic_up_to_sign():
    rng = random.Random(37)
    for _ in range(40):
        a1 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        a2 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        m = StdMultiset((1, a1, a2, 1 / a1, 1 / a2))
        c = std_reciprocal(m, 2).reciprocal.coeffs
        # inversion-closed with product 1: c[5-r] = -c[r]
        for r in range(6):
            assert c[5 - r] == -c[r]


def test_rankin_all_ones():
    m = SpinMultiset((1, 1, 1, 1))
    got = rankin_reciprocal(m, m, 2).reciprocal.coeffs
    assert got == brute_expand([1] * 16)


def test_rankin_sign_pairing():
    a = SpinMultiset((1, 1, -1, -1))
    b = SpinMultiset((1, 1, 1, 1))
    got = rankin_reciprocal(a, b, 2).reciprocal.coeffs
    # (1-X)^8 (1+X)^8 = (1-X^2)^8
    assert got == brute_expand([1] * 8 + [-1] * 8)


def test_rankin_matches_double_loop():
    rng = random.Random(43)
    for _ in range(2):
        p = rng.choice([2, 3])
        a = random_exact_multiset(rng, p)
        b = random_exact_multiset(rng, p)
        roots = [x * y for x in a.values for y in b.values]
        assert rankin_reciprocal(a, b, p).reciprocal.coeffs == brute_expand(roots)
        assert rankin_reciprocal(a, b, p).degree == 16


def test_rankin_kind_mismatch():
    a = SpinMultiset((1, 1, 1, 1))
    b = StdMultiset((1, 1, 1, 1, 1))
    with pytest.raises(KindMismatch):
        rankin_reciprocal(a, b, 2)


def test_rankin_std_degree_25():
    m = StdMultiset((1, 2, 3, Fraction(1, 2), Fraction(1, 3)))
    assert rankin_reciprocal(m, m, 2).degree == 25


def test_rankin_self_real_for_conjugate_closed():
    import cmath

    rng = random.Random(51)
    for _ in range(20):
        t1 = rng.uniform(0, cmath.pi)
        t2 = rng.uniform(0, cmath.pi)
        m = SpinMultiset(
            (
                cmath.exp(1j * t1),
                cmath.exp(-1j * t1),
                cmath.exp(1j * t2),
                cmath.exp(-1j * t2),
            )
        )
        for c in rankin_reciprocal(m, m, 2).reciprocal:
            assert abs(c.imag) < 1e-9 * max(1.0, abs(c))


def test_eigen_series_head():
    p, k = 2, 4
    lp = Fraction(3, 2)
    lp2 = Fraction(-7, 3)
    s = eigen_series_local(lp, lp2, p, k, 5)
    assert s[0] == 1
    assert s[1] == lp
    assert s[2] == lp2


def test_eigen_series_cubic_quartic_identities():
    rng = random.Random(61)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        k = rng.randint(3, 10)
        lp = Fraction(rng.randint(-50, 50), rng.randint(1, 6))
        lp2 = Fraction(rng.randint(-50, 50), rng.randint(1, 6))
        s = eigen_series_local(lp, lp2, p, k, 4)
        cubic = 2 * lp * lp2 - lp**3 + lp * (p ** (2 * k - 3) + p ** (2 * k - 4))
        quartic = (
            -(lp**4)
            + lp**2 * lp2
            + lp2**2
            + lp**2 * p ** (2 * k - 4)
            + lp2 * p ** (2 * k - 4)
            + 2 * lp**2 * p ** (2 * k - 3)
            - p ** (4 * k - 6)
        )
        assert s[3] == cubic
        assert s[4] == quartic


def test_normalized_series_identity_point():
    m = SpinMultiset((1, 1, 1, 1))
    for p in (2, 3, 5):
        s = normalized_eigen_series_local(m, p, 3)
        assert s[0] == 1
        assert s[1] == 4
        assert s[2] == 10 - Fraction(1, p)


def test_normalized_series_quadratic_coefficient():
    rng = random.Random(67)
    for _ in range(50):
        p = rng.choice([2, 3, 5])
        m = random_exact_multiset(rng, p)
        s = normalized_eigen_series_local(m, p, 2)
        h2 = a_coefficient_series(m, p, 2)[2]
        assert s[2] == h2 - Fraction(1, p)


def test_local_factor_series_method():
    m = SpinMultiset((1, 1, -1, -1))
    f = spin_reciprocal_satake(m, 3)
    inv = f.series(6)
    # 1/(1-X^2)^2 = sum (m+1) X^(2m)
    assert inv.coeffs == [1, 0, 2, 0, 3, 0, 4]
