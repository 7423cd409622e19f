import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from refdata import ZETA12_SPECTRA, read_table, row_spectra, zeta12_triple
from rigid4.construct import integral_triple, validate_spectra
from rigid4.exactnum import CycElt, CycMatrix
from rigid4.obstruction import (INF, QuaternionClass, _prime_divisors, format_places,
                                galois_twist_matrix, hilbert_symbol, mu_invariant, mu_norm_class,
                                mu_squarefree, mu_table, quadratic_disc, quaternion_class,
                                ramified_primes, squarefree_part, swapping_sigma)

T5R1 = (("1/3", "2/3"), ("0", "1/2"), ("1/4", "1/3", "2/3", "3/4"))
T6R1 = (("1/3", "2/3"), ("0", "1/2"), ("1/5", "2/5", "3/5", "4/5"))

nonzero = st.integers(-500, 500).filter(bool)


def _places(a, b):
    return _prime_divisors(2 * a * b) + [INF]


# -- Hilbert symbols --------------------------------------------------------

def test_hamilton_quaternions():
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, INF) == -1
    assert all(hilbert_symbol(-1, -1, p) == 1 for p in (3, 5, 7, 11))


@given(nonzero, st.sampled_from([2, 3, 5, 7, 13, INF]))
def test_split_when_b_is_one(a, place):
    assert hilbert_symbol(a, 1, place) == 1


def test_table7_example():
    assert ramified_primes(-3, -2) == (2, INF)
    assert ramified_primes(-3, -1) == (3, INF)
    assert ramified_primes(-4, 1) == ()
    assert format_places((2, INF)) == "[2,∞]"


def test_hilbert_rejects_zero():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, 5)


def test_product_formula_random():
    r = random.Random(7)
    for _ in range(1000):
        a = r.choice([-1, 1]) * r.randint(1, 10 ** 4)
        b = r.choice([-1, 1]) * r.randint(1, 10 ** 4)
        prod = 1
        for v in _places(a, b):
            prod *= hilbert_symbol(a, b, v)
        assert prod == 1


@settings(max_examples=200)
@given(nonzero, nonzero, nonzero, nonzero)
def test_symbol_properties(a, b, c, s):
    for v in (2, 3, 5, INF):
        # symmetric, bimultiplicative and blind to squares
        assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
        assert hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)
        assert hilbert_symbol(a, b * s * s, v) == hilbert_symbol(a, b, v)
        assert hilbert_symbol(a, -a, v) == 1


@settings(max_examples=200)
@given(nonzero, nonzero, st.integers(1, 50))
def test_ramified_square_invariance_and_parity(D, mu, s):
    places = ramified_primes(D, mu)
    assert len(places) % 2 == 0
    assert ramified_primes(D, mu * s * s) == places
    assert ramified_primes(D, F(mu, s * s)) == places


def test_hilbert_matches_norm_search():
    # (a, b)_p = 1 for all p iff z^2 = a x^2 + b y^2 has a nonzero solution
    for a in range(-12, 13):
        for b in range(-12, 13):
            if not a or not b:
                continue
            split = any(a * x * x + b * y * y == z * z
                        for x in range(0, 25) for y in range(0, 25) for z in range(0, 60)
                        if (x, y, z) != (0, 0, 0))
            assert split == (ramified_primes(a, b) == ())


# -- squarefree and discriminants ------------------------------------------

def test_squarefree_part():
    assert squarefree_part(F(-8, 3)) == -6
    assert squarefree_part(12) == 3
    assert squarefree_part(F(1, 4)) == 1
    with pytest.raises(ValueError):
        squarefree_part(0)


@pytest.mark.parametrize("alpha, D", [(("1/3", "2/3"), -3), (("1/4", "3/4"), -4),
                                      (("1/6", "5/6"), -3)])
def test_quadratic_disc(alpha, D):
    assert quadratic_disc(alpha) == D


def test_quadratic_disc_rejects_rational_and_higher():
    with pytest.raises(ValueError):
        quadratic_disc(("1/2", "1/2"))
    with pytest.raises(ValueError):
        quadratic_disc(("1/5", "4/5"))


# -- mu -----------------------------------------------------------------------

def test_mu_table_rows():
    assert mu_squarefree(validate_spectra(*T5R1)) == -2
    assert mu_squarefree(validate_spectra(*T6R1)) == 1


def test_quaternion_class_json():
    q = quaternion_class(validate_spectra(*T5R1))
    assert q == QuaternionClass(-3, -2, (2, INF))
    assert QuaternionClass.from_json(q.to_json()) == q


def test_trivial_sigma():
    s = ZETA12_SPECTRA
    assert swapping_sigma(s) == 1
    cd = galois_twist_matrix(zeta12_triple(), 1)
    assert cd.X_sigma.is_identity() and cd.mu_raw == 1
    assert mu_invariant(s) == cd.mu_raw


def _table_rows():
    return [row for name in ("table5.csv", "table6.csv") for row in read_table(name)]


@pytest.mark.parametrize("row", _table_rows(), ids=lambda r: r["row"])
def test_intertwiner_matches_closed_formula(row):
    s = row_spectra(row)
    sigma = swapping_sigma(s)
    assert sigma != 1
    cd = galois_twist_matrix(integral_triple(s), sigma)
    t = integral_triple(s)
    X = cd.X_sigma
    for T in (t.T0, t.T1, t.Tinf):
        assert T @ X == X @ T.galois(sigma)
    assert X @ X.galois(sigma) == CycMatrix.identity(4) * cd.mu_raw
    assert cd.mu_raw.is_rational()
    # X is fixed only up to a scalar of F, so mu is compared modulo norms from F
    D = quadratic_disc(sorted(s.alpha))
    m = squarefree_part(cd.mu_raw.to_fraction())
    assert mu_norm_class(m, D) == mu_table(s)
    assert ramified_primes(D, m) == ramified_primes(D, mu_squarefree(s))


def test_mu_scaling_by_norm():
    s = row_spectra(read_table("table5.csv")[0])
    sigma = swapping_sigma(s)
    cd = galois_twist_matrix(integral_triple(s), sigma)
    lam = 1 + CycElt.zeta(cd.X_sigma.n)
    Y = cd.X_sigma * lam
    assert Y @ Y.galois(sigma) == CycMatrix.identity(4) * (cd.mu_raw * lam * lam.galois(sigma))


def test_norm_class_examples():
    assert mu_norm_class(-6, -3) == -2
    assert mu_norm_class(-2, -4) == -1
    assert mu_norm_class(5, 12) == 5
