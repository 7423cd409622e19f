import math
from fractions import Fraction as F
from itertools import combinations, product

import pytest
from hypothesis import given, settings

from conftest import rng, random_spectra, spectra
from refdata import ZETA12_SPECTRA, zeta12_triple
from rigid4.construct import (GIISpectra, MonodromyTriple, SpectraError, Twist, check_triple, goursat_params,
                              goursat_params_factored, goursat_triple, integral_triple,
                              irreducibility_product, is_irreducible, normalize_twist, qinf,
                              reducibility_witness, validate_spectra, w2_poly)
from rigid4.exactnum import CycElt, CycPoly, charpoly, exponent

T1R2 = ((F(1, 3), F(2, 3)), (F(0), F(1, 2)), (F(1, 5), F(2, 5), F(3, 5), F(4, 5)))


# -- validation -----------------------------------------------------------

def test_validate_examples():
    s = validate_spectra(("1/3", "2/3"), ("0", "1/2"), ("1/4", "1/3", "2/3", "3/4"))
    assert s.conductor == 12
    with pytest.raises(SpectraError, match="determinant"):
        validate_spectra(("1/3", "2/3"), ("0", "1/2"), ("1/4", "1/3", "2/3", "1/2"))
    with pytest.raises(SpectraError, match="alpha1 = alpha2"):
        validate_spectra(("1/2", "1/2"), ("0", "1/2"), ("1/4", "1/3", "2/3", "3/4"))
    with pytest.raises(SpectraError):
        validate_spectra(("1/3", "2/3"), ("0", "1/2"), ("1/5", "1/5", "3/5", "1"))


def test_json_round_trip():
    s = validate_spectra(*T1R2)
    assert GIISpectra.from_json(s.to_json()) == s


# -- twists ---------------------------------------------------------------

def test_normalize_twist_identity_on_normalized():
    s = validate_spectra(*T1R2)
    ns, tw = normalize_twist(s)
    assert ns == s and tw.shift == 0


def test_normalize_twist_example():
    s = validate_spectra(("1/3", "2/3"), ("1/3", "2/3"), ("1/5", "2/5", "3/5", "4/5"))
    ns, tw = normalize_twist(s)
    assert ns.beta == (0, F(1, 3))
    assert ns.gamma == tuple(exponent(g + F(1, 3)) for g in s.gamma)
    total = sum(ns.alpha) + 2 * sum(ns.beta) + sum(ns.gamma)
    assert total.denominator == 1
    assert tw.undo(ns) == s


def test_twists_compose_additively():
    s = validate_spectra(*T1R2)
    a, b = Twist(F(1, 7)), Twist(F(2, 5))
    assert b.apply(a.apply(s)) == (a + b).apply(s)


# -- parameters -----------------------------------------------------------

def _params_agree(s):
    s, _ = normalize_twist(s)
    p = goursat_params(s)
    R, BC, S = goursat_params_factored(s)
    # the factored route fixes A, D as the roots of X^2 - (A + D) X + AD
    return (p.R == R and p.BC == BC and p.S == S and p.A + p.D == R - S + 1
            and p.A * p.D == R + BC)


def test_params_cross_oracle_sample():
    r = rng(1)
    for _ in range(200):
        assert _params_agree(random_spectra(r, irreducible=False))


@settings(max_examples=50, deadline=None)
@given(spectra(irreducible=False))
def test_params_cross_oracle_property(s):
    assert _params_agree(s)


def test_degenerate_factors():
    # b c1 = 1 kills AD - BC, c1 = 1 kills AD - BC - A - D + 1
    s = validate_spectra(("1/3", "2/3"), ("0", "1/4"), ("3/4", "1/5", "2/5", "3/20"))
    assert goursat_params(s).R.is_zero()
    s = validate_spectra(("1/3", "2/3"), ("0", "1/4"), ("0", "1/5", "2/5", "9/10"))
    assert goursat_params(s).S.is_zero()


def test_E_relation():
    r = rng(2)
    for _ in range(30):
        s, _ = normalize_twist(random_spectra(r))
        p = goursat_params(s)
        assert p.E * p.R == p.A + p.D - 1


def test_unnormalized_rejected():
    s = validate_spectra(("1/3", "2/3"), ("1/3", "2/3"), ("1/5", "2/5", "3/5", "4/5"))
    with pytest.raises(SpectraError):
        goursat_params(s)


# -- triples --------------------------------------------------------------

def test_goursat_triple_example():
    s = validate_spectra(*T1R2)
    t = goursat_triple(s)
    assert t.product().is_identity()
    assert charpoly(t.T0) == CycPoly.from_roots([1, 1] + s.eigenvalues()[0])
    assert check_triple(t, s)


def test_goursat_triple_rejects_bc_zero():
    # w2(q_inf)(1/(a1 b)) = 0 makes BC vanish
    s = None
    r = rng(3)
    while s is None:
        c = random_spectra(r, irreducible=False, normalized=True)
        if reducibility_witness(c).kind.startswith("w2"):
            s = c
    assert goursat_params(s).BC.is_zero()
    with pytest.raises(SpectraError):
        goursat_triple(s)


@settings(max_examples=25, deadline=None)
@given(spectra(max_n=30, normalized=True))
def test_goursat_triple_property(s):
    assert check_triple(goursat_triple(s), s)


@settings(max_examples=25, deadline=None)
@given(spectra(max_n=30))
def test_integral_triple_property(s):
    t = integral_triple(s)
    assert check_triple(t, s)
    n = s.conductor
    a1, a2 = (CycElt.root_of_unity(x, n) for x in s.alpha)
    b1, b2 = (CycElt.root_of_unity(x, n) for x in s.beta)
    q = qinf(s, n)
    assert a1 * a2 * (b1 * b2) ** 2 * q[0] == 1
    assert t.T0.trace() == 2 + a1 + a2


def test_integral_triple_zeta12_fixture():
    got, want = integral_triple(ZETA12_SPECTRA), zeta12_triple()
    assert (got.T0, got.T1, got.Tinf) == (want.T0, want.T1, want.Tinf)


def _words(t, length):
    gens = t.gens
    for k in range(1, length + 1):
        for w in product(range(3), repeat=k):
            m = gens[w[0]]
            for i in w[1:]:
                m = m @ gens[i]
            yield charpoly(m)


def test_goursat_and_integral_triples_conjugate():
    r = rng(4)
    for _ in range(5):
        s = random_spectra(r, max_n=24, normalized=True)
        a, b = goursat_triple(s), integral_triple(s)
        assert list(_words(a, 3)) == list(_words(b, 3))


def test_triple_json_round_trip():
    t = integral_triple(validate_spectra(*T1R2))
    assert MonodromyTriple.from_json(t.to_json()) == t


# -- w2 and irreducibility ------------------------------------------------

def test_w2_examples():
    c1, c2 = CycElt.zeta(7), CycElt.zeta(7, 3)
    assert w2_poly(CycPoly.from_roots([c1, c2])) == CycPoly([-c1 * c2, 1])
    phi5 = CycPoly([1, 1, 1, 1, 1])
    x1 = CycPoly([-1, 1])
    assert w2_poly(phi5) == x1 * x1 * phi5
    assert w2_poly(x1 ** 4) == x1 ** 6
    with pytest.raises(ValueError):
        w2_poly(CycPoly([1, 2]))


@settings(max_examples=30, deadline=None)
@given(spectra(max_n=24, irreducible=False))
def test_w2_brute_force_and_galois(s):
    n = s.conductor
    q = qinf(s, n)
    roots = s.eigenvalues(n)[2]
    assert w2_poly(q) == CycPoly.from_roots([x * y for x, y in combinations(roots, 2)])
    for t in range(2, n):
        if math.gcd(t, n) == 1:
            assert w2_poly(q.galois(t)) == w2_poly(q).galois(t)


def test_irreducibility_examples():
    s = validate_spectra(("1/3", "2/3"), ("0", "1/2"), ("0", "1/10", "3/10", "3/5"))
    assert is_irreducible(s).kind == "qinf(1)=0"
    s = validate_spectra(("1/3", "2/3"), ("0", "1/4"), ("3/4", "1/5", "2/5", "3/20"))
    assert is_irreducible(s).kind == "qinf(1/b)=0"
    assert is_irreducible(validate_spectra(*T1R2)).irreducible


@settings(max_examples=60, deadline=None)
@given(spectra(max_n=40, irreducible=False, normalized=True))
def test_witness_matches_product(s):
    w = is_irreducible(s)
    assert w.irreducible == (not irreducibility_product(s).is_zero())
    p = goursat_params(s)
    assert w.irreducible == (not (p.BC * p.R * p.S).is_zero())
