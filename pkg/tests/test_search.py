import math
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import spectra
from rigid4.construct import SpectraError, Twist, is_irreducible, normalize_twist, validate_spectra
from rigid4.hermitian import arcs_definite, finite_monodromy
from rigid4.search import (FamilyPattern, SearchBounds, SearchHit, _fractions, canonical,
                           canonical_key, family_match, orbit, search_finite, search_moduli_Q)
from table8 import instantiate

T1R2 = (("1/3", "2/3"), ("0", "1/2"), ("1/5", "2/5", "3/5", "4/5"))


# -- families -------------------------------------------------------------

def test_family1_example():
    s = instantiate(1, F(1, 3))
    assert sorted(s.alpha) == [F(1, 3), F(1, 2)]
    assert family_match(s) == FamilyPattern(1, F(1, 3))


def test_family2_example():
    assert family_match(instantiate(2, F(1, 5))) == FamilyPattern(2, F(1, 5))


def test_family2_quarter_is_degenerate():
    # r = 1/4 repeats 1/4 among the gammas
    s = instantiate(2, F(1, 4))
    assert len(set(s.gamma)) < 4
    with pytest.raises(SpectraError):
        validate_spectra(s.alpha, s.beta, s.gamma)


def test_sporadic_not_matched():
    assert family_match(validate_spectra(*T1R2)) is None


@settings(max_examples=100)
@given(st.sampled_from([1, 2]), st.integers(2, 40).flatmap(lambda q: st.builds(F, st.integers(1, q - 1), st.just(q))))
def test_family_recovers_r(family, r):
    s = instantiate(family, r)
    if family == 1 and r == F(1, 2):
        return
    try:
        s = validate_spectra(s.alpha, s.beta, s.gamma)
    except SpectraError:
        return
    got = family_match(s)
    assert got is not None and got.family == family
    assert instantiate(family, got.r) == s


# -- canonical orbits -----------------------------------------------------

@settings(max_examples=60)
@given(spectra(max_n=40), st.integers(1, 500))
def test_canonical_idempotent_and_twist_invariant(s, t):
    c = canonical(s)
    assert canonical(c) == c
    assert canonical_key(s) in orbit(s)
    assert canonical_key(s) == min(orbit(s))
    if math.gcd(t, s.conductor) == 1:
        assert canonical_key(s.twisted(t)) == canonical_key(s)


@settings(max_examples=40)
@given(spectra(max_n=30), st.integers(0, 29))
def test_canonical_scalar_twist_invariant(s, k):
    assert canonical_key(Twist(F(k, 30)).apply(s)) == canonical_key(s)


# -- finite search ----------------------------------------------------------

def test_bounds_validated():
    with pytest.raises(ValueError):
        SearchBounds(1, 30)


def test_tiny_bounds_have_no_primitive_hit():
    assert search_finite(SearchBounds(4, 4)) == []
    assert search_finite(SearchBounds(2, 2)) == []


def test_conductor_whitelist_can_empty_the_window():
    assert search_finite(SearchBounds(6, 12, conductors=(7,))) == []


def _brute(ab, gd):
    """Every valid irreducible spectrum in the box, decided by finite_monodromy alone."""
    keys = set()
    A, G = _fractions(ab), _fractions(gd)
    for a1, a2 in combinations(A, 2):
        for b in A:
            for g in combinations(G, 4):
                if (a1 + a2 + 2 * b + sum(g)).denominator != 1:
                    continue
                try:
                    s = validate_spectra((a1, a2), (0, b), g)
                except SpectraError:
                    continue
                if is_irreducible(s).irreducible and finite_monodromy(s)[0]:
                    keys.add(canonical_key(s))
    return keys


def test_search_matches_brute_force():
    hits = search_finite(SearchBounds(4, 8))
    assert {canonical_key(h.spectra) for h in hits} == _brute(4, 8)
    assert len(hits) == 2


def test_hits_recheck_and_monotone():
    small = search_finite(SearchBounds(4, 8))
    big = search_finite(SearchBounds(6, 12))
    keys = {canonical_key(h.spectra) for h in big}
    assert {canonical_key(h.spectra) for h in small} <= keys
    assert len(big) == 8
    for h in big:
        assert is_irreducible(h.spectra).irreducible
        assert arcs_definite(h.spectra).definite
        assert finite_monodromy(h.spectra)[0]
        assert h.signature == (4, 0) and h.finite and h.definite_identity
        assert SearchHit.from_json(h.to_json()) == h
    fams = [h.family for h in big if h.family]
    assert {f.family for f in fams} == {1, 2}


def test_search_parallel_matches_serial():
    b = SearchBounds(6, 12)
    assert search_finite(b, jobs=2) == search_finite(b)


def test_search_progress_callback():
    seen = []
    search_finite(SearchBounds(3, 4), progress=lambda i, n: seen.append((i, n)))
    assert seen and seen[-1][0] == seen[-1][1]


# -- moduli Q -------------------------------------------------------------------

def test_moduli_q_counts_and_properties():
    indef, defin = search_moduli_Q()
    assert (len(indef), len(defin)) == (38, 18)
    for h in indef + defin:
        s = h.spectra
        # Galois stable exponent sets: each charpoly has rational coefficients
        for part in (s.alpha, s.beta, s.gamma):
            n = math.lcm(*(x.denominator for x in part))
            for t in range(1, n):
                if math.gcd(t, n) == 1:
                    assert sorted((x * t) % 1 for x in part) == sorted(part)
        assert is_irreducible(s).irreducible
        assert h.mu is not None
    assert all(h.signature == (4, 0) for h in defin)
    assert all(h.signature == (2, 2) for h in indef)
