import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_spectra, rng, spectra
from rigid4.construct import (GoursatParams, SpectraError, Twist, goursat_params,
                              goursat_triple, integral_triple, reducibility_witness,
                              validate_spectra)
from rigid4.exactnum import cyc
from rigid4.group import enumerate_group
from rigid4.hermitian import (arcs_definite, det_identity, finite_monodromy, form_signature,
                              hermitian_matrix, in_arc, minor_signs, param_definite, signature,
                              special_counts)

FIG = (("1/3", "2/3"), ("0", "1/2"), ("1/28", "9/28", "3/4", "25/28"))
T5R1 = (("1/3", "2/3"), ("0", "1/2"), ("1/4", "1/3", "2/3", "3/4"))
T1R2 = (("1/3", "2/3"), ("0", "1/2"), ("1/5", "2/5", "3/5", "4/5"))
T2R3 = (("1/4", "3/4"), ("0", "1/2"), ("1/36", "13/36", "25/36", "11/12"))
T6R5 = (("1/3", "2/3"), ("1/3", "2/3"), ("1/5", "2/5", "3/5", "4/5"))


def _params(A, D, BC):
    A, D, BC = cyc(A), cyc(D), cyc(BC)
    return GoursatParams(A, D, BC, B=BC, C=cyc(1))


# -- the form -------------------------------------------------------------

def test_form_invariant_and_hermitian_sample():
    r = rng(10)
    for _ in range(40):
        s = random_spectra(r, max_n=30, normalized=True)
        p = goursat_params(s)
        H = hermitian_matrix(p).H
        assert H.conj_transpose() == H
        for T in goursat_triple(s).gens:
            assert T.conj_transpose() @ H @ T == H


@settings(max_examples=30)
@given(spectra(normalized=True))
def test_det_identity(s):
    p = goursat_params(s)
    assert hermitian_matrix(p).det() == det_identity(p)
    assert det_identity(p) == p.BC ** 2 * p.S ** 3 * p.R ** 3


@given(st.fractions(), st.fractions(), st.fractions())
def test_det_identity_on_rational_parameters(A, D, BC):
    p = _params(A, D, BC)
    assert hermitian_matrix(p).det() == det_identity(p)


# -- parameter inequalities ------------------------------------------------

def test_param_definite_examples():
    assert param_definite(_params(F(1, 2), F(1, 2), F(1, 8))).verdict == "positive"
    assert param_definite(_params(F(1, 2), F(1, 2), F(-1, 8))).verdict != "positive"
    assert param_definite(_params(F(1, 2), F(1, 2), F(1, 4))).verdict == "degenerate"


@given(st.fractions(-2, 2), st.fractions(-2, 2), st.fractions(-2, 2))
def test_param_definite_matches_minors(A, D, BC):
    p = _params(A, D, BC)
    v = param_definite(p).verdict
    if v == "degenerate":
        assert det_identity(p) == 0
        return
    pos, neg, zero = signature(hermitian_matrix(p).H)
    minors = minor_signs(hermitian_matrix(p).H)
    definite = zero == 0 and 0 in (pos, neg)
    assert (v == "positive") == definite
    if all(m != 0 for m in minors):
        # Sylvester: all leading minors positive, or alternating from negative
        sylvester = all(m > 0 for m in minors) or all(m == (-1) ** (k + 1) for k, m in enumerate(minors))
        assert sylvester == definite


# -- arcs -----------------------------------------------------------------

def test_in_arc_wraps():
    assert in_arc(F(1, 10), F(9, 10), F(1, 5))
    assert not in_arc(F(9, 10), F(9, 10), F(1, 5))
    assert in_arc(F(1, 2), F(1, 5), F(9, 10))


def test_arcs_examples():
    assert arcs_definite(validate_spectra(*FIG)).definite
    assert not arcs_definite(validate_spectra(*T5R1)).definite
    assert arcs_definite(validate_spectra(*T1R2)).definite


def test_arcs_rejects_reducible():
    s = validate_spectra(("1/3", "2/3"), ("0", "1/2"), ("0", "1/10", "3/10", "3/5"))
    with pytest.raises(SpectraError):
        arcs_definite(s)


@settings(max_examples=200)
@given(spectra(normalized=True))
def test_arcs_agree_with_parameters(s):
    v = arcs_definite(s)
    p = param_definite(goursat_params(s))
    assert v.definite == (p.verdict == "positive")


@settings(max_examples=100)
@given(spectra(normalized=True))
def test_signature_agrees_with_arcs(s):
    sig = form_signature(goursat_params(s))
    assert (sig == (4, 0, 0)) == arcs_definite(s).definite


# -- special case counts ----------------------------------------------------

def test_special_counts_examples():
    assert special_counts(F(1, 3), [F(1, 28), F(9, 28), F(3, 4), F(25, 28)]) == (2, 4)
    assert special_counts(F(1, 3), [F(1, 4), F(1, 3), F(2, 3), F(3, 4)])[1] != 4
    assert special_counts(F(1, 3), [F(1, 20), F(1, 10), F(1, 5), F(3, 20)])[0] == 4
    with pytest.raises(ValueError):
        special_counts(F(2, 3), [F(1, 5)] * 4)


@settings(max_examples=150)
@given(st.integers(5, 60).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, (n - 1) // 2), st.lists(st.integers(1, n - 1), min_size=3, max_size=3, unique=True))))
def test_special_counts_decide_definiteness(data):
    n, a, gs = data
    a1 = F(a, n)
    if a1 >= F(1, 2):
        return
    g = [F(x, n) for x in gs]
    g4 = (-(1 + 1 + sum(g))) % 1
    try:
        s = validate_spectra((a1, 1 - a1), (0, F(1, 2)), g + [g4])
    except SpectraError:
        return
    if not reducibility_witness(s).irreducible or arcs_definite(s).degenerate:
        return
    assert (special_counts(a1, s.gamma) == (2, 4)) == arcs_definite(s).definite


# -- finite monodromy -------------------------------------------------------

def test_finite_examples():
    assert finite_monodromy(validate_spectra(*T1R2))[0]
    assert finite_monodromy(validate_spectra(*T2R3))[0]
    assert not finite_monodromy(validate_spectra(*T5R1))[0]


def test_table6_row5_finite_with_group_oracle():
    # the group closes at 720 elements, so definiteness at every twist is expected
    s = validate_spectra(*T6R5)
    ok, reports = finite_monodromy(s)
    assert ok and all(r.verdict == "definite" for r in reports)
    assert enumerate_group(integral_triple(s).gens).order == 720


def test_finite_parallel_matches_serial():
    s = validate_spectra(*T2R3)
    assert finite_monodromy(s, jobs=2) == finite_monodromy(s)


@settings(max_examples=40)
@given(spectra(max_n=40), st.integers(1, 200))
def test_finite_invariant_under_galois(s, t):
    if math.gcd(t, s.conductor) != 1:
        return
    assert finite_monodromy(s)[0] == finite_monodromy(s.twisted(t))[0]


@settings(max_examples=40)
@given(spectra(max_n=30), st.integers(0, 11))
def test_finite_invariant_under_scalar_twist(s, k):
    assert finite_monodromy(s)[0] == finite_monodromy(Twist(F(k, 12)).apply(s))[0]
