import os
import random
import sys
from fractions import Fraction

from hypothesis import HealthCheck, assume, settings, strategies as st

from rigid4.construct import SpectraError, reducibility_witness, validate_spectra

settings.register_profile("default", suppress_health_check=[HealthCheck.filter_too_much,
                                                            HealthCheck.too_slow], deadline=None)
settings.load_profile("default")

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "repro"))


def spectra_from(n, ks):
    """Spectra at conductor dividing n from 7 free numerators; gamma4 closes the determinant."""
    a1, a2, b1, b2, g1, g2, g3 = (Fraction(k % n, n) for k in ks)
    g4 = Fraction((-(a1 + a2 + 2 * b1 + 2 * b2 + g1 + g2 + g3) * n) % n, n)
    return validate_spectra((a1, a2), (b1, b2), (g1, g2, g3, g4))


def random_spectra(rng, max_n=60, irreducible=True, normalized=False):
    while True:
        n = rng.randint(2, max_n)
        ks = [rng.randrange(n) for _ in range(7)]
        if normalized:
            ks[2] = 0
        try:
            s = spectra_from(n, ks)
        except SpectraError:
            continue
        if irreducible and not reducibility_witness(s).irreducible:
            continue
        return s


@st.composite
def spectra(draw, max_n=60, irreducible=True, normalized=False):
    n = draw(st.integers(3, max_n))
    alpha = draw(st.lists(st.integers(1, n - 1), min_size=2, max_size=2, unique=True))
    beta = draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    if normalized:
        beta[0] = 0
    gamma = draw(st.lists(st.integers(0, n - 1), min_size=3, max_size=3, unique=True))
    try:
        s = spectra_from(n, alpha + beta + gamma)
    except SpectraError:
        assume(False)
    if irreducible:
        assume(reducibility_witness(s).irreducible)
    return s


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
