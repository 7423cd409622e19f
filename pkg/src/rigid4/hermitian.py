"""Invariant Hermitian form, signatures and definiteness criteria."""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .construct import (GIISpectra, SpectraError, goursat_params, normalize_twist,
                        reducibility_witness)
from .exactnum import CycMatrix, charpoly, cyc, exponent


@dataclass(frozen=True)
class HermitianForm:
    H: CycMatrix
    params: object

    def det(self):
        return self.H.det()


def hermitian_matrix(p):
    # the printed matrix times AD - BC, so that E never has to be inverted
    A, B, C, D, BC, R = p.A, p.B, p.C, p.D, p.BC, p.R
    s = A + D - 1
    H = CycMatrix([
        [C * (R - D * s), BC * s, R * C * (1 - D), R * BC],
        [BC * s, B * (R - A * s), R * BC, R * B * (1 - A)],
        [R * C * (1 - D), R * BC, R * C * (1 - D), R * BC],
        [R * BC, R * B * (1 - A), R * BC, R * B * (1 - A)]])
    return HermitianForm(H, p)


def det_identity(p):
    return p.BC ** 2 * p.S ** 3 * p.R ** 3


def signature(H, t=1):
    """(positive, negative, zero) eigenvalue counts of H under the t-th embedding."""
    q = charpoly(H)
    signs = [c.real_sign(t) for c in q.c]
    zero = next(i for i, s in enumerate(signs) if s != 0)
    signs = signs[zero:]

    def changes(seq):
        seq = [x for x in seq if x != 0]
        return sum(1 for a, b in zip(seq, seq[1:]) if a != b)

    pos = changes(signs)
    neg = changes([s * (-1) ** (i + zero) for i, s in enumerate(signs)])
    return pos, neg, zero


def minor_signs(H, t=1):
    out = []
    for k in range(1, H.size + 1):
        sub = CycMatrix([r[:k] for r in H.rows[:k]])
        out.append(sub.det().real_sign(t))
    return out


@dataclass(frozen=True)
class DefinitenessReport:
    twist: int
    verdict: str
    certificate: tuple = ()


def param_definite(p, t=1):
    """Verdict from the inequalities 0<A,D<1, 0<BC<AD, 0<BC<(1-A)(1-D)."""
    if p.BC.is_zero() or p.R.is_zero() or p.S.is_zero():
        return DefinitenessReport(t, "degenerate")
    vals = (p.A, p.D, 1 - p.A, 1 - p.D, p.BC, p.R, p.S)
    signs = tuple(v.real_sign(t) for v in vals)
    if all(s > 0 for s in signs):
        return DefinitenessReport(t, "positive", signs)
    pos, neg, _ = signature(hermitian_matrix(p).H, t)
    verdict = "negative" if pos == 0 else "indefinite"
    return DefinitenessReport(t, verdict, signs)


# ---------------------------------------------------------------------------
# arcs on the circle of exponents

def in_arc(x, lo, hi):
    """x strictly inside the arc running counterclockwise from lo to hi."""
    return 0 < (x - lo) % 1 < (hi - lo) % 1


@dataclass(frozen=True)
class ArcsVerdict:
    definite: bool
    degenerate: bool = False
    labeling: tuple = ()
    arc1: tuple = ()
    arc2: tuple = ()


_SPLITS = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)),
           ((1, 2), (0, 3)), ((1, 3), (0, 2)), ((2, 3), (0, 1))]


def arcs_definite(s):
    if not s.normalized:
        s, _ = normalize_twist(s)
    if not reducibility_witness(s).irreducible:
        raise SpectraError("arcs criterion needs irreducible spectra")
    b = s.beta[1]
    mb = exponent(-b)
    g = s.gamma
    e1, e2 = exponent(-b - s.alpha[0]), exponent(-b - s.alpha[1])
    arc2 = (e1, e2) if in_arc(mb, e1, e2) else (e2, e1)
    ends = {arc2[0], arc2[1]}
    if any(x in (0, mb) for x in g) or any(exponent(x + y) in ends for x, y in combinations(g, 2)):
        return ArcsVerdict(False, degenerate=True)

    def inside2(x, y):
        return in_arc(exponent(x + y), *arc2)

    for arc1 in ((Fraction(0), mb), (mb, Fraction(0))):
        for (i, j), (k, l) in _SPLITS:
            if not (in_arc(g[i], *arc1) and in_arc(g[j], *arc1)):
                continue
            if in_arc(g[k], *arc1) or in_arc(g[l], *arc1):
                continue
            if not (inside2(g[i], g[j]) and inside2(g[k], g[l])):
                continue
            for c3, c4 in ((k, l), (l, k)):
                if (inside2(g[i], g[c3]) and inside2(g[j], g[c4])
                        and not inside2(g[i], g[c4]) and not inside2(g[j], g[c3])):
                    return ArcsVerdict(True, labeling=(i, j, c3, c4), arc1=arc1, arc2=arc2)
    return ArcsVerdict(False, arc2=arc2)


def special_counts(alpha1, gamma):
    """(n1, n2) for q1 = (T-1)^2 (T+1)^2 and T0 exponents (0, 0, alpha1, 1-alpha1)."""
    alpha1 = Fraction(alpha1)
    if not 0 < alpha1 < Fraction(1, 2):
        raise ValueError("special case needs 0 < alpha1 < 1/2")
    gamma = [exponent(x) for x in gamma]
    half = Fraction(1, 2)
    n1 = sum(1 for x in gamma if 0 < x < half)
    n2 = sum(1 for x, y in combinations(gamma, 2)
             if half - alpha1 < exponent(x + y) < half + alpha1)
    return n1, n2


def _units(n):
    return [t for t in range(1, n) if math.gcd(t, n) == 1] or [1]


def _twist_report(args):
    s, t = args
    ts, _ = normalize_twist(s.twisted(t))
    v = arcs_definite(ts)
    verdict = "degenerate" if v.degenerate else ("definite" if v.definite else "indefinite")
    return DefinitenessReport(t, verdict, v.labeling)


def finite_monodromy(s, jobs=1):
    """Definite Hermitian form under every Galois twist."""
    if not reducibility_witness(s).irreducible:
        raise SpectraError("finite monodromy test needs irreducible spectra")
    work = [(s, t) for t in _units(s.conductor)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            reports = list(ex.map(_twist_report, work))
    else:
        reports = [_twist_report(w) for w in work]
    return all(r.verdict == "definite" for r in reports), reports


def form_signature(p, t=1):
    """Signature of the invariant form, reported as (larger, smaller, zero).

    The form is only defined up to a real scalar, so (4,0) and (0,4) are the
    same class; the stored matrix carries an extra factor AD - BC, which is
    real and is divided back out of the sign count.
    """
    pos, neg, zero = signature(hermitian_matrix(p).H, t)
    return max(pos, neg), min(pos, neg), zero
