"""Exhaustive searches over G-II exponent data: finite monodromy and field of moduli Q."""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .construct import (GIISpectra, goursat_params, normalize_twist, reducibility_witness,
                        validate_spectra)
from .exactnum import exponent, fmt_rat, lcm_den, rat
from .hermitian import form_signature


@dataclass(frozen=True)
class SearchBounds:
    max_ab_den: int = 6
    max_g_den: int = 30
    conductors: tuple = None

    def __post_init__(self):
        if self.max_ab_den < 2 or self.max_g_den < 2:
            raise ValueError("search bounds must be at least 2")


@dataclass(frozen=True)
class FamilyPattern:
    family: int
    r: Fraction


@dataclass(frozen=True)
class SearchHit:
    spectra: GIISpectra
    irreducible: bool = True
    definite_identity: bool = True
    finite: bool = True
    signature: tuple = None
    mu: int = None
    family: FamilyPattern = field(default=None)

    def row(self):
        s = self.spectra
        sig = "" if self.signature is None else f"({self.signature[0]},{self.signature[1]})"
        fam = "" if self.family is None else f"{self.family.family}:r={fmt_rat(self.family.r)}"
        return ([fmt_rat(x) for x in s.alpha + s.beta + s.gamma]
                + [str(self.irreducible).lower(), sig,
                   "" if self.finite is None else str(self.finite).lower(),
                   "" if self.mu is None else str(self.mu), fam])

    def to_json(self):
        d = self.spectra.as_strings()
        d.update(irreducible=self.irreducible, definite_identity=self.definite_identity,
                 finite=self.finite, signature=None if self.signature is None else list(self.signature[:2]),
                 mu=self.mu,
                 family=None if self.family is None else
                 {"family": self.family.family, "r": fmt_rat(self.family.r)})
        return d

    @classmethod
    def from_json(cls, d):
        fam = d.get("family")
        return cls(GIISpectra.from_json(d), d["irreducible"], d["definite_identity"], d["finite"],
                   None if d["signature"] is None else tuple(d["signature"]), d["mu"],
                   None if fam is None else FamilyPattern(int(fam["family"]), rat(fam["r"])))


CSV_HEADER = ["alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2", "gamma3", "gamma4",
              "irreducible", "signature", "finite", "mu", "family"]


# ---------------------------------------------------------------------------
# orbits and families

def _key(s):
    return (tuple(sorted(s.alpha)), s.beta[1], tuple(sorted(s.gamma)))


def swapped(s):
    """The other scalar normalization: beta2 moved to 0 instead of beta1."""
    s, _ = normalize_twist(s)
    b = s.beta[1]
    return GIISpectra(s.alpha, (Fraction(0), exponent(-b)),
                      tuple(exponent(x + b) for x in s.gamma))


def orbit(s):
    """Galois twists of both scalar normalizations."""
    out = set()
    for base in (normalize_twist(s)[0], swapped(s)):
        n = base.conductor
        for t in range(1, max(n, 2)):
            if math.gcd(t, n) == 1:
                out.add(_key(base.twisted(t)))
    return sorted(out)


def canonical(s):
    """Least representative of the orbit under Galois twists and scalar normalization."""
    a, b, g = orbit(s)[0]
    return GIISpectra(a, (Fraction(0), b), g)


def canonical_key(s):
    return _key(canonical(s))


def family_match(s):
    """Membership in one of the two imprimitive infinite families, with r recovered."""
    s, _ = normalize_twist(s)
    if s.beta[1] != Fraction(1, 2):
        return None
    gam = sorted(s.gamma)
    half = Fraction(1, 2)
    if half in s.alpha:
        r = next(x for x in s.alpha if x != half)
        if sorted(exponent((k - r) / 4) for k in range(4)) == gam:
            return FamilyPattern(1, r)
    if sorted(s.alpha) == [Fraction(1, 3), Fraction(2, 3)]:
        for r in gam:
            cand = sorted([r] + [exponent((k - r) / 3) for k in range(3)])
            if cand == gam:
                return FamilyPattern(2, r)
    return None


# ---------------------------------------------------------------------------
# finite monodromy search

def _fractions(max_den, with_zero=False):
    out = {Fraction(p, q) for q in range(1, max_den + 1) for p in range(q)}
    if not with_zero:
        out.discard(Fraction(0))
    return sorted(out)


def _inarc(x, lo, hi, L):
    return 0 < (x - lo) % L < (hi - lo) % L


def _arcs_int(a1, a2, b, g, L):
    """Arcs test on integer residues mod L; spectra assumed irreducible and normalized."""
    mb = -b % L
    e1, e2 = (-b - a1) % L, (-b - a2) % L
    lo, hi = (e1, e2) if _inarc(mb, e1, e2, L) else (e2, e1)
    ins = [x for x in g if 0 < x < mb]
    if len(ins) != 2:
        return False
    outs = [x for x in g if x > mb]
    i, j = ins
    k, l = outs
    if not (_inarc(i + j, lo, hi, L) and _inarc(k + l, lo, hi, L)):
        return False
    for c3, c4 in ((k, l), (l, k)):
        if (_inarc(i + c3, lo, hi, L) and _inarc(j + c4, lo, hi, L)
                and not _inarc(i + c4, lo, hi, L) and not _inarc(j + c3, lo, hi, L)):
            return True
    return False


def _identity_candidates(task):
    """All gamma quadruples passing the identity-twist arcs test for fixed alpha, beta."""
    a1, a2, b, max_g_den = task[:4]
    gam = _fractions(max_g_den)
    L = lcm_den([a1, a2, b] + gam)
    A1, A2, B = int(a1 * L), int(a2 * L), int(b * L)
    G = [int(x * L) for x in gam]
    mb = -B % L
    e1, e2 = (-B - A1) % L, (-B - A2) % L
    lo, hi = (e1, e2) if _inarc(mb, e1, e2, L) else (e2, e1)
    ends = {e1, e2}
    target = -(A1 + A2 + 2 * B) % L

    def pairs(side):
        d = {}
        for x, y in combinations(side, 2):
            s = (x + y) % L
            if _inarc(s, lo, hi, L):
                d.setdefault(s, []).append((x, y))
        return d

    p_in = pairs([x for x in G if 0 < x < mb])
    p_out = pairs([x for x in G if x > mb])
    out = []
    for s1, first in p_in.items():
        second = p_out.get((target - s1) % L)
        if not second:
            continue
        for i, j in first:
            for k, l in second:
                if any((x + y) % L in ends for x in (i, j) for y in (k, l)):
                    continue
                ok = False
                for c3, c4 in ((k, l), (l, k)):
                    if (_inarc(i + c3, lo, hi, L) and _inarc(j + c4, lo, hi, L)
                            and not _inarc(i + c4, lo, hi, L) and not _inarc(j + c3, lo, hi, L)):
                        ok = True
                        break
                if ok:
                    out.append(tuple(sorted(Fraction(x, L) for x in (i, j, k, l))))
    return a1, a2, b, out


def _all_twists(s):
    n = s.conductor
    L = n
    for t in range(2, n):
        if math.gcd(t, n) != 1:
            continue
        ts, _ = normalize_twist(s.twisted(t))
        a1, a2 = (int(x * L) for x in ts.alpha)
        if not _arcs_int(a1, a2, int(ts.beta[1] * L), [int(x * L) for x in ts.gamma], L):
            return False
    return True


def _process(task):
    a1, a2, b, quads = _identity_candidates(task)
    conductors = task[4] if len(task) > 4 else None
    found = {}
    for g in quads:
        s = GIISpectra((a1, a2), (Fraction(0), b), g)
        if conductors and s.conductor not in conductors:
            continue
        if not reducibility_witness(s).irreducible:
            continue
        if not _all_twists(s):
            continue
        key = canonical_key(s)
        found.setdefault(key, s)
    return found


def _tasks(bounds):
    ab = _fractions(bounds.max_ab_den)
    out = []
    for a1, a2 in combinations(ab, 2):
        for b in ab:
            out.append((a1, a2, b, bounds.max_g_den, bounds.conductors))
    return out


def search_finite(bounds, jobs=1, progress=None):
    """Every finite-monodromy G-II spectrum within the bounds, one per orbit."""
    tasks = _tasks(bounds)
    found = {}
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = ex.map(_process, tasks, chunksize=4)
            for i, r in enumerate(results):
                found.update(r)
                if progress:
                    progress(i + 1, len(tasks))
    else:
        for i, t in enumerate(tasks):
            found.update(_process(t))
            if progress:
                progress(i + 1, len(tasks))
    hits = []
    for key in sorted(found):
        s = GIISpectra(key[0], (Fraction(0), key[1]), key[2])
        sig = form_signature(goursat_params(s))
        hits.append(SearchHit(s, True, True, True, sig[:2], None, family_match(s)))
    return hits


# ---------------------------------------------------------------------------
# field of moduli Q

# exponent sets of the cyclotomic polynomials of degree <= 4, indexed by m
_CYCLO = {m: tuple(Fraction(k, m) for k in range(m) if math.gcd(k, m) == 1)
          for m in (1, 2, 3, 4, 5, 6, 8, 10, 12)}


def _closed_sets(size, allowed):
    """Multisets of exponents of a product of distinct cyclotomic polynomials."""
    out = []
    ms = sorted(allowed)

    def rec(i, chosen, deg):
        if deg == size:
            out.append(tuple(chosen))
            return
        for j in range(i, len(ms)):
            m = ms[j]
            d = len(_CYCLO[m])
            if deg + d <= size:
                rec(j + 1, chosen + [m], deg + d)

    rec(0, [], 0)
    return out


def _exps(ms):
    return tuple(sorted(x for m in ms for x in _CYCLO[m]))


def search_moduli_Q():
    """All irreducible G-II spectra whose characteristic polynomials have rational coefficients.

    Rows come as printed: no scalar twist is applied, since it would leave Q.
    Returns (indefinite, definite) lists ordered by the cyclotomic indices of
    q0, q1, qinf.
    """
    alphas = [ms for ms in _closed_sets(2, _CYCLO) if 1 not in ms]
    betas = _closed_sets(2, _CYCLO)
    gammas = [ms for ms in _closed_sets(4, _CYCLO) if 1 not in ms]
    rows = []
    for ma in alphas:
        for mb in betas:
            for mg in gammas:
                try:
                    s = validate_spectra(_exps(ma), _exps(mb), _exps(mg))
                except ValueError:
                    continue
                if not reducibility_witness(s).irreducible:
                    continue
                rows.append(((ma, mb, mg), s))
    rows.sort(key=lambda r: r[0])
    indef, defin = [], []
    from .obstruction import mu_table
    for _, s in rows:
        ns, _ = normalize_twist(s)
        sig = form_signature(goursat_params(ns))[:2]
        hit = SearchHit(s, True, sig == (4, 0), None, sig, mu_table(s), family_match(s))
        (defin if sig == (4, 0) else indef).append(hit)
    return indef, defin
