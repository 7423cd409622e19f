"""G-II spectra, Goursat parameters, monodromy triples and irreducibility."""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exactnum import (CycElt, CycMatrix, CycPoly, charpoly, cyc, exponent, fmt_rat,
                       lcm_den, rat)


@dataclass(frozen=True)
class GIISpectra:
    """Exponents of T0 (1, 1, a1, a2), T1 (b1, b1, b2, b2) and Tinf (c1..c4)."""

    alpha: tuple
    beta: tuple
    gamma: tuple

    @property
    def conductor(self):
        return lcm_den(self.alpha + self.beta + self.gamma)

    @property
    def normalized(self):
        return self.beta[0] == 0

    def twisted(self, t):
        """Galois twist: every exponent multiplied by t mod 1."""
        f = lambda xs: tuple(exponent(t * x) for x in xs)
        return GIISpectra(f(self.alpha), f(self.beta), f(self.gamma))

    def eigenvalues(self, n=None):
        n = n or self.conductor
        e = lambda x: CycElt.root_of_unity(x, n)
        return ([e(x) for x in self.alpha], [e(x) for x in self.beta], [e(x) for x in self.gamma])

    def as_strings(self):
        return {k: [fmt_rat(x) for x in getattr(self, k)] for k in ("alpha", "beta", "gamma")}

    to_json = as_strings

    @classmethod
    def from_json(cls, d):
        return validate_spectra(d["alpha"], d["beta"], d["gamma"])

    def __str__(self):
        s = self.as_strings()
        return (f"alpha=({','.join(s['alpha'])}) beta=({','.join(s['beta'])}) "
                f"gamma=({','.join(s['gamma'])})")


class SpectraError(ValueError):
    pass


def validate_spectra(alpha, beta, gamma):
    alpha = tuple(rat(x) for x in alpha)
    beta = tuple(rat(x) for x in beta)
    gamma = tuple(rat(x) for x in gamma)
    if len(alpha) != 2 or len(beta) != 2 or len(gamma) != 4:
        raise SpectraError("need 2 alpha, 2 beta and 4 gamma exponents")
    for x in alpha + beta + gamma:
        if not 0 <= x < 1:
            raise SpectraError(f"exponent {fmt_rat(x)} outside [0,1)")
    total = sum(alpha) + 2 * sum(beta) + sum(gamma)
    if total.denominator != 1:
        raise SpectraError(f"determinant condition fails: exponent sum {fmt_rat(total)} not integral")
    if alpha[0] == alpha[1]:
        raise SpectraError("alpha1 = alpha2")
    if 0 in alpha:
        raise SpectraError("alpha must avoid the double eigenvalue 1 (exponent 0)")
    if beta[0] == beta[1]:
        raise SpectraError("beta1 = beta2")
    if len(set(gamma)) != 4:
        raise SpectraError("gamma exponents must be distinct")
    return GIISpectra(alpha, beta, gamma)


@dataclass(frozen=True)
class Twist:
    """Scalar twist: T1 multiplied by e(-shift), Tinf by e(+shift)."""

    shift: Fraction = Fraction(0)

    def __add__(self, other):
        return Twist(exponent(self.shift + other.shift))

    def apply(self, s):
        b = tuple(exponent(x - self.shift) for x in s.beta)
        g = tuple(exponent(x + self.shift) for x in s.gamma)
        return GIISpectra(s.alpha, b, g)

    def undo(self, s):
        return Twist(exponent(-self.shift)).apply(s)


def normalize_twist(s):
    tw = Twist(s.beta[0])
    return tw.apply(s), tw


# ---------------------------------------------------------------------------
# Goursat parameters

@dataclass(frozen=True)
class GoursatParams:
    A: CycElt
    D: CycElt
    BC: CycElt
    B: CycElt
    C: CycElt
    spectra: GIISpectra = field(compare=False, default=None)

    @property
    def R(self):
        """AD - BC."""
        return self.A * self.D - self.BC

    @property
    def S(self):
        """AD - BC - A - D + 1."""
        return self.R - self.A - self.D + 1

    @property
    def E(self):
        r = self.R
        return None if r.is_zero() else (self.A + self.D - 1) / r


def qinf(s, n=None):
    _, _, c = s.eigenvalues(n)
    return CycPoly.from_roots(c)


def _h(m, u, v):
    """(u^m - v^m)/(u - v) as a polynomial expression, valid for u = v."""
    if m == 0:
        return cyc(0)
    if m < 0:
        return -_h(-m, u, v) / (u * v) ** (-m)
    acc = cyc(0)
    for i in range(m):
        acc = acc + u ** i * v ** (m - 1 - i)
    return acc


def _dd(q, u, v):
    # divided difference of g(x) = x^2 q(1/x) between u and v
    return sum((q[k] * _h(2 - k, u, v) for k in range(5)), cyc(0))


def _require_normalized(s):
    if not s.normalized:
        raise SpectraError("spectra must be normalized (beta1 = 0); use normalize_twist")


def goursat_params(s):
    """A, D, BC from the characteristic polynomial of Tinf."""
    _require_normalized(s)
    n = s.conductor
    (a1, a2), (_, b), _ = s.eigenvalues(n)
    q = qinf(s, n)
    A = _dd(q, a1, b) * b ** 2 * a1 ** 2 * a2 / ((b - 1) * (a1 - 1) * (a2 - a1))
    D = _dd(q, a2, b) * b ** 2 * a1 * a2 ** 2 / ((b - 1) * (a2 - 1) * (a1 - a2))
    ib = b.inverse()
    R = b ** 2 * q(ib) * b ** 2 * a1 * a2 / ((b - 1) ** 2 * (a1 - 1) * (a2 - 1))
    BC = A * D - R
    return GoursatParams(A, D, BC, B=BC, C=cyc(1, n), spectra=s)


def goursat_params_factored(s):
    """(AD - BC, BC, AD - BC - A - D + 1) from the product factorizations."""
    _require_normalized(s)
    n = s.conductor
    (a1, a2), (_, b), c = s.eigenvalues(n)
    base = (1 - b) ** 2 * (1 - a1) * (1 - a2)
    R = a1 * a2
    for ci in c:
        R = R * (1 - b * ci)
    R = R / base
    BC = b * a2 ** 3
    for ci, cj in combinations(c, 2):
        BC = BC * (1 - a1 * b * ci * cj)
    BC = BC / ((a1 - a2) ** 2 * base)
    S = cyc(1)
    for ci in c:
        S = S * (1 - ci) / ci
    S = S / base
    return R, BC, S


# ---------------------------------------------------------------------------
# triples

@dataclass(frozen=True)
class MonodromyTriple:
    T0: CycMatrix
    T1: CycMatrix
    Tinf: CycMatrix
    flavor: str = "goursat-form"

    @property
    def gens(self):
        return [self.T0, self.T1, self.Tinf]

    def product(self):
        return self.T0 @ self.T1 @ self.Tinf

    def to_json(self):
        return {"flavor": self.flavor, "T0": self.T0.to_json(), "T1": self.T1.to_json(),
                "Tinf": self.Tinf.to_json()}

    @classmethod
    def from_json(cls, d):
        return cls(CycMatrix.from_json(d["T0"]), CycMatrix.from_json(d["T1"]),
                   CycMatrix.from_json(d["Tinf"]), d.get("flavor", "goursat-form"))


def goursat_triple(s, allow_degenerate=False):
    p = goursat_params(s)
    if p.BC.is_zero() and not allow_degenerate:
        raise SpectraError("BC = 0: reducible, no Goursat-form triple in the default gauge")
    n = s.conductor
    (a1, a2), (_, b), _ = s.eigenvalues(n)
    A, B, C, D = p.A, p.B, p.C, p.D
    T0 = CycMatrix([[1, 0, A * (1 - a1), B * (1 - a2)],
                    [0, 1, C * (1 - a1), D * (1 - a2)],
                    [0, 0, a1, 0],
                    [0, 0, 0, a2]])
    T1 = CycMatrix([[b, 0, 0, 0],
                    [0, b, 0, 0],
                    [1 - b, 0, 1, 0],
                    [0, 1 - b, 0, 1]])
    return MonodromyTriple(T0, T1, (T0 @ T1).inverse(), "goursat-form")


def integral_triple(s):
    """Triple with Tinf in companion form and entries in Z[sigma, tau, a1].

    Three entries of T1 carry the opposite sign to the printed matrix
    ([1][0], [1][3], [2][0]); only with these is T0 T1 Tinf = I for the
    printed T0 when sigma1 != 0.
    """
    n = s.conductor
    alpha = sorted(s.alpha)
    a1 = CycElt.root_of_unity(alpha[0], n)
    a2 = CycElt.root_of_unity(alpha[1], n)
    b1, b2 = (CycElt.root_of_unity(x, n) for x in s.beta)
    s1, s2 = b1 + b2, b1 * b2
    q = qinf(s, n)
    t1, t2, t3, t4 = -q[3], q[2], -q[1], q[0]
    i2 = s2.inverse()
    ia1 = a1.inverse()
    Tinf = CycMatrix.companion(q)
    T0 = CycMatrix([
        [a1 + 1, 0, -i2, a2 * (s1 * t4 - t3)],
        [-s1 * a1, 1, s1 * i2, a2 * (t2 - s2 * t4) - i2],
        [s2 * a1, 0, 0, -a2 * t1 + s1 * i2],
        [0, 0, 0, a2]])
    T1 = CycMatrix([
        [s1, 0, 0, i2 * ia1],
        [-s2 * (a1 + 1), s1, 1, -s1 * i2 * ia1],
        [s1 * s2 * a1, -s2, 0, 1 + ia1],
        [-s2 ** 2 * a1, 0, 0, 0]])
    return MonodromyTriple(T0, T1, Tinf, "integral-form")


def prescribed_charpolys(s):
    n = s.conductor
    (a1, a2), (b1, b2), c = s.eigenvalues(n)
    one = cyc(1, n)
    return (CycPoly.from_roots([one, one, a1, a2]),
            CycPoly.from_roots([b1, b1, b2, b2]),
            CycPoly.from_roots(c))


def check_triple(t, s):
    q0, q1, qi = prescribed_charpolys(s)
    return (t.product().is_identity() and charpoly(t.T0) == q0 and charpoly(t.T1) == q1
            and charpoly(t.Tinf) == qi)


# ---------------------------------------------------------------------------
# pairwise products and irreducibility

def _power_sums(q, k):
    """p_1..p_k of the roots of a monic q via Newton's identities."""
    n = q.degree
    e = [cyc(1)] + [q[n - i] * (-1) ** i for i in range(1, n + 1)]
    p = [None]
    for m in range(1, k + 1):
        acc = cyc(0)
        for i in range(1, min(m - 1, n) + 1):
            acc = acc + (-1) ** (i - 1) * e[i] * p[m - i]
        if m <= n:
            acc = acc + (-1) ** (m - 1) * m * e[m]
        p.append(acc)
    return p


def _from_power_sums(p, d):
    # elementary symmetric functions from power sums, then the monic polynomial
    e = [cyc(1)]
    for m in range(1, d + 1):
        acc = cyc(0)
        for i in range(1, m + 1):
            acc = acc + (-1) ** (i - 1) * e[m - i] * p[i]
        e.append(acc / m)
    return CycPoly([e[d - k] * (-1) ** (d - k) for k in range(d + 1)])


def w2_poly(q):
    """Monic polynomial whose roots are the products c_i c_j, i < j."""
    if not q.is_monic():
        raise ValueError("w2 needs a monic polynomial")
    n = q.degree
    d = n * (n - 1) // 2
    p = _power_sums(q, 2 * d)
    pw = [None] + [(p[k] * p[k] - p[2 * k]) / 2 for k in range(1, d + 1)]
    return _from_power_sums(pw, d)


@dataclass(frozen=True)
class ReducibilityWitness:
    kind: str
    labeling: tuple = ()

    @property
    def irreducible(self):
        return self.kind == "none"


def irreducibility_product(s):
    """q_inf(1) * q_inf(1/b) * w2(q_inf)(1/(a1 b)), normalized spectra."""
    _require_normalized(s)
    n = s.conductor
    (a1, _), (_, b), _ = s.eigenvalues(n)
    q = qinf(s, n)
    return q(cyc(1, n)) * q(b.inverse()) * w2_poly(q)((a1 * b).inverse())


def reducibility_witness(s):
    """Decide reducibility from exponents alone (exact rational comparisons)."""
    b = s.beta[1] - s.beta[0]
    g = [exponent(x + s.beta[0]) for x in s.gamma]
    a1 = s.alpha[0]
    for i, x in enumerate(g):
        if x == 0:
            rest = tuple(j for j in range(4) if j != i)
            return ReducibilityWitness("qinf(1)=0", rest + (i,))
    for i, x in enumerate(g):
        if exponent(b + x) == 0:
            rest = tuple(j for j in range(4) if j != i)
            return ReducibilityWitness("qinf(1/b)=0", rest + (i,))
    for i, j in combinations(range(4), 2):
        if exponent(a1 + b + g[i] + g[j]) == 0:
            k, l = (m for m in range(4) if m not in (i, j))
            return ReducibilityWitness("w2(qinf)(1/(a1 b))=0", (k, l, i, j))
    return ReducibilityWitness("none")


def is_irreducible(s):
    """Witness for the product criterion; exact in Q(zeta_N)."""
    w = reducibility_witness(s)
    if s.normalized:
        prod_zero = irreducibility_product(s).is_zero()
        if prod_zero == w.irreducible:
            raise AssertionError("exponent labeling disagrees with the product criterion")
    return w
