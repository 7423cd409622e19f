"""Linear differential operators with polynomial coefficients; indicial equations."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import flint

from ..exactnum import fmt_rat, rat
from .series import ZERO, PowerSeries


def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


@dataclass(frozen=True)
class LinearOperator:
    """sum_i p_i(x) (d/dx)^i; p_i given lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(tuple(_strip(p)) for p in self.coeffs)
        object.__setattr__(self, "coeffs", cs)
        if not cs or not cs[-1]:
            raise ValueError("leading coefficient of the operator must be nonzero")

    @property
    def order(self):
        return len(self.coeffs) - 1

    def apply(self, y):
        out = PowerSeries.constant(ZERO, max(y.prec - self.order, 0))
        d = y
        for i, p in enumerate(self.coeffs):
            if i:
                d = d.derivative()
            if p:
                out = out + PowerSeries.from_poly(p, d.prec) * d
        return out

    def to_json(self):
        return [[_fmt(c) for c in p] for p in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(rat(c) for c in p) for p in data))

    def shifted(self, a):
        """The operator in the variable u = x - a."""
        out = []
        for p in self.coeffs:
            q = [Fraction(0)] * len(p)
            for k, c in enumerate(p):
                for j in range(k + 1):
                    q[j] += c * comb(k, j) * Fraction(a) ** (k - j)
            out.append(q)
        return LinearOperator(tuple(out))


def _fmt(c):
    return fmt_rat(c) if isinstance(c, (int, Fraction)) else c.to_json()


def _falling(i):
    """s (s-1) ... (s-i+1) as a coefficient list in s."""
    p = flint.fmpq_poly([1])
    for j in range(i):
        p *= flint.fmpq_poly([-j, 1])
    return p


def _ord(p):
    return next(k for k, c in enumerate(p) if c != 0)


class IrregularSingularity(ValueError):
    pass


@dataclass(frozen=True)
class IndicialResult:
    polynomial: tuple
    roots: tuple
    irrational_factors: tuple = ()

    @property
    def complete(self):
        return not self.irrational_factors


def indicial_polynomial(L, point):
    """Indicial polynomial in s (solutions ~ x^s at 0 and 1, ~ x^(-s) at infinity)."""
    if point == 1:
        L = L.shifted(1)
        point = 0
    m = L.order
    terms = [(i, p) for i, p in enumerate(L.coeffs) if p]
    for _, p in terms:
        for c in p:
            if not isinstance(c, (int, Fraction)):
                raise TypeError("indicial polynomials need rational coefficients")
    if point == 0:
        w = {i: _ord(p) - i for i, p in terms}
        wm = w[m]
        if min(w.values()) < wm:
            raise IrregularSingularity("irregular singular point at 0")
        poly = flint.fmpq_poly()
        for i, p in terms:
            if w[i] == wm:
                c = rat(p[_ord(p)])
                poly += _falling(i) * flint.fmpq(c.numerator, c.denominator)
        return poly
    if point in ("inf", "oo", float("inf")):
        w = {i: len(p) - 1 - i for i, p in terms}
        wm = w[m]
        if max(w.values()) > wm:
            raise IrregularSingularity("irregular singular point at infinity")
        poly = flint.fmpq_poly()
        for i, p in terms:
            if w[i] == wm:
                c = rat(p[-1])
                # x^k D^i x^(-s) = (-s)(-s-1)...(-s-i+1) x^(k-i-s)
                f = _falling(i)
                g = flint.fmpq_poly([a * (-1) ** k for k, a in enumerate(f.coeffs())] or [0])
                poly += g * flint.fmpq(c.numerator, c.denominator)
        return poly
    raise ValueError(f"unsupported point {point!r}")


def indicial_exponents(L, point):
    poly = indicial_polynomial(L, point)
    _, factors = poly.factor()
    roots, other = [], []
    for f, mult in factors:
        if f.degree() == 1:
            a, b = f.coeffs()
            roots += [Fraction(int((-a / b).p), int((-a / b).q))] * mult
        else:
            other.append((tuple(Fraction(int(c.p), int(c.q)) for c in f.coeffs()), mult))
    coeffs = tuple(Fraction(int(c.p), int(c.q)) for c in poly.coeffs())
    return IndicialResult(coeffs, tuple(sorted(roots)), tuple(other))
