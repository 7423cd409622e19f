"""Generalized hypergeometric series and Newton-polygon exponent schedules."""

from dataclasses import dataclass
from fractions import Fraction

from ..exactnum import rat
from .series import PowerSeries


def pfq_series(upper, lower, n):
    """Coefficients through x^n of a hypergeometric series.

    With len(lower) == len(upper) the arrays are read verbatim,
    sum prod (a)_k / prod (b)_k x^k, the k! being supplied by a lower
    parameter equal to 1.  Otherwise the usual pFq normalization with an
    extra k! is used.
    """
    upper = [rat(a) for a in upper]
    lower = [rat(b) for b in lower]
    for b in lower:
        if b <= 0 and b.denominator == 1:
            raise ZeroDivisionError(f"lower parameter {b} is a nonpositive integer")
    verbatim = len(lower) == len(upper)
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(n):
        num = Fraction(1)
        for a in upper:
            num *= a + k
        den = Fraction(1)
        for b in lower:
            den *= b + k
        if not verbatim:
            den *= k + 1
        c = c * num / den
        out.append(c)
    return PowerSeries(out, n + 1)


@dataclass(frozen=True)
class NewtonPolygonSides:
    """Sides as (kappa, width) pairs; top kappas measured for the expansion at infinity."""

    bottom: tuple
    top: tuple


def _hull_chain(points, upper):
    pts = sorted(set(points))
    chain = []
    for p in pts:
        while len(chain) >= 2:
            (x1, y1), (x2, y2) = chain[-2], chain[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if (cross >= 0) if upper else (cross <= 0):
                chain.pop()
            else:
                break
        chain.append(p)
    return chain


def newton_polygon(support):
    """Bottom and top sides of the convex hull of monomial exponents (u-degree, t-degree).

    Bottom sides carry their geometric slope; top sides carry minus it, so
    that both plug into the same [kappa] ladder.
    """
    xs = [p[0] for p in support]
    for x in (min(xs), max(xs)):
        if len({p[1] for p in support if p[0] == x}) > 1:
            raise ValueError("Newton polygon has a vertical side")
    sides = []
    for upper in (False, True):
        chain = _hull_chain(support, upper)
        block = []
        for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
            k = Fraction(y2 - y1, x2 - x1)
            block.append((-k if upper else k, x2 - x1))
        sides.append(tuple(block))
    return NewtonPolygonSides(sides[0], sides[1])


def kappa_ladder(kappa, width, r):
    """0 - kappa r, 1/d - kappa r, ..., (e-1)/d - kappa r."""
    d = Fraction(kappa).denominator
    return [Fraction(j, d) - kappa * r for j in range(width)]


def newton_exponents(sides, r):
    r = rat(r)
    at0 = [x for k, e in sides.bottom for x in kappa_ladder(k, e, r)]
    atinf = [x for k, e in sides.top for x in kappa_ladder(k, e, r)]
    return at0, atinf
