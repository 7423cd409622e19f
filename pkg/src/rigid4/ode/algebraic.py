"""Checking and computing algebraic power series."""

from fractions import Fraction

from ..exactnum import CycElt
from .series import ZERO, PowerSeries


def _by_y_degree(P):
    """{(i, j): c} meaning c x^i y^j  ->  list over j of x-polynomials."""
    deg = max(j for _, j in P)
    out = [dict() for _ in range(deg + 1)]
    for (i, j), c in P.items():
        out[j][i] = out[j].get(i, ZERO) + c
    return out


def _xpoly(d, prec):
    cs = [ZERO] * prec
    for i, c in d.items():
        if i < prec:
            cs[i] = cs[i] + c
    return PowerSeries(cs, prec)


def evaluate(P, y):
    """P(x, y(x)) as a series."""
    acc = PowerSeries.constant(ZERO, y.prec)
    for coeff in reversed(_by_y_degree(P)):
        acc = acc * y + _xpoly(coeff, y.prec)
    return acc


def derivative_y(P):
    return {(i, j - 1): c * j for (i, j), c in P.items() if j > 0}


def _conductor(values):
    ns = {v.n for v in values if isinstance(v, CycElt) and not v.is_rational()}
    return ns


def verify_algebraic(P, y, n):
    """True iff P(x, y(x)) = 0 mod x^n."""
    if y.prec < n:
        raise ValueError(f"series known only to O(x^{y.prec}), need {n}")
    ns = _conductor(list(P.values()) + y.coeffs)
    if len(ns) > 1 and not all(max(ns) % m == 0 for m in ns):
        raise ValueError(f"conductor mismatch {sorted(ns)}")
    r = evaluate(P, y.truncate(n))
    return all(c == 0 for c in r.coeffs[:n])


def solve_algebraic(P, y0, n):
    """Series root of P(x, y) = 0 with y(0) = y0 a simple root, by Newton iteration."""
    dP = derivative_y(P)
    y = PowerSeries([y0], 1)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        y = PowerSeries(y.coeffs, prec)
        # one Newton step doubles the number of correct coefficients
        y = y - evaluate(P, y) / evaluate(dP, y)
    return y


def denominator_support(y, n):
    """Primes dividing a denominator among a_0..a_n."""
    primes = set()
    for c in y.coeffs[:n + 1]:
        if isinstance(c, CycElt):
            if not c.is_rational():
                raise ValueError("denominator support needs rational coefficients")
            c = c.to_fraction()
        d = Fraction(c).denominator
        p = 2
        while p * p <= d:
            while d % p == 0:
                primes.add(p)
                d //= p
            p += 1
        if d > 1:
            primes.add(d)
    return primes
