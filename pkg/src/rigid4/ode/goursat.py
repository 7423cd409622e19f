"""Goursat's explicit order-4 operator for G-II exponent data and its power series solutions."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

from ..exactnum import rat
from .operator import LinearOperator
from .series import ZERO, PowerSeries


def elementary(xs, k):
    return sum((prod(c) for c in combinations(xs, k)), Fraction(0))


@dataclass(frozen=True)
class OdeCoefficients:
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction
    G: Fraction
    H: Fraction
    beta: Fraction
    alpha: tuple
    gamma: tuple

    def as_list(self):
        return [self.A, self.B, self.C, self.D, self.E, self.F, self.G, self.H]


def ode_coefficients(alpha, gamma):
    """Constants A..H for exponents 0: (0,1,1-a1,1-a2), 1: (0,1,b,b+1), inf: gamma.

    The exponents are taken as given (not reduced mod 1).
    """
    alpha = tuple(rat(x) for x in alpha)
    gamma = tuple(rat(x) for x in gamma)
    e1a, e2a = elementary(alpha, 1), elementary(alpha, 2)
    e = [elementary(gamma, k) for k in range(5)]
    beta = (1 + e1a - e[1]) / 2
    A = 6 + e[1]
    B = 3 + e1a
    C = 7 + 3 * e[1] + e[2]
    E = 1 + e1a + e2a
    D = E + C - (beta - 1) * (beta - 2)
    F = 1 + e[1] + e[2] + e[3]
    # corrected G
    G = (F + 2 * (beta - 1) * (beta - 2) * (beta - 3) + (beta - 1) * (beta - 2) * (2 * A - B)
         + (beta - 1) * (2 * C - D))
    H = e[4]
    return OdeCoefficients(A, B, C, D, E, F, G, H, beta, alpha, gamma)


def goursat_operator(c):
    """x^2(x-1)^2 D^4 + (Ax-B)x(x-1) D^3 + (Cx^2-Dx+E) D^2 + (Fx-G) D + H."""
    return LinearOperator((
        (c.H,),
        (-c.G, c.F),
        (c.E, -c.D, c.C),
        (0, c.B, -(c.A + c.B), c.A),
        (0, 0, 1, -2, 1),
    ))


# The printed recursion relates a_n, a_{n-1}, a_{n-2} with C_0, C_1, C_2
# polynomials in n; matching against direct substitution shows the
# polynomials are evaluated at n while the indices run n+2, n+1, n.
RECURSION_SHIFT = 2


def recursion_coefficients(c, n):
    C0 = (n + 1) * (n + 2) * (n * (n - 1) + c.B * n + c.E)
    C1 = (n + 1) * (2 * n * (n - 1) * (n - 2) + (c.A + c.B) * n * (n - 1) + c.D * n + c.G)
    C2 = -(n * (n - 1) * (n - 2) * (n - 3) + c.A * n * (n - 1) * (n - 2)
           + c.C * n * (n - 1) + c.F * n + c.H)
    return C0, C1, C2


class ResonanceError(ArithmeticError):
    pass


def series_by_recursion(c, a0, a1, n, shift=RECURSION_SHIFT):
    """Coefficients a_0..a_{n-1} of the holomorphic solution with given a_0, a_1."""
    a = [a0, a1]
    while len(a) < n:
        m = len(a) - shift
        C0, C1, C2 = recursion_coefficients(c, m)
        if C0 == 0:
            raise ResonanceError(f"leading recursion coefficient vanishes at n={m}")
        prev1 = a[m + shift - 1] if m + shift - 1 >= 0 else ZERO
        prev2 = a[m + shift - 2] if m + shift - 2 >= 0 else ZERO
        a.append((C1 * prev1 + C2 * prev2) / C0)
    return PowerSeries(a[:n], n)


def series_solutions(c, n):
    """phi0 = 1 + O(x^2), phi1 = x + O(x^2)."""
    one = Fraction(1)
    return (series_by_recursion(c, one, ZERO, n), series_by_recursion(c, ZERO, one, n))


def monomial_image(L, j):
    """L(x^j) as {exponent: coefficient}, straight from the operator."""
    out = {}
    for i, p in enumerate(L.coeffs):
        f = 1
        for t in range(i):
            f *= j - t
        if f == 0:
            continue
        for d, c in enumerate(p):
            if c != 0:
                e = j - i + d
                out[e] = out.get(e, ZERO) + c * f
    return out


def series_by_substitution(L, a0, a1, n):
    """Independent oracle: fix a_{k+2} so that the x^k coefficient of L(y) vanishes."""
    a = [a0, a1]
    width = max(len(p) for p in L.coeffs) + L.order
    while len(a) < n:
        k = len(a) - 2
        acc, lead = ZERO, ZERO
        for j in range(max(0, k - width), k + L.order + 1):
            c = monomial_image(L, j).get(k, ZERO)
            if c == 0:
                continue
            if j < len(a):
                acc = acc + c * a[j]
            elif j == len(a):
                lead = c
            else:
                raise ResonanceError(f"a_{j} enters the x^{k} equation before a_{len(a)}")
        if lead == 0:
            raise ResonanceError(f"substitution cannot fix a_{len(a)}")
        a.append(-acc / lead)
    return PowerSeries(a[:n], n)


def calibrate_shift(c, terms=8):
    """Which index alignment of the printed recursion matches substitution."""
    L = goursat_operator(c)
    ref = [series_by_substitution(L, Fraction(1), ZERO, terms),
           series_by_substitution(L, ZERO, Fraction(1), terms)]
    for shift in (0, 1, 2):
        try:
            got = [series_by_recursion(c, Fraction(1), ZERO, terms, shift),
                   series_by_recursion(c, ZERO, Fraction(1), terms, shift)]
        except (ResonanceError, ZeroDivisionError, IndexError):
            continue
        if got == ref:
            return shift
    return None
