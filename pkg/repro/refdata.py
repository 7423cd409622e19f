"""Numbers transcribed from the printed tables and worked examples.

Tables live as CSV under golden/; matrices, operators and series are built
here so that tests and reproduction scripts share one transcription.
"""

import csv
import os
from fractions import Fraction as F

from rigid4.construct import GIISpectra, MonodromyTriple
from rigid4.exactnum import CycElt, CycMatrix, rat
from rigid4.ode import LinearOperator

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def read_table(name):
    with open(os.path.join(GOLDEN, name), newline="") as f:
        return list(csv.DictReader(f))


def row_spectra(row):
    g = lambda k: rat(row[k])
    return GIISpectra((g("alpha1"), g("alpha2")), (g("beta1"), g("beta2")),
                      tuple(g(f"gamma{i}") for i in range(1, 5)))


# ---------------------------------------------------------------------------
# quadratic irrationalities inside cyclotomic fields

def golden_ratio():
    """tau = 1 + zeta5 + zeta5^4, a root of x^2 - x - 1."""
    return 1 + CycElt.zeta(5, 1) + CycElt.zeta(5, 4)


def sqrt_minus_8():
    return 2 * (CycElt.zeta(8, 1) + CycElt.zeta(8, 3))


def _jacobi(a, n):
    a %= n
    out = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                out = -out
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            out = -out
        a %= n
    return out if n == 1 else 0


def omega15():
    """A root of x^2 - x + 4 in Q(zeta15), via the quadratic Gauss sum."""
    g = sum((CycElt.zeta(15, k) * _jacobi(k, 15) for k in range(1, 15)), CycElt.from_rational(0, 15))
    return (1 + g) / 2


# ---------------------------------------------------------------------------
# matrix fixtures

ZETA12_SPECTRA = GIISpectra((F(1, 4), F(3, 4)), (F(0), F(1, 2)),
                            (F(1, 36), F(13, 36), F(25, 36), F(11, 12)))


def zeta12_triple():
    z = CycElt.zeta(12)
    T0 = CycMatrix([[z**3 + 1, 0, 1, z**2 - 1], [0, 1, 0, 1 - z**3],
                    [-z**3, 0, 0, z**2], [0, 0, 0, -z**3]])
    T1 = CycMatrix([[0, 0, 0, z**3], [z**3 + 1, 0, 1, 0],
                    [0, 1, 0, 1 - z**3], [-z**3, 0, 0, 0]])
    Ti = CycMatrix([[0, 0, 0, -1], [1, 0, 0, z], [0, 1, 0, 0], [0, 0, 1, z - z**3]])
    return MonodromyTriple(T0, T1, Ti, "integral-form")


def h4_triple():
    t = golden_ratio()
    T0 = CycMatrix([[1, t, t, 0], [0, 0, -1, 0], [0, 0, 1, 1], [0, -1, -1, -1]])
    T1 = CycMatrix([[-1, 0, 0, 0], [t, 1, 1, 0], [0, 0, -1, 0], [0, 0, 1, 1]])
    Ti = CycMatrix([[-1, -t, -t, -t], [t, t, t, t], [0, 1, 0, 0], [0, 0, 1, 0]])
    return MonodromyTriple(T0, T1, Ti, "coxeter")


H4_GAMMA = (F(1, 30), F(11, 30), F(19, 30), F(29, 30))


def h4_order144_triple():
    a = golden_ratio()
    Ti = CycMatrix([[0, 1, 1, 1], [a + 1, a + 1, 1, 0], [-a, -a - 1, -1, 0],
                    [-a - 1, -a - 1, -a, -a]])
    T1 = CycMatrix([[-1, 0, 0, 0], [a, 1, 1, 0], [0, 0, -1, 0], [0, 0, 1, 1]])
    T0 = CycMatrix([[a, 1, 0, 0], [-a - 1, -a - 1, -1, -1], [2 * a + 1, 2 * a + 2, a + 2, a + 1],
                    [-a - 1, -a - 1, -a - 1, -a]])
    return MonodromyTriple(T0, T1, Ti, "coxeter")


def a5_magma_triple():
    T0 = CycMatrix([[1, 1, 1, 0], [0, 0, -1, 0], [0, 0, 1, 1], [0, -1, -1, -1]])
    T1 = CycMatrix([[-1, 0, 0, 0], [1, 1, 1, 0], [0, 0, -1, 0], [0, 0, 1, 1]])
    Ti = CycMatrix([[-1, -1, -1, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    return MonodromyTriple(T0, T1, Ti, "coxeter")


def b4_magma_triple():
    # the alpha printed in the heading of this case is (1/4, 3/4); the charpoly
    # of T0 and the order-48 table row both give (1/3, 2/3)
    T0 = CycMatrix([[0, -1, 0, 0], [0, 1, 1, 2], [1, 1, 1, 0], [-1, -1, -1, -1]])
    T1 = CycMatrix([[1, 1, 0, 0], [0, -1, 0, 0], [0, 1, 1, 2], [0, 0, 0, -1]])
    Ti = CycMatrix([[-1, -1, -1, -2], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]])
    return MonodromyTriple(T0, T1, Ti, "integral-form")


# The printed companion-form triple for this case repeats the Phi_12 companion
# of the F4 case as T_inf, so it has the wrong spectrum at infinity and its
# group does not close. Kept for the record, not used as an oracle.
B4_PRINTED_COMPANION = (
    [[0, 1, 1, 0], [-1, 0, -1, 0], [0, -1, 0, 0], [0, 1, 0, 1]],
    [[-1, -1, -1, -1], [0, 0, 0, -1], [0, 1, 0, 1], [-1, 0, 0, 1]],
    [[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 0]],
)


def b4_companion_triple():
    """The MAGMA triple conjugated so T_inf is the companion matrix of T^4 + 1."""
    t = b4_magma_triple()
    v = [1, 0, 0, 0]
    cols = []
    for _ in range(4):
        cols.append(v)
        v = [sum(t.Tinf[i, j] * v[j] for j in range(4)) for i in range(4)]
    P = CycMatrix(cols).transpose()
    Pi = P.inverse()
    T0, T1, Ti = (Pi @ T @ P for T in t.gens)
    return MonodromyTriple(T0, T1, Ti, "companion")


def f4_companion_triple():
    T0 = CycMatrix([[1, 0, 0, -1], [0, 1, 0, 1], [0, 0, 1, 1], [0, -1, -1, -1]])
    T1 = CycMatrix([[0, 1, 1, 1], [1, 0, 0, -1], [0, 0, -1, 0], [0, 0, 1, 1]])
    Ti = CycMatrix([[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 0]])
    return MonodromyTriple(T0, T1, Ti, "companion")


# ---------------------------------------------------------------------------
# differential equations

# (alpha, gamma, A..H); the third example's alpha is (1/3, 2/3): its
# constants E = 20/9 and D = 3295/288 are only consistent with that pair
ODE_CONSTANTS = [
    (("1/4", "3/4"), ("1/5", "2/5", "3/5", "-1/5"),
     ("7", "4", "51/5", "931/80", "35/16", "54/25", "1223/800", "-6/625")),
    (("1/3", "2/3"), ("1/5", "2/5", "-2/5", "4/5"),
     ("7", "4", "10", "413/36", "20/9", "46/25", "2387/1800", "-16/625")),
    (("1/3", "2/3"), ("1/8", "3/8", "-3/8", "7/8"),
     ("7", "4", "319/32", "3295/288", "20/9", "117/64", "383/288", "-63/4096")),
]

PHI0 = [F(1), F(0), F(48, 21875), F(28088, 18046875), F(6589643, 5865234375),
        F(57582020413, 67659667968750)]
PHI1 = [F(0), F(1), F(1223, 3500), F(1096811, 5775000), F(370276451, 3003000000),
        F(15278570717561, 173208750000000)]


def hurwitz_operator():
    return LinearOperator((
        (F(-57, 87808),),
        (F(-39779, 24696), F(12297, 5488)),
        (F(20, 9), F(-5899, 504), F(573, 56)),
        (0, 4, -11, 7),
        (0, 0, 1, -2, 1),
    ))


HURWITZ_EXPONENTS = {0: (F(0), F(1, 3), F(2, 3), F(1)),
                     1: (F(0), F(1, 2), F(1), F(3, 2)),
                     "inf": (F(-1, 28), F(3, 28), F(1, 4), F(19, 28))}


def u2_operator(r):
    r = rat(r)
    return LinearOperator((
        (r * r * (r - 1) / 4,),
        (0, (3 * r + 2) * (r - 1) / 4, F(20, 9)),
        (0, 0, F(-5, 2), 4),
        (0, 0, 0, -1, 1),
    ))


def u2_exponents(r):
    r = rat(r)
    return {0: (r, -r / 2, (1 - r) / 2), 1: (F(0), F(1, 2), F(1)),
            "inf": (F(0), F(1, 3), F(2, 3))}


def u3_operator(r):
    r = rat(r)
    return LinearOperator((
        (-r * r * (r - 1) * (r - 2) / 27,),
        (-(64 * r**3 - 192 * r**2 + 68 * r + 345) / 216, (8 * r**3 - 33 * r**2 + 13 * r + 60) / 27),
        (F(20, 9), (24 * r**2 - 12 * r - 421) / F(36), (-6 * r**2 + 3 * r + 92) / F(9)),
        (0, 4, -11, 7),
        (0, 0, 1, -2, 1),
    ))


def u3_exponents(r):
    # printed against "t" but the operator is written in x
    r = rat(r)
    return {0: (F(0), F(1, 3), F(2, 3), F(1)), 1: (F(0), F(1, 2), F(1), F(3, 2)),
            "inf": (r, -r / 3, F(1, 3) - r / 3, F(2, 3) - r / 3)}


# ---------------------------------------------------------------------------
# algebraic solutions

# degree-10 solution for the A5 case: 1 - 387/1300 x - ...
A5_DEG10_SERIES = [F(1), F(-387, 1300), F(-172773, 2080000), F(-141382989, 3328000000)]


def a5_quintic():
    """(series start, P) with omega^2 - omega + 4 = 0."""
    w = omega15()
    start = [1 + 0 * w, -(F(123, 475) + F(33, 1900) * w),
             -(F(271713, 3800000) + F(78771, 15200000) * w)]
    P = {
        (0, 5): 1 + 0 * w,
        (0, 3): F(605, 8664) - F(715, 2888) * w,
        (0, 2): F(-1189825, 2963088) + F(70525, 329232) * w,
        (1, 1): F(298150, 390963) - F(11050, 130321) * w,
        (0, 1): F(-518989705, 900778752) + F(19234735, 300259584) * w,
        (2, 0): -(F(453252, 2476099) + F(151020, 2476099) * w),
        (1, 0): F(3663787, 14856594) + F(406915, 4952198) * w,
        (0, 0): -(F(82982887, 900778752) + F(9216415, 300259584) * w),
    }
    return start, P


def b4_octic():
    """(series start, P) with s = sqrt(-8)."""
    s = sqrt_minus_8()
    start = [1 + 0 * s, F(5, 256) * s - F(29, 128), F(383, 65536) * s - F(527, 8192)]
    P = {
        (0, 8): 1 + 0 * s,
        (0, 6): F(230, 729) * s - F(400, 729),
        (1, 4): F(1048, 19683) * s + F(19984, 19683),
        (0, 4): -(F(351670, 1594323) * s + F(1034482, 1594323)),
        (1, 2): F(4842880, 43046721) * s - F(10078688, 43046721),
        (0, 2): F(-1015591450, 10460353203) * s + F(1684358888, 10460353203),
        (3, 0): -(F(27028768, 1162261467) * s + F(3467632, 1162261467)),
        (2, 0): F(172219360, 3486784401) * s + F(238769752, 3486784401),
        (1, 0): -(F(296048878, 10460353203) * s + F(1067187679, 10460353203)),
        (0, 0): F(22649710, 10460353203) * s + F(382087111, 10460353203),
    }
    return start, P


PSI_COEFF = F(-891, 16384)
# psi = -4/135 xi^3 + 4/45 xi^2 + 32/45 xi - 37/27, xi^4 - 4 xi^3 + 27 x = 0, xi(0) = 4
PSI_XI = [F(-37, 27), F(32, 45), F(4, 45), F(-4, 135)]
XI_EQUATION = {(0, 4): F(1), (0, 3): F(-4), (1, 0): F(27)}

# u (1 - u)^4 = 4^4/5^5 t and f = 5^5/4^4 u / t
TRINOMIAL = {(0, 1): F(1), (0, 2): F(-4), (0, 3): F(6), (0, 4): F(-4), (0, 5): F(1),
             (1, 0): -F(4**4, 5**5)}
TRINOMIAL_SCALE = F(5**5, 4**4)
TRINOMIAL_F = [F(1), F(1), F(13, 8), F(51, 16), F(1771, 256), F(4095, 256)]
F43_UPPER = (F(4, 5), F(6, 5), F(7, 5), F(8, 5))
F43_LOWER = (F(3, 2), F(5, 4), F(7, 4), F(2))


def f54_params(r):
    r = rat(r)
    up = tuple(F(k, 5) + F(4, 5) * r for k in range(5))
    low = (1 + r, F(3, 4) + r, F(1, 2) + r, F(1, 4) + r, F(1))
    return up, low


# N = 5 trinomial 16 u^5 t^2 - 500 u^3 t + 3125 u - 3125, monomials as (u-degree, t-degree)
P5_SUPPORT = [(5, 2), (3, 1), (1, 0), (0, 0)]
