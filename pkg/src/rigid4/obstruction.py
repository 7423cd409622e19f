"""Field-of-definition obstruction: Galois intertwiner, mu and quaternion ramification."""

import math
from dataclasses import dataclass
from fractions import Fraction

from .construct import GIISpectra, integral_triple, qinf, w2_poly
from .exactnum import CycElt, CycMatrix, cyc, exponent, nullspace, rat

INF = "inf"


@dataclass(frozen=True)
class CocycleData:
    X_sigma: CycMatrix
    mu_raw: CycElt
    sigma: int


@dataclass(frozen=True)
class QuaternionClass:
    disc: int
    mu: int
    ramified: tuple

    def to_json(self):
        return {"D": self.disc, "mu": self.mu, "ramified": list(self.ramified)}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["D"]), int(d["mu"]), tuple(p if p == INF else int(p) for p in d["ramified"]))


def swapping_sigma(s):
    """A unit t mod N fixing the beta and gamma multisets and swapping alpha1, alpha2.

    Returns 1 when every such automorphism fixes a1 (then a1 already lies in K).
    """
    n = s.conductor
    a1, a2 = sorted(s.alpha)
    for t in range(1, n):
        if math.gcd(t, n) != 1:
            continue
        ts = s.twisted(t)
        if (sorted(ts.beta) == sorted(s.beta) and sorted(ts.gamma) == sorted(s.gamma)
                and exponent(t * a1) == a2 and exponent(t * a2) == a1):
            return t
    return 1


def galois_twist_matrix(triple, sigma):
    """Solve T_s X = X T_s^sigma for s = 0, 1 and read off mu from X X^sigma = mu I."""
    n = triple.T0.n
    size = triple.T0.size
    if sigma % n == 1:
        return CocycleData(CycMatrix.identity(size, n), cyc(1, n), 1)
    rows = []
    for T in (triple.T0, triple.T1):
        Ts = T.galois(sigma)
        for i in range(size):
            for k in range(size):
                row = [cyc(0, n)] * (size * size)
                for j in range(size):
                    row[j * size + k] = row[j * size + k] + T[i, j]
                    row[i * size + j] = row[i * size + j] - Ts[j, k]
                rows.append(row)
    basis = nullspace(rows, size * size)
    if len(basis) != 1:
        raise ValueError(f"intertwiner space has dimension {len(basis)}, expected 1")
    v = basis[0]
    lead = next(x for x in v if not x.is_zero())
    v = [x / lead for x in v]
    X = CycMatrix([v[i * size:(i + 1) * size] for i in range(size)])
    P = X @ X.galois(sigma)
    if not P.is_scalar():
        raise ArithmeticError("X X^sigma is not scalar")
    return CocycleData(X, P[0, 0], sigma)


def mu_invariant(s):
    """-(a1 sigma2)^3 w2(q_inf)(1/(a1 sigma2)), a1 the root with smaller exponent."""
    n = s.conductor
    a1 = CycElt.root_of_unity(min(s.alpha), n)
    b1, b2 = (CycElt.root_of_unity(x, n) for x in s.beta)
    s2 = b1 * b2
    w = w2_poly(qinf(s, n))
    return -(a1 * s2) ** 3 * w((a1 * s2).inverse())


def squarefree_part(q):
    """Squarefree integer in the square class of a nonzero rational."""
    q = rat(q)
    if q == 0:
        raise ValueError("zero has no square class")
    m = abs(q.numerator * q.denominator)
    out, p = 1, 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e % 2:
            out *= p
        p += 1
    out *= m
    return out if q > 0 else -out


def mu_squarefree(s):
    mu = mu_invariant(s)
    if not mu.is_rational():
        raise ValueError("mu is not rational: trace field is larger than Q")
    return squarefree_part(mu.to_fraction())


def fundamental_discriminant(d):
    f = squarefree_part(d)
    return f if f % 4 == 1 else 4 * f


def quadratic_disc(alpha):
    """Fundamental discriminant of Q(a1) for a1 = exp(2 pi i alpha1)."""
    a1 = exponent(rat(alpha[0]))
    m = a1.denominator
    if m <= 2:
        raise ValueError("a1 is rational: F = K, no quadratic extension")
    z = CycElt.root_of_unity(a1)
    tr, nm = z + z.galois(-1), z * z.galois(-1)
    if not (tr.is_rational() and nm.is_rational()):
        raise ValueError("a1 is not quadratic over Q")
    t, n = tr.to_fraction(), nm.to_fraction()
    return fundamental_discriminant(t * t - 4 * n)


def _legendre(u, p):
    r = pow(u % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _split(a, p):
    e = 0
    while a % p == 0:
        a //= p
        e += 1
    return e, a


def hilbert_symbol(a, b, place):
    """Hilbert symbol (a, b)_v over Q for v a prime or INF."""
    a, b = rat(a), rat(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    # same square classes, now integers
    a = a.numerator * a.denominator
    b = b.numerator * b.denominator
    if place == INF:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    al, u = _split(a, p)
    be, v = _split(b, p)
    if p == 2:
        # (-1)^(eps(u) eps(v) + al*omega(v) + be*omega(u)),
        # eps(x) = (x-1)/2, omega(x) = (x^2-1)/8, both mod 2
        eps = lambda x: ((x - 1) // 2) % 2
        omega = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(v) + al * omega(v) + be * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (al * be * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** be * _legendre(v, p) ** al


def _prime_divisors(m):
    m, out, p = abs(m), [], 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def ramified_primes(D, mu):
    """Places where (D, mu)_v = -1: primes ascending, then INF."""
    D, mu = rat(D), rat(mu)
    n = 2 * D.numerator * D.denominator * mu.numerator * mu.denominator
    places = [p for p in _prime_divisors(n) if hilbert_symbol(D, mu, p) == -1]
    if hilbert_symbol(D, mu, INF) == -1:
        places.append(INF)
    return tuple(places)


def quaternion_class(s):
    D = quadratic_disc(sorted(s.alpha))
    mu = mu_squarefree(s)
    return QuaternionClass(D, mu, ramified_primes(D, mu))


def format_places(places):
    return "[" + ",".join("∞" if p == INF else str(p) for p in places) + "]"


def _is_norm(q, D):
    """Is the positive integer q a norm from the imaginary quadratic field of discriminant D?"""
    # norm form x^2 + xy + (1-D)/4 y^2 or x^2 - D/4 y^2
    c = (1 - D) // 4 if D % 4 == 1 else -D // 4
    lin = 1 if D % 4 == 1 else 0
    y = 0
    while c * y * y <= 4 * q:
        for x in range(-2 * q - 1, 2 * q + 2):
            if x * x + lin * x * y + c * y * y == q:
                return True
        y += 1
    return False


def mu_norm_class(mu, D):
    """Squarefree mu with prime factors that are norms from Q(sqrt D) removed.

    (D, mu) only depends on mu modulo norms, so this is a canonical
    representative of the same quaternion class.  Only imaginary D is handled.
    """
    if D >= 0:
        return mu
    for p in _prime_divisors(mu):
        if _is_norm(p, D):
            mu //= p
    return mu


def mu_table(s):
    return mu_norm_class(mu_squarefree(s), quadratic_disc(sorted(s.alpha)))
