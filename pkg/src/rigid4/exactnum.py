"""Exact arithmetic in cyclotomic fields.

Elements of Q(zeta_N) are stored as rational coefficient vectors in the
power basis 1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic
polynomial.  Polynomial arithmetic is delegated to python-flint.
"""

import math
import os
from fractions import Fraction
from functools import lru_cache

import flint

DEFAULT_PRECISION = 64


def start_precision():
    try:
        return max(16, int(os.environ.get("RIGID4_PRECISION", DEFAULT_PRECISION)))
    except ValueError:
        return DEFAULT_PRECISION


# ---------------------------------------------------------------------------
# rationals and exponents

def rat(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    raise TypeError(f"cannot make a rational from {x!r}")


def fmt_rat(x):
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def exponent(x):
    """Canonical representative of x mod 1 in [0, 1)."""
    x = rat(x)
    return x - math.floor(x)


def lcm_den(values):
    n = 1
    for v in values:
        n = math.lcm(n, rat(v).denominator)
    return n


@lru_cache(maxsize=None)
def totient(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(n):
    return flint.fmpq_poly(flint.fmpz_poly.cyclotomic(n).coeffs())


def _fq(x):
    x = rat(x)
    return flint.fmpq(x.numerator, x.denominator)


def _fr(c):
    return Fraction(int(c.p), int(c.q))


@lru_cache(maxsize=None)
def _trace_vector(n):
    # Tr(z^k) over Q(zeta_n)/Q is the Ramanujan sum c_n(k)
    out = []
    for k in range(totient(n)):
        g = math.gcd(n, k) if k else n
        m = n // g
        out.append(_mobius(m) * totient(n) // totient(m))
    return tuple(out)


def _mobius(m):
    res, p = 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


# ---------------------------------------------------------------------------
# cyclotomic field elements

class CycElt:
    """An element of Q(zeta_N).  Immutable."""

    __slots__ = ("n", "_p")

    def __init__(self, n, coeffs=()):
        if n < 1:
            raise ValueError("conductor must be positive")
        p = flint.fmpq_poly([_fq(c) for c in coeffs]) if coeffs else flint.fmpq_poly()
        self.n = n
        self._p = p % cyclotomic(n) if p.degree() >= totient(n) else p

    @classmethod
    def _raw(cls, n, p):
        e = object.__new__(cls)
        e.n = n
        e._p = p
        return e

    @classmethod
    def zeta(cls, n, k=1):
        """zeta_n ** k."""
        k %= n
        return cls._raw(n, flint.fmpq_poly([0] * k + [1]) % cyclotomic(n))

    @classmethod
    def from_rational(cls, q, n=1):
        return cls._raw(n, flint.fmpq_poly([_fq(q)]))

    @classmethod
    def root_of_unity(cls, x, n=None):
        """exp(2 pi i x) for rational x, living in Q(zeta_n)."""
        x = exponent(x)
        if n is None:
            n = x.denominator
        if n % x.denominator:
            raise ValueError(f"{x} is not in Q(zeta_{n})")
        return cls.zeta(n, x.numerator * (n // x.denominator))

    # --- representation -------------------------------------------------
    @property
    def coeffs(self):
        cs = [_fr(c) for c in self._p.coeffs()]
        return tuple(cs + [Fraction(0)] * (totient(self.n) - len(cs)))

    def __repr__(self):
        return f"CycElt({self.n}, [{', '.join(fmt_rat(c) for c in self.coeffs)}])"

    def __str__(self):
        if self.is_rational():
            return fmt_rat(self.to_fraction())
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(fmt_rat(c) if k == 0 else f"{fmt_rat(c)}*z{self.n}^{k}")
        return " + ".join(terms)

    def to_json(self):
        return {"conductor": self.n, "coeffs": [fmt_rat(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["conductor"]), [rat(c) for c in d["coeffs"]])

    # --- structure ------------------------------------------------------
    def lift(self, m):
        """The same element viewed in Q(zeta_m), m a multiple of n."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        k = m // self.n
        cs = self._p.coeffs()
        if len(cs) <= 1:
            return CycElt._raw(m, self._p)
        spread = [0] * ((len(cs) - 1) * k + 1)
        for i, c in enumerate(cs):
            spread[i * k] = c
        return CycElt._raw(m, flint.fmpq_poly(spread) % cyclotomic(m))

    def galois(self, t):
        """Apply zeta_n -> zeta_n^t."""
        if math.gcd(t, self.n) != 1:
            raise ValueError(f"t={t} is not a unit mod {self.n}")
        t %= self.n
        cs = self._p.coeffs()
        if t == 1 or len(cs) <= 1:
            return self
        spread = [0] * self.n
        for i, c in enumerate(cs):
            j = (i * t) % self.n
            spread[j] += c
        return CycElt._raw(self.n, flint.fmpq_poly(spread) % cyclotomic(self.n))

    def conj(self):
        return self.galois(-1)

    def is_zero(self):
        return self._p.is_zero()

    def is_rational(self):
        return self._p.degree() <= 0

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        cs = self._p.coeffs()
        return _fr(cs[0]) if cs else Fraction(0)

    def trace(self):
        """Absolute trace Tr_{Q(zeta_n)/Q}."""
        return sum((c * t for c, t in zip(self.coeffs, _trace_vector(self.n))), Fraction(0))

    # --- arithmetic -----------------------------------------------------
    def _pair(self, other):
        if isinstance(other, CycElt):
            if other.n == self.n:
                return self.n, self._p, other._p
            m = math.lcm(self.n, other.n)
            return m, self.lift(m)._p, other.lift(m)._p
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return self.n, self._p, flint.fmpq_poly([_fq(other)])
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        return CycElt._raw(pr[0], pr[1] + pr[2])

    __radd__ = __add__

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        return CycElt._raw(pr[0], pr[1] - pr[2])

    def __rsub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        return CycElt._raw(pr[0], pr[2] - pr[1])

    def __neg__(self):
        return CycElt._raw(self.n, -self._p)

    def __mul__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        n, a, b = pr
        p = a * b
        if p.degree() >= totient(n):
            p = p % cyclotomic(n)
        return CycElt._raw(n, p)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycElt._raw(self.n, flint.fmpq_poly([1 / self._p.coeffs()[0]]))
        g, s, _ = self._p.xgcd(cyclotomic(self.n))
        # Phi_n is irreducible, so g is a nonzero constant
        return CycElt._raw(self.n, s / g.coeffs()[0])

    def __truediv__(self, other):
        if isinstance(other, CycElt):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycElt._raw(self.n, flint.fmpq_poly([1]))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        return pr[1] == pr[2]

    def __hash__(self):
        # the normalized trace is unchanged by lifting, so equal elements
        # at different conductors hash alike
        if self.is_rational():
            return hash(self.to_fraction())
        return hash(self.trace() / totient(self.n))

    def __bool__(self):
        return not self.is_zero()

    # --- numerics -------------------------------------------------------
    def embed(self, t=1, prec=None):
        """Certified complex ball for the image under zeta_n -> exp(2 pi i t/n)."""
        prec = prec or start_precision()
        old = flint.ctx.prec
        flint.ctx.prec = prec
        try:
            z = flint.acb(flint.arb(2 * t) / self.n).exp_pi_i()
            return flint.acb_poly([flint.acb(c) for c in self._p.coeffs()])(z)
        finally:
            flint.ctx.prec = old

    def __complex__(self):
        v = self.embed()
        return complex(float(v.real.mid()), float(v.imag.mid()))

    def real_sign(self, t=1):
        """Certified sign of a real element under the t-th embedding."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.to_fraction() > 0 else -1
        prec = start_precision()
        while True:
            v = self.embed(t, prec)
            if not v.imag.contains(0):
                raise ValueError(f"{self!r} is not real under embedding t={t}")
            if v.real > 0:
                return 1
            if v.real < 0:
                return -1
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError("sign undecided at maximum precision")


def cyc(x, n=1):
    """Coerce a scalar to CycElt."""
    if isinstance(x, CycElt):
        return x
    return CycElt.from_rational(rat(x), n)


def cyc_normalize(n, raw):
    return CycElt(n, raw)


def galois_act(t, e):
    return e.galois(t)


def common_conductor(elts):
    n = 1
    for e in elts:
        if isinstance(e, CycElt):
            n = math.lcm(n, e.n)
    return n


# ---------------------------------------------------------------------------
# polynomials over Q(zeta_N)

class CycPoly:
    """Univariate polynomial with CycElt coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        cs = [cyc(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def from_roots(cls, roots):
        p = cls([1])
        for r in roots:
            p = p * cls([-cyc(r), 1])
        return p

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.c) - 1

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def __getitem__(self, k):
        return self.c[k] if 0 <= k < len(self.c) else cyc(0)

    def __call__(self, x):
        acc = cyc(0)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def __add__(self, other):
        other = other if isinstance(other, CycPoly) else CycPoly([other])
        n = max(len(self.c), len(other.c))
        return CycPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return CycPoly([-a for a in self.c])

    def __sub__(self, other):
        return self + (-(other if isinstance(other, CycPoly) else CycPoly([other])))

    def __mul__(self, other):
        if not isinstance(other, CycPoly):
            return CycPoly([a * other for a in self.c])
        if not self.c or not other.c:
            return CycPoly([])
        out = [cyc(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return CycPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = CycPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CycPoly):
            other = CycPoly([other])
        return len(self.c) == len(other.c) and all(a == b for a, b in zip(self.c, other.c))

    def __hash__(self):
        return hash(self.c)

    def galois(self, t):
        return CycPoly([a.galois(t) for a in self.c])

    def __repr__(self):
        return f"CycPoly([{', '.join(str(a) for a in self.c)}])"

    def to_json(self):
        return [a.to_json() for a in self.c]


# ---------------------------------------------------------------------------
# square matrices

class CycMatrix:
    """Square matrix over Q(zeta_N), all entries at one conductor."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = [[cyc(x) for x in r] for r in rows]
        size = len(rows)
        if any(len(r) != size for r in rows):
            raise ValueError("matrix must be square")
        n = common_conductor(x for r in rows for x in r)
        self.n = n
        self.rows = tuple(tuple(x.lift(n) for x in r) for r in rows)

    @classmethod
    def identity(cls, size, n=1):
        one, zero = CycElt.from_rational(1, n), CycElt.from_rational(0, n)
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def companion(cls, poly):
        """Companion matrix with last column -c_0, ..., -c_{d-1} of a monic poly."""
        if not poly.is_monic():
            raise ValueError("companion matrix needs a monic polynomial")
        d = poly.degree
        rows = [[cyc(0)] * d for _ in range(d)]
        for i in range(1, d):
            rows[i][i - 1] = cyc(1)
        for i in range(d):
            rows[i][d - 1] = -poly[i]
        return cls(rows)

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __matmul__(self, other):
        m = self.size
        return CycMatrix([[sum((self.rows[i][k] * other.rows[k][j] for k in range(m)), cyc(0))
                           for j in range(m)] for i in range(m)])

    def __mul__(self, s):
        if isinstance(s, CycMatrix):
            return self @ s
        return CycMatrix([[x * s for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __add__(self, other):
        return CycMatrix([[a + b for a, b in zip(r, q)] for r, q in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return CycMatrix([[a - b for a, b in zip(r, q)] for r, q in zip(self.rows, other.rows)])

    def __neg__(self):
        return CycMatrix([[-a for a in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, CycMatrix) or other.size != self.size:
            return NotImplemented
        return all(a == b for r, q in zip(self.rows, other.rows) for a, b in zip(r, q))

    def __hash__(self):
        return hash(tuple(x.coeffs for r in self.rows for x in r))

    def transpose(self):
        return CycMatrix([list(c) for c in zip(*self.rows)])

    def galois(self, t):
        return CycMatrix([[x.galois(t) for x in r] for r in self.rows])

    def conj_transpose(self):
        return self.galois(-1).transpose()

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.size)), cyc(0))

    def is_scalar(self):
        d = self.rows[0][0]
        return all((x == d) if i == j else x.is_zero()
                   for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def is_identity(self):
        return self.is_scalar() and self.rows[0][0] == 1

    def det(self):
        a = [list(r) for r in self.rows]
        m, sign, acc = self.size, 1, cyc(1)
        for col in range(m):
            piv = next((r for r in range(col, m) if not a[r][col].is_zero()), None)
            if piv is None:
                return cyc(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            acc = acc * a[col][col]
            inv = a[col][col].inverse()
            for r in range(col + 1, m):
                if not a[r][col].is_zero():
                    f = a[r][col] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return acc * sign

    def inverse(self):
        m = self.size
        one = cyc(1)
        a = [list(r) + [one if i == j else cyc(0) for j in range(m)] for i, r in enumerate(self.rows)]
        for col in range(m):
            piv = next((r for r in range(col, m) if not a[r][col].is_zero()), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(m):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return CycMatrix([r[m:] for r in a])

    def to_json(self):
        return {"conductor": self.n,
                "entries": [[[fmt_rat(c) for c in x.coeffs] for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, d):
        n = int(d["conductor"])
        return cls([[CycElt(n, [rat(c) for c in x]) for x in r] for r in d["entries"]])

    def __repr__(self):
        return "CycMatrix([\n" + "\n".join(
            "  [" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "\n])"


def charpoly(m):
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier."""
    size = m.size
    coeffs = [cyc(0)] * (size + 1)
    coeffs[size] = cyc(1)
    ident = CycMatrix.identity(size, m.n)
    mk = CycMatrix.identity(size, m.n) * 0
    c = cyc(1)
    for k in range(1, size + 1):
        mk = m @ (mk + ident * c)
        c = -mk.trace() / k
        coeffs[size - k] = c
    return CycPoly(coeffs)


def nullspace(rows, ncols):
    """Basis of the right kernel of a matrix given as a list of rows."""
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][col].is_zero():
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [cyc(0)] * ncols
        v[f] = cyc(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][f]
        basis.append(v)
    return basis
