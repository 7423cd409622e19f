"""Truncated power series at 0 over Q or Q(zeta_N)."""

from fractions import Fraction

ZERO = Fraction(0)


def _is_zero(c):
    return c == 0


class PowerSeries:
    """a_0 + a_1 x + ... + O(x^prec)."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec=None):
        prec = len(coeffs) if prec is None else prec
        cs = list(coeffs[:prec])
        cs += [ZERO] * (prec - len(cs))
        self.coeffs = cs
        self.prec = prec

    @classmethod
    def constant(cls, c, prec):
        return cls([c], prec)

    @classmethod
    def x(cls, prec):
        return cls([ZERO, Fraction(1)], prec)

    @classmethod
    def from_poly(cls, poly, prec):
        """poly given as a coefficient list, lowest degree first."""
        return cls(list(poly), prec)

    def __getitem__(self, k):
        return self.coeffs[k] if k < self.prec else None

    def __len__(self):
        return self.prec

    def __repr__(self):
        shown = " + ".join(f"({c})*x^{k}" for k, c in enumerate(self.coeffs) if not _is_zero(c))
        return f"{shown or '0'} + O(x^{self.prec})"

    def truncate(self, n):
        return PowerSeries(self.coeffs[:n], min(n, self.prec))

    def _coerce(self, other):
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.prec, other.prec)
        return PowerSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([a * other for a in self.coeffs], self.prec)
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            acc = ZERO
            for i in range(k + 1):
                if not _is_zero(a[i]) and not _is_zero(b[k - i]):
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        if isinstance(k, int) and k >= 0:
            out = PowerSeries.constant(Fraction(1), self.prec)
            base = self
            while k:
                if k & 1:
                    out = out * base
                base = base * base
                k >>= 1
            return out
        return self.power(Fraction(k))

    def inverse(self):
        a = self.coeffs
        if _is_zero(a[0]):
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, self.prec):
            acc = ZERO
            for i in range(1, k + 1):
                if not _is_zero(a[i]):
                    acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return PowerSeries(out, self.prec)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other) if isinstance(other, int) else 1 / other)

    def derivative(self):
        return PowerSeries([k * c for k, c in enumerate(self.coeffs)][1:], self.prec - 1)

    def integral(self, c0=ZERO):
        return PowerSeries([c0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.prec + 1)

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        return PowerSeries([ZERO] * k + self.coeffs, self.prec + k)

    def scale(self, c):
        """f(c x)."""
        out, p = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return PowerSeries(out, self.prec)

    def log(self):
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        return (self.derivative() / self.truncate(self.prec - 1)).integral()

    def exp(self):
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp needs constant term 0")
        # g' = f' g  =>  k g_k = sum_j j f_j g_{k-j}
        f = self.coeffs
        g = [Fraction(1)]
        for k in range(1, self.prec):
            acc = ZERO
            for j in range(1, k + 1):
                if not _is_zero(f[j]):
                    acc = acc + j * f[j] * g[k - j]
            g.append(acc / k)
        return PowerSeries(g, self.prec)

    def power(self, r):
        """f^r = exp(r log f) for f(0) = 1."""
        return (self.log() * r).exp()

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        return all(a == b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __hash__ = None


def poly_eval_series(poly, y):
    """Evaluate sum_k poly[k] y^k (coefficients scalars or series) by Horner."""
    acc = PowerSeries.constant(ZERO, y.prec)
    for c in reversed(poly):
        acc = acc * y + c
    return acc
