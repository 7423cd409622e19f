"""Breadth-first enumeration of finite matrix groups over Q(zeta_N)."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exactnum import CycElt, CycMatrix, cyclotomic, totient

DEFAULT_CAP = 200_000
_CHUNK = 4096


class CapExceeded(RuntimeError):
    def __init__(self, cap):
        super().__init__(f"group closure exceeded cap {cap}")
        self.cap = cap


@dataclass(frozen=True)
class GroupReport:
    order: int
    center_order: int
    scalar_order: int
    cap: int

    def to_json(self):
        return {"order": self.order, "center": self.center_order, "scalars": self.scalar_order,
                "cap": self.cap}

    @classmethod
    def from_json(cls, d):
        return cls(int(d["order"]), int(d["center"]), int(d["scalars"]), int(d.get("cap", DEFAULT_CAP)))


def _reduction_tensor(n):
    # red[p, q, :] = coefficients of x^(p+q) mod Phi_n
    phi = totient(n)
    red = np.zeros((phi, phi, phi), dtype=np.int64)
    powers = []
    for k in range(2 * phi - 1):
        e = CycElt.zeta(n, k)
        powers.append([int(c) for c in e.coeffs])
    for p in range(phi):
        for q in range(phi):
            red[p, q] = powers[p + q]
    return red


def _to_array(m):
    phi = totient(m.n)
    a = np.zeros((m.size, m.size, phi), dtype=object)
    for i, r in enumerate(m.rows):
        for j, x in enumerate(r):
            for k, c in enumerate(x.coeffs):
                if c.denominator != 1:
                    return None
                a[i, j, k] = int(c.numerator)
    return a


class _IntGroup:
    """Integral matrices as (size, size, phi) coefficient arrays."""

    def __init__(self, gens, n, jobs):
        self.n = n
        self.phi = totient(n)
        self.size = gens[0].size
        self.red = _reduction_tensor(n)
        self.jobs = jobs
        arrs = [_to_array(g) for g in gens]
        self.gens = [a.astype(np.int64) for a in arrs]
        # right multiplication by g as one matrix on the flattened (j, p) index
        d, phi = self.size, self.phi
        self.right = [np.einsum("jkq,pqr->jpkr", g, self.red).reshape(d * phi, d * phi)
                      for g in self.gens]
        self.left = [np.einsum("ijp,pqr->ijqr", g, self.red) for g in self.gens]
        self.bound = max(int(np.abs(r).sum(axis=0).max()) for r in self.right)

    def mul_right(self, elts, k):
        m = elts.shape[0]
        d, phi = self.size, self.phi
        if np.abs(elts).max(initial=0) * self.bound >= 2 ** 62:
            raise OverflowError
        flat = elts.reshape(m * d, d * phi)
        out = self._matmul(flat, self.right[k])
        return out.reshape(m, d, d, phi)

    def mul_left(self, elts, k):
        return np.einsum("ijqr,mjkq->mikr", self.left[k], elts)

    def _matmul(self, a, b):
        if self.jobs <= 1 or a.shape[0] < 2 * _CHUNK:
            return a @ b
        parts = [a[i:i + _CHUNK] for i in range(0, a.shape[0], _CHUNK)]
        with ThreadPoolExecutor(self.jobs) as ex:
            return np.concatenate(list(ex.map(lambda x: x @ b, parts)))


def _enumerate_int(gens, n, cap, jobs):
    G = _IntGroup(gens, n, jobs)
    d, phi = G.size, G.phi
    ident = np.zeros((1, d, d, phi), dtype=np.int64)
    for i in range(d):
        ident[0, i, i, 0] = 1
    seen = {ident[0].tobytes()}
    elements = [ident]
    frontier = ident
    while frontier.shape[0]:
        fresh = []
        for k in range(len(G.gens)):
            for start in range(0, frontier.shape[0], _CHUNK):
                prod = G.mul_right(frontier[start:start + _CHUNK], k)
                for row in prod:
                    key = row.tobytes()
                    if key not in seen:
                        seen.add(key)
                        fresh.append(row)
                        if len(seen) > cap:
                            raise CapExceeded(cap)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, d, d, phi)
        if frontier.shape[0]:
            elements.append(frontier)
    allel = np.concatenate(elements)
    central = np.ones(allel.shape[0], dtype=bool)
    for k in range(len(G.gens)):
        for start in range(0, allel.shape[0], _CHUNK):
            chunk = allel[start:start + _CHUNK]
            same = (G.mul_right(chunk, k) == G.mul_left(chunk, k)).reshape(chunk.shape[0], -1).all(axis=1)
            central[start:start + _CHUNK] &= same
    scal = 0
    off = ~np.eye(d, dtype=bool)
    for el in allel[central]:
        if not el[off].any() and all((el[i, i] == el[0, 0]).all() for i in range(d)):
            scal += 1
    return GroupReport(len(seen), int(central.sum()), scal, cap)


def _enumerate_exact(gens, cap):
    size, n = gens[0].size, gens[0].n
    ident = CycMatrix.identity(size, n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
        frontier = fresh
    center = [x for x in seen if all(x @ g == g @ x for g in gens)]
    scal = sum(1 for x in center if x.is_scalar())
    return GroupReport(len(seen), len(center), scal, cap)


def enumerate_group(gens, cap=DEFAULT_CAP, jobs=1):
    """Order, center order and number of scalar elements of <gens>."""
    if not gens:
        raise ValueError("need at least one generator")
    if cap < 1:
        raise ValueError("cap must be positive")
    n = 1
    for g in gens:
        n = math.lcm(n, g.n)
    gens = [CycMatrix([[x.lift(n) for x in r] for r in g.rows]) for g in gens]
    for g in gens:
        if g.det().is_zero():
            raise ValueError("generators must be invertible")
    if all(_to_array(g) is not None for g in gens):
        try:
            return _enumerate_int(gens, n, cap, jobs)
        except OverflowError:
            pass
    return _enumerate_exact(gens, cap)
