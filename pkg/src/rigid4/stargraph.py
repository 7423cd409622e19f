"""Star diagrams of multiplicity data and the A/B/C rigidity reduction."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class StarDiagram:
    """Central value n and legs of node values read outward (strictly decreasing, >= 1)."""

    central: int
    legs: tuple = ()

    def __post_init__(self):
        legs = tuple(tuple(int(v) for v in leg) for leg in self.legs)
        object.__setattr__(self, "legs", legs)
        if self.central < 1:
            raise ValueError("central value must be positive")
        for leg in legs:
            prev = self.central
            for v in leg:
                if not 1 <= v < prev:
                    raise ValueError(f"leg {list(leg)} is not strictly decreasing below {self.central}")
                prev = v

    @classmethod
    def from_partitions(cls, n, partitions):
        legs = []
        for parts in partitions:
            if sum(parts) != n:
                raise ValueError(f"{parts} is not a partition of {n}")
            legs.append(_leg_from_parts(n, sorted(parts, reverse=True)))
        return cls(n, tuple(legs))

    @property
    def partitions(self):
        return [leg_parts(self.central, leg) for leg in self.legs]

    def is_terminal(self):
        return self.central == 1 and not self.legs

    def render(self):
        lines = [f"[{self.central}]"]
        for leg in self.legs:
            lines.append(f"  {self.central} - " + " - ".join(str(v) for v in leg))
        return "\n".join(lines)


def leg_parts(n, leg):
    vals = [n] + list(leg) + [0]
    return [a - b for a, b in zip(vals, vals[1:])]


def _leg_from_parts(n, parts):
    leg, v = [], n
    for p in parts[:-1]:
        v -= p
        leg.append(v)
    return tuple(x for x in leg if x > 0)


def dmu(d):
    """Expected dimension (k - 2) n^2 - sum of squared parts + 2 (genus 0)."""
    k = len(d.legs)
    return (k - 2) * d.central ** 2 - sum(p * p for parts in d.partitions for p in parts) + 2


@dataclass(frozen=True)
class Fail:
    diagram: StarDiagram
    leg: int
    central: int
    neighbor: int

    def __str__(self):
        return (f"cannot apply C on leg {self.leg}: central {self.central} "
                f"< neighbor {self.neighbor}")


@dataclass
class ReductionOutcome:
    rigid: bool
    trace: list = field(default_factory=list)
    failure: Fail = None


def _move_a(d):
    new = sum(leg[0] for leg in d.legs) - d.central
    return new, d.legs


def reduce_step(d):
    """One round of A, then B, then C.  Returns (trace entries, diagram or Fail)."""
    if d.is_terminal():
        return [], d
    steps = []
    n, legs = _move_a(d)
    if n < 1:
        return steps, Fail(d, -1, n, 0)
    # after A the legs may no longer descend from the new central value
    steps.append(("A", (n, legs)))
    # B: drop zero-difference segments; C: re-sort differences into a partition
    new_legs, shrunk = [], []
    for i, leg in enumerate(legs):
        diffs = leg_parts(n, leg)
        if diffs[0] < 0:
            return steps, Fail(d, i, n, leg[0])
        parts = [p for p in diffs if p > 0]
        shrunk.append(parts)
    steps.append(("B", (n, tuple(tuple(_raw_leg(n, p)) for p in shrunk))))
    for parts in shrunk:
        leg = _leg_from_parts(n, sorted(parts, reverse=True))
        if leg:
            new_legs.append(leg)
    out = StarDiagram(n, tuple(new_legs))
    steps.append(("C", out))
    return steps, out


def _raw_leg(n, parts):
    leg, v = [], n
    for p in parts[:-1]:
        v -= p
        leg.append(v)
    return leg


def is_rigid(d):
    if dmu(d) != 0:
        raise ValueError(f"d_mu = {dmu(d)} != 0")
    out = ReductionOutcome(rigid=False, trace=[("start", d)])
    while not d.is_terminal():
        steps, nxt = reduce_step(d)
        out.trace.extend(steps)
        if isinstance(nxt, Fail):
            out.failure = nxt
            return out
        if nxt.central >= d.central:
            raise AssertionError("central value failed to decrease")
        d = nxt
    out.rigid = True
    return out


# Goursat's seven rank-4 diagrams
GOURSAT = {
    "GI": StarDiagram(4, ((1,), (3, 2, 1), (3, 2, 1))),
    "GII": StarDiagram(4, ((2,), (2, 1), (3, 2, 1))),
    "GIII": StarDiagram(4, ((2, 1), (2, 1), (2, 1))),
    "GIV": StarDiagram(4, ((1,), (1,), (1,), (3, 2, 1))),
    "GV": StarDiagram(4, ((2,), (1,), (1,), (2, 1))),
    "GVI": StarDiagram(4, ((2,), (2,), (2,), (1,))),
    "GVII": StarDiagram(4, ((1,), (1,), (1,), (1,), (1,))),
}


def render_trace(outcome):
    lines = []
    for label, item in outcome.trace:
        if isinstance(item, StarDiagram):
            lines.append(f"{label}:")
            lines.append(item.render())
        else:
            n, legs = item
            lines.append(f"{label}: central {n}, legs " + " ".join(str(list(l)) for l in legs))
    if outcome.failure is not None:
        lines.append(f"fail: {outcome.failure}")
    lines.append("rigid" if outcome.rigid else "not rigid")
    return "\n".join(lines)
