from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from rigid4.stargraph import (GOURSAT, Fail, StarDiagram, dmu, is_rigid, leg_parts,
                              reduce_step, render_trace)


def partitions(n, largest=None):
    largest = largest or n
    if n == 0:
        yield []
        return
    for p in range(min(n, largest), 0, -1):
        for rest in partitions(n - p, p):
            yield [p] + rest


def rigid_data(max_n=6, max_k=4):
    """Every d_mu = 0 star diagram with nontrivial legs, rank <= max_n."""
    out = []
    for n in range(2, max_n + 1):
        parts = [p for p in partitions(n) if len(p) > 1]
        for k in range(3, max_k + 1):
            for combo in combinations_with_replacement(parts, k):
                d = StarDiagram.from_partitions(n, combo)
                if dmu(d) == 0:
                    out.append(d)
    return out


def test_dmu_examples():
    assert dmu(GOURSAT["GII"]) == 0
    assert dmu(StarDiagram.from_partitions(2, [[1, 1]] * 3)) == 0
    assert dmu(GOURSAT["GIV"]) == 0


def test_all_goursat_diagrams_have_dmu_zero():
    for d in GOURSAT.values():
        assert dmu(d) == 0


def test_gii_partitions():
    assert sorted(map(sorted, GOURSAT["GII"].partitions)) == [[1, 1, 1, 1], [1, 1, 2], [2, 2]]


def test_invalid_leg_rejected():
    with pytest.raises(ValueError):
        StarDiagram(4, ((2, 3),))
    with pytest.raises(ValueError):
        StarDiagram.from_partitions(4, [[2, 1]])


def test_gii_first_step():
    steps, d = reduce_step(GOURSAT["GII"])
    assert [label for label, _ in steps] == ["A", "B", "C"]
    assert d.central == 3
    assert sorted(map(sorted, d.partitions)) == [[1, 1, 1], [1, 1, 1], [1, 2]]


def test_gii_passes_through_hypergeometric_ranks():
    out = is_rigid(GOURSAT["GII"])
    assert out.rigid
    centrals = [item.central for label, item in out.trace if label == "C"]
    assert centrals == [3, 2, 1]
    rank3 = [item for label, item in out.trace if label == "C"][0]
    assert [1, 1, 1] in rank3.partitions


@pytest.mark.parametrize("name", ["GI", "GII", "GIII", "GV", "GVI", "GVII"])
def test_rigid_cases(name):
    out = is_rigid(GOURSAT[name])
    assert out.rigid and out.failure is None
    assert out.trace[-1][1].is_terminal()


def test_giv_fails_at_move_c():
    out = is_rigid(GOURSAT["GIV"])
    assert not out.rigid
    assert isinstance(out.failure, Fail)
    assert (out.failure.central, out.failure.neighbor) == (2, 3)
    assert "fail" in render_trace(out)


def test_terminal_is_fixed():
    d = StarDiagram(1)
    assert reduce_step(d) == ([], d)
    assert is_rigid(d).rigid


def test_nonzero_dmu_rejected():
    with pytest.raises(ValueError):
        is_rigid(StarDiagram.from_partitions(3, [[1, 1, 1]] * 3))


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.sampled_from(list(partitions(n))), min_size=1, max_size=5))))
def test_trivial_leg_does_not_change_dmu(data):
    n, parts = data
    d = StarDiagram.from_partitions(n, parts)
    e = StarDiagram.from_partitions(n, parts + [[n]])
    assert dmu(e) == dmu(d)


def test_reduction_invariants_exhaustive():
    cases = rigid_data()
    assert len(cases) > 10
    for d in cases:
        out = is_rigid(d)
        previous = d.central
        for label, item in out.trace:
            if label == "C":
                assert item.central < previous
                assert dmu(item) == 0
                previous = item.central
        if out.rigid:
            assert out.trace[-1][1].is_terminal()


def test_leg_parts_round_trip():
    d = GOURSAT["GII"]
    for leg, parts in zip(d.legs, d.partitions):
        assert sum(parts) == 4
        assert leg_parts(4, leg) == parts
