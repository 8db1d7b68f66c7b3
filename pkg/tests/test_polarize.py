import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vfblocks.curve import DualGraph, EdgeLabeling, builtin_graphs
from vfblocks.polarize import (
    CoveringPairError,
    MultiDegreeSheafData as D,
    SemistabilityError,
    a_semistable,
    build_covering_pair,
    limit_semistable,
    linear_semistable,
    node_ledger,
    openeye_bound,
    pole_certificate,
    twist_alpha_from_a,
)
from vfblocks.weights import Weight, dual, epsilon_pair, x_pairing

F = Fraction
G = builtin_graphs()


def test_sl2_midpoint_is_canonical():
    for name in ("genus2-theta", "genus2-dumbbell", "genus2-tail-loop"):
        g = G[name]
        lab = EdgeLabeling((Weight((1, 0)),) * len(g.edges))
        cp = build_covering_pair(g, 3, lab, "midpoint")
        assert set(cp.epsilons.values()) == {0}
        for v, gv in g.vertices:
            n = sum((a == v) + (b == v) for a, b in g.edges)
            assert cp.a_weights[v] == F(2 * gv - 2 + n, 2)


def test_loop_endpoint_example():
    cp = build_covering_pair(G["genus2-loop"], 2, EdgeLabeling((Weight((0, 0)),)), ("low",))
    assert cp.epsilons == {(0, "a"): F(-1, 2), (0, "b"): F(1, 2)}
    assert cp.a_weights == {"A": 1}
    assert cp.degrees == {"A": 2}
    assert cp.integral == {"A": True}


def test_sl3_separating_example():
    lab = EdgeLabeling((Weight((1, 1, 0)),))
    cp = build_covering_pair(G["genus2-separating"], 2, lab, "high")
    assert cp.epsilons[(0, "a")] == F(1, 3) and cp.epsilons[(0, "b")] == F(-1, 3)
    # (1,1,0) fails the root-lattice test on each side, so the degrees are fractional.
    assert cp.degrees == {"A": F(5, 3), "B": F(1, 3)}
    assert cp.integral == {"A": False, "B": False}
    with pytest.raises(CoveringPairError):
        build_covering_pair(G["genus2-separating"], 2, lab, "high", require_integral=True)


def test_errors():
    lab = EdgeLabeling((Weight((1, 0)),))
    with pytest.raises(CoveringPairError, match="even"):
        build_covering_pair(G["genus2-loop"], 3, lab, "low")
    with pytest.raises(CoveringPairError, match="outside"):
        build_covering_pair(G["genus2-loop"], 2, lab, F(1))
    with pytest.raises(CoveringPairError, match="marked"):
        g = DualGraph((("A", 2),), (), (("A", Weight((0, 0))),))
        build_covering_pair(g, 2, EdgeLabeling(()))


def test_midpoint_trace_vector():
    lab = EdgeLabeling((Weight((1, 0)),) * 3)
    cp = build_covering_pair(G["genus2-theta"], 3, lab, "midpoint")
    assert cp.degrees == {"A": F(3, 2), "B": F(3, 2)}
    assert cp.trace == (1, 1)


def test_pole_bound_examples():
    assert openeye_bound(2, Weight((0, 0)), [1], [1], 0) == 0
    assert openeye_bound(2, Weight((1, 0)), [1], [1, 1], 1) == F(3, 2)
    assert openeye_bound(3, Weight((2, 1, 0)), [2, 1], [3], 0) == 2 * 3
    with pytest.raises(ValueError):
        openeye_bound(2, Weight((1, 0)), [1], [1], 1)


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 5).flatmap(
        lambda r: st.tuples(
            st.just(r),
            st.lists(st.integers(0, 4), min_size=r - 1, max_size=r - 1),
            st.lists(st.integers(0, 3), max_size=4),
            st.integers(-4, 4),
        )
    )
)
def test_pole_bound_forms_agree(data):
    r, cuts, alpha, m = data
    mu = Weight(tuple(sorted(cuts, reverse=True)) + (0,))
    sb = sum(alpha) + m
    if sb < 0:
        return
    beta = [sb]
    width = mu.parts[0] - mu.parts[-1]
    val = openeye_bound(r, mu, alpha, beta, m)
    assert val == width * sb - m * x_pairing(dual(mu))
    assert val == width * sum(alpha) + m * x_pairing(mu)


def test_ledger_cases():
    mu = Weight((2, 0))
    # case (a): only types (2) and (3)
    row = node_ledger(2, 2, mu, F(0), 0, 0, [1], [1])
    assert (row.type2, row.type3, row.total) == (2, -2, 0)
    # case (b) at the upper endpoint with |alpha| = 0 attains zero
    w = Weight((1, 0))
    eps = epsilon_pair(w, 2).high
    row = node_ledger(2, 2, w, eps, 1, 0, [], [1])
    assert row.total == 0
    # the displayed case-(b) expression
    alpha = [1]
    row = node_ledger(2, 2, w, eps, 1, 0, alpha, [2])
    width = 1
    assert row.total == 2 * ((F(width, 2) - 1) * 1 + 1 * (x_pairing(w) / 2 - F(1, 2) + eps))


def test_pole_certificate_trivial():
    g = G["genus2-theta"]
    lab = EdgeLabeling((Weight((0, 0)),) * 3)
    cp = build_covering_pair(g, 2, lab, "low")
    ledger = pole_certificate(cp, {"A": 0, "B": 0}, [([], [])] * 3)
    assert ledger.totals == (0, 0, 0) and ledger.certified
    with pytest.raises(ValueError):
        pole_certificate(cp, {"A": 1, "B": 0}, [([], [])] * 3)


# semistability -----------------------------------------------------------------

def test_linear_semistable_examples():
    E = D((2, 2), 0)
    assert linear_semistable(E, [E], [0, 0])
    assert not linear_semistable(E, [D((1, 1), 1)], [0, 0])
    assert linear_semistable(E, [], [0, 0])
    with pytest.raises(SemistabilityError):
        linear_semistable(E, [], [1, 0])


def test_a_semistable_examples():
    E = D((2, 2), 0)
    assert not a_semistable(E, [D((2, 0), 1)], [1, 1])
    assert a_semistable(E, [D((2, 0), -1)], [1, 1])
    with pytest.raises(SemistabilityError):
        a_semistable(E, [], [1, -1])


def test_twist_examples():
    assert twist_alpha_from_a([1, 1], [3, 3], 2, 2) == [5, 5]
    assert twist_alpha_from_a([F(1)], [4], 3, 1) == [2]
    with pytest.raises(SemistabilityError):
        twist_alpha_from_a([1, 1], [3, 3], 2, 1)


def test_limit_semistable_examples():
    E = D((2, 2), 0)
    assert limit_semistable(E, [E])
    assert not limit_semistable(E, [D((1, 1), 1)])
    assert limit_semistable(E, [D((1, 1), 0)])
    assert limit_semistable(E, [D((2, 0), 5)])  # non-uniform F is skipped
    with pytest.raises(SemistabilityError):
        limit_semistable(D((2, 1), 0), [])


def test_a_semistable_matches_twisted_linear():
    rng = random.Random(7)
    for _ in range(300):
        k = rng.randint(1, 3)
        r = rng.randint(1, 3)
        g = rng.randint(2, 4)
        a = [F(rng.randint(-3, 5), rng.randint(1, 3)) for _ in range(k)]
        if sum(a) <= 0:
            continue
        degL = [rng.randint(3, 8) for _ in range(k)]
        scale = 1
        for x in a:
            scale *= x.denominator
        scale *= sum(a).numerator * sum(a).denominator
        alpha = twist_alpha_from_a(a, degL, g, scale)
        assert sum(alpha) == scale * (sum(degL) - (g - 1))
        E = D((r,) * k, r * (1 - g))
        subs = [D(tuple(rng.randint(0, r) for _ in range(k)), rng.randint(-6, 3)) for _ in range(4)]
        lhs = a_semistable(E, subs, a)
        Et = E.twisted(degL)
        tau = [F(x, scale) for x in alpha]
        rhs = linear_semistable(Et, [F_.twisted(degL) for F_ in subs], tau)
        assert lhs == rhs
