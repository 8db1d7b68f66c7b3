"""Covering-pair polarizations and the per-node pole ledger.

For a node with branches ``s_a`` (label ``mu``) and ``s_b`` (label ``mu*``),
``eps_{s_a}`` lies in ``[mu*(x)/l - 1/2, 1/2 - mu(x)/l]`` and
``eps_{s_b} = -eps_{s_a}``.  A component's normalized degree is
``(2 g_i - 2 + n_i)/2 + sum of eps`` over the node branches it carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from ..curve import DualGraph, EdgeLabeling, validate
from ..weights import LevelError, Weight, dual, epsilon_midpoint, epsilon_pair, level, x_pairing

Selector = Union[str, Fraction]


class CoveringPairError(ValueError):
    pass


@dataclass(frozen=True)
class CoveringPair:
    graph: DualGraph
    rank_r: int
    level_l: int
    labeling: EdgeLabeling
    epsilons: dict[tuple[int, str], Fraction]
    a_weights: dict[str, Fraction]
    normalized_degrees: dict[str, Fraction]  # deg(G_i) / rk(G)
    degrees: dict[str, Fraction]  # deg(G_i) with rk(G) = l
    integral: dict[str, bool]
    trace: tuple[int, ...] | None = None

    @property
    def genus(self) -> int:
        return self.graph.arithmetic_genus


def _node_branches(graph: DualGraph, v: str) -> int:
    return sum((a == v) + (b == v) for a, b in graph.edges)


def _select(sel: Selector, mu: Weight, l: int) -> Fraction:
    pair = epsilon_pair(mu, l)
    if sel == "low":
        return pair.low
    if sel == "high":
        return pair.high
    if sel in ("mid", "midpoint"):
        return epsilon_midpoint(mu, l)
    if isinstance(sel, (Fraction, int)):
        eps = Fraction(sel)
        if eps not in pair:
            raise CoveringPairError(f"epsilon {eps} outside [{pair.low}, {pair.high}] for {mu}")
        return eps
    raise CoveringPairError(f"unknown epsilon selector {sel!r}")


def build_covering_pair(
    graph: DualGraph,
    l: int,
    labeling: EdgeLabeling,
    choice: Selector | Sequence[Selector] = "low",
    require_integral: bool = False,
) -> CoveringPair:
    """Assign node epsilons and the resulting component degrees.

    ``choice`` is one selector for all nodes or one per edge: ``"low"``,
    ``"high"``, ``"midpoint"`` or an explicit rational in the admissible
    interval of the ``s_a`` branch.  Integrality of each ``deg(G_i)`` is
    reported in ``integral``; it holds for even ``l`` with endpoint choices
    whenever the labeling passes the root-lattice test at every vertex.
    """
    genus = validate(graph, min_genus=2)
    if graph.legs:
        raise CoveringPairError("covering pairs are defined for curves without marked points")
    if len(labeling.labels) != len(graph.edges):
        raise CoveringPairError(
            f"labeling has {len(labeling.labels)} entries for {len(graph.edges)} edges"
        )
    if l < 1:
        raise LevelError(f"level must be positive, got {l}")
    ranks = {w.rank_r for w in labeling.labels}
    if len(ranks) > 1:
        raise CoveringPairError(f"labels mix ranks {sorted(ranks)}")
    for w in labeling.labels:
        if level(w) > l:
            raise LevelError(f"label {w} has level {level(w)} > {l}")
    r = ranks.pop() if ranks else 2

    if isinstance(choice, (str, Fraction, int)):
        selectors: list[Selector] = [choice] * len(graph.edges)
    else:
        selectors = list(choice)
        if len(selectors) != len(graph.edges):
            raise CoveringPairError(f"need {len(graph.edges)} selectors, got {len(selectors)}")
    endpoint = any(s in ("low", "high") for s in selectors)
    if endpoint and l % 2:
        raise CoveringPairError(f"endpoint epsilon choice needs an even level, got {l}")
    midpoint = all(s in ("mid", "midpoint") for s in selectors)

    eps: dict[tuple[int, str], Fraction] = {}
    sums = {v: Fraction(0) for v in graph.vertex_ids}
    for i, ((a, b), mu, sel) in enumerate(zip(graph.edges, labeling.labels, selectors)):
        e = _select(sel, mu, l)
        eps[(i, "a")] = e
        eps[(i, "b")] = -e
        sums[a] += e
        sums[b] -= e

    norm: dict[str, Fraction] = {}
    degs: dict[str, Fraction] = {}
    a_w: dict[str, Fraction] = {}
    integral: dict[str, bool] = {}
    for v, g in graph.vertices:
        nd = Fraction(2 * g - 2 + _node_branches(graph, v), 2) + sums[v]
        norm[v] = nd
        degs[v] = nd * l
        a_w[v] = nd / (genus - 1)
        integral[v] = degs[v].denominator == 1
    if require_integral and not all(integral.values()):
        bad = [v for v, ok in integral.items() if not ok]
        raise CoveringPairError(f"non-integral deg(G_i) on components {bad}")

    trace = None
    if midpoint and all((2 * d).denominator == 1 for d in degs.values()):
        trace = tuple(int(2 * degs[v]) % 2 for v in graph.vertex_ids)
    return CoveringPair(graph, r, l, labeling, eps, a_w, norm, degs, integral, trace)


def openeye_bound(r: int, mu: Weight, alpha: Sequence[int], beta: Sequence[int], m: int) -> Fraction:
    """Upper bound on the pole order of the Peter-Weyl term at a node."""
    if mu.rank_r != r:
        raise ValueError(f"weight {mu} is not an sl_{r} weight")
    if any(x < 0 for x in alpha) or any(x < 0 for x in beta):
        raise ValueError("alpha and beta exponents must be non-negative")
    sa, sb = sum(alpha), sum(beta)
    if m + sa != sb:
        raise ValueError(f"inconsistent exponents: m + |alpha| = {m + sa} != |beta| = {sb}")
    width = mu.parts[0] - mu.parts[-1]
    via_beta = width * sb - m * x_pairing(dual(mu))
    via_alpha = width * sa + m * x_pairing(mu)
    if via_beta != via_alpha:  # pragma: no cover - identity of the two forms
        raise ArithmeticError(f"bound forms disagree: {via_beta} != {via_alpha}")
    return via_alpha


@dataclass(frozen=True)
class NodeLedger:
    edge: int
    type1: Fraction
    type2: Fraction
    type3: Fraction

    @property
    def total(self) -> Fraction:
        return self.type1 + self.type2 + self.type3


@dataclass(frozen=True)
class PoleLedger:
    nodes: tuple[NodeLedger, ...]

    @property
    def totals(self) -> tuple[Fraction, ...]:
        return tuple(n.total for n in self.nodes)

    @property
    def total(self) -> Fraction:
        return sum(self.totals, Fraction(0))

    @property
    def certified(self) -> bool:
        return all(t <= 0 for t in self.totals)


def node_ledger(
    r: int,
    l: int,
    mu: Weight,
    eps_a: Fraction,
    f_a: int,
    f_b: int,
    alpha: Sequence[int],
    beta: Sequence[int],
    edge: int = 0,
) -> NodeLedger:
    if f_a < 0 or f_b < 0:
        raise ValueError("lift exponents must be non-negative")
    m = f_a - f_b
    eps_b = -eps_a
    type1 = l * (Fraction(f_a + f_b, 2) + eps_a * f_a + eps_b * f_b)
    type2 = openeye_bound(r, mu, alpha, beta, m)
    type3 = Fraction(-l * (f_a + sum(alpha)))
    return NodeLedger(edge, type1, type2, type3)


def pole_certificate(
    cp: CoveringPair,
    f: Mapping[str, int],
    snf_exponents: Sequence[tuple[Sequence[int], Sequence[int]]],
) -> PoleLedger:
    """Audit the three pole contributions at every node of ``cp``."""
    edges = cp.graph.edges
    if len(snf_exponents) != len(edges):
        raise ValueError(f"need exponent data for {len(edges)} nodes, got {len(snf_exponents)}")
    missing = set(cp.graph.vertex_ids) - set(f)
    if missing:
        raise ValueError(f"no lift exponent for components {sorted(missing)}")
    rows = []
    for i, ((a, b), (alpha, beta)) in enumerate(zip(edges, snf_exponents)):
        mu = cp.labeling.labels[i]
        rows.append(
            node_ledger(cp.rank_r, cp.level_l, mu, cp.epsilons[(i, "a")], f[a], f[b], alpha, beta, i)
        )
    return PoleLedger(tuple(rows))
