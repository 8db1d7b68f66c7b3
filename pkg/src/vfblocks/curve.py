"""Dual graphs of stable nodal curves and node labelings.

Each edge ``(u, v)`` is a node with branches ``s_a`` on ``u`` and ``s_b`` on
``v``.  A labeling puts ``lambda`` on ``s_a`` and ``lambda*`` on ``s_b``, so it
is stored as one weight per edge.  Loops are edges with ``u == v``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .weights import Weight, dual, weights_at_level


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...] = ()
    legs: tuple[tuple[str, Weight], ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple((str(v), int(g)) for v, g in self.vertices))
        object.__setattr__(self, "edges", tuple((str(a), str(b)) for a, b in self.edges))
        object.__setattr__(self, "legs", tuple((str(v), w) for v, w in self.legs))
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise GraphError(f"duplicate vertex ids in {ids}")
        for v, g in self.vertices:
            if g < 0:
                raise GraphError(f"vertex {v!r} has negative genus {g}")
        known = set(ids)
        for a, b in self.edges:
            if a not in known or b not in known:
                raise GraphError(f"edge ({a!r}, {b!r}) references an unknown vertex")
        for v, _ in self.legs:
            if v not in known:
                raise GraphError(f"leg references unknown vertex {v!r}")

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    def genus_of(self, v: str) -> int:
        return dict(self.vertices)[v]

    def valence(self, v: str) -> int:
        """Node branches plus legs on ``v``."""
        n = sum((a == v) + (b == v) for a, b in self.edges)
        return n + sum(1 for u, _ in self.legs if u == v)

    @property
    def arithmetic_genus(self) -> int:
        return sum(g for _, g in self.vertices) + len(self.edges) - len(self.vertices) + 1

    def is_connected(self) -> bool:
        ids = self.vertex_ids
        if not ids:
            return False
        adj: dict[str, set[str]] = {v: set() for v in ids}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            for u in adj[stack.pop()] - seen:
                seen.add(u)
                stack.append(u)
        return len(seen) == len(ids)



def validate(graph: DualGraph, min_genus: int = 0) -> int:
    """Check connectivity and stability; return the arithmetic genus."""
    if not graph.is_connected():
        raise GraphError("graph is disconnected")
    for v, g in graph.vertices:
        n = graph.valence(v)
        if 2 * g - 2 + n <= 0:
            raise GraphError(f"vertex {v!r} is unstable: 2*{g} - 2 + {n} <= 0")
    genus = graph.arithmetic_genus
    if genus < min_genus:
        raise GraphError(f"arithmetic genus {genus} is below {min_genus}")
    return genus


@dataclass(frozen=True, order=True)
class EdgeLabeling:
    """Weight on the ``s_a`` branch of each edge, in edge order."""

    labels: tuple[Weight, ...]

    def half(self, edge: int, side: str) -> Weight:
        w = self.labels[edge]
        if side == "a":
            return w
        if side == "b":
            return dual(w)
        raise ValueError(f"side must be 'a' or 'b', got {side!r}")

    def assignment(self) -> dict[tuple[int, str], Weight]:
        out = {}
        for i, w in enumerate(self.labels):
            out[(i, "a")] = w
            out[(i, "b")] = dual(w)
        return out


def vertex_weights(graph: DualGraph, labeling: EdgeLabeling, v: str) -> list[Weight]:
    """All insertions on ``v``: branch labels in edge order, then legs."""
    ws: list[Weight] = []
    for i, (a, b) in enumerate(graph.edges):
        if a == v:
            ws.append(labeling.labels[i])
        if b == v:
            ws.append(dual(labeling.labels[i]))
    ws.extend(w for u, w in graph.legs if u == v)
    return ws


def passes_root_lattice(graph: DualGraph, labeling: EdgeLabeling, r: int) -> bool:
    return all(
        sum(w.size for w in vertex_weights(graph, labeling, v)) % r == 0
        for v in graph.vertex_ids
    )


def enumerate_labelings(
    graph: DualGraph, r: int, l: int, root_lattice: bool = False
) -> Iterator[EdgeLabeling]:
    """All edge-dual labelings at level ``l`` in lexicographic order."""
    pool = weights_at_level(r, l)
    for combo in itertools.product(pool, repeat=len(graph.edges)):
        lab = EdgeLabeling(combo)
        if root_lattice and not passes_root_lattice(graph, lab, r):
            continue
        yield lab


def _g(*vertices, edges=(), name=""):
    return DualGraph(tuple(vertices), tuple(edges), (), name)


def builtin_graphs() -> dict[str, DualGraph]:
    """Named stable graphs without legs: all of genus 2 and a genus-3 sample."""
    gs = [
        _g(("A", 2), name="genus2-smooth"),
        _g(("A", 1), edges=[("A", "A")], name="genus2-loop"),
        _g(("A", 0), edges=[("A", "A"), ("A", "A")], name="genus2-two-loops"),
        _g(("A", 1), ("B", 1), edges=[("A", "B")], name="genus2-separating"),
        _g(("A", 1), ("B", 0), edges=[("A", "B"), ("B", "B")], name="genus2-tail-loop"),
        _g(
            ("A", 0), ("B", 0),
            edges=[("A", "A"), ("A", "B"), ("B", "B")],
            name="genus2-dumbbell",
        ),
        _g(("A", 0), ("B", 0), edges=[("A", "B")] * 3, name="genus2-theta"),
        _g(("A", 3), name="genus3-smooth"),
        _g(("A", 2), edges=[("A", "A")], name="genus3-loop"),
        _g(("A", 1), ("B", 1), edges=[("A", "B")] * 2, name="genus3-banana"),
        _g(("A", 0), edges=[("A", "A")] * 3, name="genus3-three-loops"),
        _g(
            ("A", 0), ("B", 0), ("C", 0), ("D", 0),
            edges=[("A", "B"), ("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"), ("C", "D")],
            name="genus3-k4",
        ),
        _g(("A", 1), ("B", 1), ("C", 1), edges=[("A", "B"), ("B", "C")], name="genus3-chain"),
    ]
    return {g.name: g for g in gs}


def graphs_of_genus(g: int) -> list[DualGraph]:
    return [G for G in builtin_graphs().values() if G.arithmetic_genus == g]


def with_legs(graph: DualGraph, legs: Sequence[tuple[str, Weight]]) -> DualGraph:
    return DualGraph(graph.vertices, graph.edges, tuple(graph.legs) + tuple(legs), graph.name)
