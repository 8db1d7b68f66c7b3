"""Conformal-block ranks on nodal curves by factorization over the dual graph.

A smooth genus-``h`` component with insertions ``mu_1..mu_n`` has rank equal to
the vacuum coefficient of ``mu_1 * ... * mu_n * T^h`` in the fusion ring, where
``T`` is the handle operator.  A nodal curve sums the product of vertex ranks
over all edge-dual labelings.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .curve import DualGraph, EdgeLabeling, enumerate_labelings, validate, vertex_weights
from .fusion import _check, _handle_operator, fusion_table
from .weights import Weight

# Below this many labelings a process pool costs more than it saves.
PARALLEL_THRESHOLD = 4096


@lru_cache(maxsize=None)
def _rank_smooth(r: int, l: int, h: int, parts: tuple[tuple[int, ...], ...]) -> int:
    table = fusion_table(r, l)
    idx = {w.parts: i for i, w in enumerate(table.weights)}
    size = len(table.weights)
    vec = [0] * size
    vec[0] = 1  # weights are sorted, so the vacuum comes first
    for p in parts:
        vec = table.apply(idx[p], vec)
        if not any(vec):
            return 0
    if h:
        T = _handle_operator(r, l)
        for _ in range(h):
            out = [0] * size
            for i, v in enumerate(vec):
                if v:
                    row = T[i]
                    for j in range(size):
                        if row[j]:
                            out[j] += v * row[j]
            vec = out
    return vec[0]


def rank_smooth(r: int, l: int, h: int, boundary_weights: Sequence[Weight] = ()) -> int:
    if h < 0:
        raise ValueError(f"genus must be non-negative, got {h}")
    _check(r, l, *boundary_weights)
    parts = tuple(sorted(w.parts for w in boundary_weights))
    return _rank_smooth(r, l, h, parts)


@dataclass(frozen=True)
class DecompositionRow:
    labeling: EdgeLabeling
    contribution: int


def _contribution(graph: DualGraph, r: int, l: int, lab: EdgeLabeling) -> int:
    total = 1
    for v, g in graph.vertices:
        total *= rank_smooth(r, l, g, vertex_weights(graph, lab, v))
        if not total:
            return 0
    return total


def _chunk_sum(args) -> int:
    graph, r, l, labs = args
    return sum(_contribution(graph, r, l, lab) for lab in labs)


def _workers() -> int:
    cap = os.environ.get("VF_THREADS")
    if cap:
        return max(1, int(cap))
    return min(4, os.cpu_count() or 1)


def _prepare(graph: DualGraph, r: int, l: int) -> None:
    validate(graph)
    _check(r, l, *(w for _, w in graph.legs))


def decomposition_table(
    graph: DualGraph, r: int, l: int, root_lattice: bool = False
) -> list[DecompositionRow]:
    _prepare(graph, r, l)
    return [
        DecompositionRow(lab, _contribution(graph, r, l, lab))
        for lab in enumerate_labelings(graph, r, l, root_lattice=root_lattice)
    ]


def rank_nodal(graph: DualGraph, r: int, l: int, root_lattice: bool = True) -> int:
    _prepare(graph, r, l)
    labs = list(enumerate_labelings(graph, r, l, root_lattice=root_lattice))
    workers = _workers()
    if workers == 1 or len(labs) < PARALLEL_THRESHOLD:
        return _chunk_sum((graph, r, l, labs))
    step = -(-len(labs) // workers)
    chunks = [(graph, r, l, labs[i : i + step]) for i in range(0, len(labs), step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_chunk_sum, chunks))
