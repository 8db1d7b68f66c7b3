"""Level-l fusion ring of sl_r.

Two independent routes share the classical Littlewood-Richardson expansion:

* ``fusion_affine_fold``: Kac-Walton, folding each classical term into the
  fundamental alcove of the level ``l + r`` affine Weyl group with signs.
* ``fusion_rim_hook``: strip ``(l + r)``-rim hooks from the first row of each
  classical term, as in the rim-hook rule for quantum cohomology of
  ``Gr(r, r + l)``, then specialize ``q = 1``.

Under ``q = 1`` the quantum parameter becomes the simple current
``J(lambda) = (l, lambda_1, ..., lambda_{r-1})`` (renormalized), and each
application of ``J`` carries the sign of an ``r``-cycle, ``(-1)^(r-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Literal

from .kernels import fold_to_alcove, lr_expand
from .weights import LevelError, Weight, dual, level, weights_at_level

Algorithm = Literal["affine-fold", "rim-hook"]
Parts = tuple[int, ...]


def _check(r: int, l: int, *ws: Weight) -> None:
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if l < 0:
        raise LevelError(f"level must be non-negative, got {l}")
    for w in ws:
        if w.rank_r != r:
            raise ValueError(f"weight {w} is not an sl_{r} weight")
        if level(w) > l:
            raise LevelError(f"weight {w} has level {level(w)} > {l}")


def _affine_fold_parts(r: int, l: int, lam: Parts, mu: Parts) -> dict[Parts, int]:
    k = l + r
    out: dict[Parts, int] = {}
    for nu, c in lr_expand(lam, mu, r).items():
        sign, folded = fold_to_alcove(nu, k)
        if sign:
            out[folded] = out.get(folded, 0) + sign * c
    return {w: c for w, c in out.items() if c}


def remove_rim_hook(parts: list[int] | Parts, n: int, row: int = 0):
    """Remove the ``n``-rim hook whose head is the last box of ``row``.

    Walks the outer rim of the diagram towards the lower left.  Returns
    ``(new_parts, height)`` or ``None`` when the hook does not fit or its
    removal does not leave a partition.
    """
    rows = list(parts)
    if row >= len(rows) or rows[row] == 0:
        return None
    i, j = row, rows[row] - 1
    boxes = [(i, j)]
    while len(boxes) < n:
        if i + 1 < len(rows) and rows[i + 1] > j:
            i += 1
        elif j > 0:
            j -= 1
        else:
            return None
        boxes.append((i, j))
    new = rows[:]
    for bi, bj in boxes:
        new[bi] = min(new[bi], bj)
    if any(a < b for a, b in zip(new, new[1:])):
        return None
    if sum(rows) - sum(new) != n:
        return None
    height = len({bi for bi, _ in boxes})
    return new, height


def _normalize(parts) -> Parts:
    last = parts[-1]
    return tuple(p - last for p in parts)


def _simple_current_parts(p: Parts, l: int) -> Parts:
    return _normalize((l,) + tuple(p[:-1]))


def simple_current(w: Weight, l: int) -> Weight:
    """Fusion with ``l * omega_1``: ``(l, w_1, ..., w_{r-1})`` renormalized."""
    return Weight(_simple_current_parts(w.parts, l))


def _rim_hook_parts(r: int, l: int, lam: Parts, mu: Parts) -> dict[Parts, int]:
    n = l + r
    cycle_sign = -1 if (r - 1) % 2 else 1
    out: dict[Parts, int] = {}
    for nu, c in lr_expand(lam, mu, r).items():
        parts = list(nu)
        sign, qdeg = 1, 0
        while parts[0] > l:
            step = remove_rim_hook(parts, n)
            if step is None:
                sign = 0
                break
            parts, height = step
            if (height - 1) % 2:
                sign = -sign
            qdeg += 1
        if not sign:
            continue
        w = _normalize(parts)
        for _ in range(qdeg):
            w = _simple_current_parts(w, l)
            sign *= cycle_sign
        out[w] = out.get(w, 0) + sign * c
    return {w: c for w, c in out.items() if c}


_ALGORITHMS = {"affine-fold": _affine_fold_parts, "rim-hook": _rim_hook_parts}


def _as_weights(terms: dict[Parts, int]) -> dict[Weight, int]:
    return {Weight(p): c for p, c in sorted(terms.items())}


def fusion_affine_fold(r: int, l: int, lam: Weight, mu: Weight) -> dict[Weight, int]:
    _check(r, l, lam, mu)
    return _as_weights(_affine_fold_parts(r, l, lam.parts, mu.parts))


def fusion_rim_hook(r: int, l: int, lam: Weight, mu: Weight) -> dict[Weight, int]:
    _check(r, l, lam, mu)
    return _as_weights(_rim_hook_parts(r, l, lam.parts, mu.parts))


@dataclass(frozen=True, eq=False)
class FusionTable:
    """All fusion coefficients at fixed ``(r, l)``.

    ``prod[i][j]`` lists ``(k, N_{ij}^k)`` over weight indices in table order;
    ``coeffs`` is the same data keyed by weights.
    """

    rank_r: int
    level_l: int
    weights: tuple[Weight, ...]
    prod: tuple = field(repr=False)
    algorithm_tag: str = "affine-fold"

    @cached_property
    def index(self) -> dict[Weight, int]:
        return {w: i for i, w in enumerate(self.weights)}

    @cached_property
    def dual_index(self) -> tuple[int, ...]:
        idx = self.index
        return tuple(idx[dual(w)] for w in self.weights)

    @cached_property
    def coeffs(self) -> dict[tuple[Weight, Weight, Weight], int]:
        ws = self.weights
        return {
            (ws[i], ws[j], ws[k]): c
            for i, row in enumerate(self.prod)
            for j, terms in enumerate(row)
            for k, c in terms
        }

    def N(self, lam: Weight, mu: Weight, nu: Weight) -> int:
        idx = self.index
        try:
            i, j, k = idx[lam], idx[mu], idx[nu]
        except KeyError:
            return 0
        for kk, c in self.prod[i][j]:
            if kk == k:
                return c
        return 0

    def product(self, lam: Weight, mu: Weight) -> dict[Weight, int]:
        idx = self.index
        return {self.weights[k]: c for k, c in self.prod[idx[lam]][idx[mu]]}

    def matrix(self, lam: Weight) -> list[list[int]]:
        """Fusion matrix ``M[mu][nu] = N_{lam mu}^nu`` in table order."""
        size = len(self.weights)
        i = self.index[lam]
        M = [[0] * size for _ in range(size)]
        for j in range(size):
            for k, c in self.prod[i][j]:
                M[j][k] = c
        return M

    def apply(self, lam_index: int, vec: list[int]) -> list[int]:
        """Row vector ``vec`` times the fusion matrix of weight ``lam_index``."""
        out = [0] * len(vec)
        row = self.prod[lam_index]
        for j, v in enumerate(vec):
            if v:
                for k, c in row[j]:
                    out[k] += v * c
        return out


@lru_cache(maxsize=64)
def fusion_table(r: int, l: int, algorithm: Algorithm = "affine-fold") -> FusionTable:
    try:
        fn = _ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown fusion algorithm {algorithm!r}") from None
    _check(r, l)
    ws = weights_at_level(r, l)
    pos = {w.parts: i for i, w in enumerate(ws)}
    size = len(ws)
    prod: list[list[tuple]] = [[()] * size for _ in range(size)]
    for i, lam in enumerate(ws):
        for j in range(i, size):
            terms = fn(r, l, lam.parts, ws[j].parts)
            entry = tuple(sorted((pos[p], c) for p, c in terms.items()))
            prod[i][j] = prod[j][i] = entry
    return FusionTable(r, l, ws, tuple(tuple(row) for row in prod), algorithm)


def three_point_rank(r: int, l: int, lam: Weight, mu: Weight, nu: Weight) -> int:
    """Rank of the genus-0 block with three insertions: ``N_{lam mu}^{nu*}``."""
    _check(r, l, lam, mu, nu)
    return fusion_table(r, l).N(lam, mu, dual(nu))


@lru_cache(maxsize=64)
def _handle_operator(r: int, l: int) -> tuple[tuple[int, ...], ...]:
    table = fusion_table(r, l)
    prod = table.prod
    dual_of = table.dual_index
    size = len(table.weights)
    T = [[0] * size for _ in range(size)]
    for lam in range(size):
        lam_row = prod[lam]
        dual_row = prod[dual_of[lam]]
        for mu in range(size):
            row = T[mu]
            for sigma, c1 in lam_row[mu]:
                for nu, c2 in dual_row[sigma]:
                    row[nu] += c1 * c2
    return tuple(tuple(row) for row in T)


def handle_operator(r: int, l: int) -> list[list[int]]:
    """``T = sum_lam N_lam N_{lam*}`` on the level-``l`` weight basis."""
    _check(r, l)
    return [list(row) for row in _handle_operator(r, l)]
