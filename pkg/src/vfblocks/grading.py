"""Graded dimensions of section rings and their arithmetic.

Hilbert functions come from factorization ranks at levels ``k * l0``.  Fits
are quasi-polynomials with exact rational constituents in the absolute
variable ``n``; every fit is checked on held-out values with no tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, gcd
from typing import Sequence

from .curve import DualGraph
from .factorize import rank_nodal


class InsufficientData(ValueError):
    pass


class NoFitError(ValueError):
    pass


class ConeError(ValueError):
    pass


class UncertifiedBasisError(ValueError):
    def __init__(self, message: str, partial: list):
        super().__init__(message)
        self.partial = partial


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_eval(coeffs: Sequence[Fraction], n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QuasiPolynomial:
    """``f(n) = p_{n mod s}(n)``; constituent coefficients are low degree first."""

    period: int
    constituents: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.period < 1 or len(self.constituents) != self.period:
            raise ValueError("need exactly one constituent per residue class")
        object.__setattr__(
            self, "constituents", tuple(_trim(Fraction(x) for x in p) for p in self.constituents)
        )

    @property
    def degree(self) -> int:
        return max((len(p) - 1 for p in self.constituents), default=-1)

    def __call__(self, n: int) -> Fraction:
        return _poly_eval(self.constituents[n % self.period], n)

    def constituent_str(self, i: int) -> str:
        p = self.constituents[i]
        terms = []
        for k in range(len(p) - 1, -1, -1):
            c = p[k]
            if not c:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if not mono:
                body = _fmt(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{_fmt(abs(c))}*{mono}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) or "0"


def _interpolate(points: Sequence[tuple[int, Fraction]]) -> tuple[Fraction, ...]:
    """Coefficients of the unique polynomial of degree < len(points) through them."""
    out = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            out[k] += c * scale
    return _trim(out)


def qp_fit(values: Sequence[int | Fraction], max_period: int = 4, max_degree: int = 6) -> QuasiPolynomial:
    """Smallest ``(period, degree)`` quasi-polynomial matching ``values``.

    ``values[n]`` is ``f(n)``.  Each residue class is trained on its first
    ``degree + 1`` points and must predict every remaining point exactly, with
    at least two held out.  Pairs without enough points are skipped.
    """
    vals = [Fraction(v) for v in values]
    if len(vals) < 3:
        raise InsufficientData(f"need at least 3 values, got {len(vals)}")
    tested = False
    for s in range(1, max_period + 1):
        for d in range(0, max_degree + 1):
            classes = [list(range(i, len(vals), s)) for i in range(s)]
            if any(len(c) < d + 3 for c in classes):
                continue
            tested = True
            consts = []
            for idx in classes:
                p = _interpolate([(n, vals[n]) for n in idx[: d + 1]])
                if any(_poly_eval(p, n) != vals[n] for n in idx[d + 1 :]):
                    break
                consts.append(p)
            else:
                return QuasiPolynomial(s, tuple(consts))
    if not tested:
        raise InsufficientData(f"{len(vals)} values cannot validate any period <= {max_period}")
    raise NoFitError(f"no quasi-polynomial with period <= {max_period} and degree <= {max_degree}")


def veronese(values: Sequence, d: int) -> list:
    if d < 1:
        raise ValueError(f"Veronese step must be positive, got {d}")
    return list(values[::d])


def hilbert_function(graph: DualGraph, r: int, l0: int, max_m: int) -> list[int]:
    """Ranks at levels ``k * l0`` for ``k = 0..max_m``; leg weights scale by ``k``."""
    if l0 < 0 or max_m < 0:
        raise ValueError("base level and range must be non-negative")
    out = []
    for k in range(max_m + 1):
        g = DualGraph(graph.vertices, graph.edges, tuple((v, w.scaled(k)) for v, w in graph.legs), graph.name)
        out.append(rank_nodal(g, r, k * l0))
    return out


@dataclass(frozen=True)
class ConeSpec:
    """Integer points ``(d_1..d_K, l)`` with ``sum d = (g-1) l`` and ``d_i >= r0 l``."""

    components: int
    genus: int
    r0: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r0", Fraction(self.r0))
        if self.components < 1:
            raise ConeError("need at least one component")
        if self.genus < 0:
            raise ConeError(f"genus must be non-negative, got {self.genus}")
        if self.genus - 1 < self.components * self.r0:
            raise ConeError("cone is empty: (g-1) < K * r0")

    def contains(self, d: Sequence[int], l: int) -> bool:
        return l >= 0 and sum(d) == (self.genus - 1) * l and all(x >= self.r0 * l for x in d)

    def points_at(self, l: int):
        """Integer points at height ``l`` in lexicographically decreasing order."""
        lo = ceil(self.r0 * l)
        spare = (self.genus - 1) * l - self.components * lo
        if spare < 0:
            return
        K = self.components
        pts = []
        for bars in itertools.combinations(range(spare + K - 1), K - 1):
            parts, prev = [], -1
            for b in bars:
                parts.append(b - prev - 1)
                prev = b
            parts.append(spare + K - 2 - prev)
            pts.append(tuple(lo + p for p in parts))
        yield from sorted(pts, reverse=True)

    def extreme_rays(self) -> list[tuple[tuple[int, ...], int]]:
        K, g1 = self.components, self.genus - 1
        out = []
        for j in range(K):
            v = [self.r0] * K
            v[j] += g1 - K * self.r0
            vec = v + [Fraction(1)]
            den = 1
            for x in vec:
                den = den * x.denominator // gcd(den, x.denominator)
            ints = [int(x * den) for x in vec]
            g = 0
            for x in ints:
                g = gcd(g, x)
            ints = [x // g for x in ints]
            ray = (tuple(ints[:-1]), ints[-1])
            if ray not in out:
                out.append(ray)
        return out


@dataclass(frozen=True)
class HilbertBasis:
    generators: tuple[tuple[tuple[int, ...], int], ...]
    bound: int
    required_bound: int

    @property
    def a_weights(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(x, l) for x in d) for d, l in self.generators)


def hilbert_basis(cone: ConeSpec, bound: int) -> HilbertBasis:
    """Irreducible integer points of ``cone`` found by saturation up to ``bound``.

    The cone is simplicial, so every Hilbert basis element other than the
    primitive rays lies in the half-open parallelepiped they span and has
    height below the sum of the ray heights.  Searching to that height
    certifies completeness.
    """
    rays = cone.extreme_rays()
    required = max(max(l for _, l in rays), sum(l for _, l in rays) - 1)
    gens: list[tuple[tuple[int, ...], int]] = []
    for l in range(1, bound + 1):
        for d in cone.points_at(l):
            if not any(
                cone.contains([x - y for x, y in zip(d, hd)], l - hl) for hd, hl in gens
            ):
                gens.append((d, l))
    if bound < required:
        raise UncertifiedBasisError(
            f"bound {bound} is below the certification height {required}", gens
        )
    return HilbertBasis(tuple(gens), bound, required)


def _binom(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial top {n} is negative")
    return comb(n, k)  # zero for 0 <= n < k


def chern_sl2_coefficients(m: int) -> tuple[Fraction, Fraction]:
    """The two binomial displays for the first Chern class of level-``2m`` sl2 blocks."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    alpha = (
        _binom(9 + m, 10)
        - 20 * _binom(7 + m, 10)
        + 64 * _binom(6 + m, 10)
        - 90 * _binom(5 + m, 10)
        + 64 * _binom(4 + m, 10)
        - 20 * _binom(3 + m, 10)
        + _binom(1 + m, 10)
    )
    beta = (
        -8 * _binom(9 + m, 9)
        + Fraction(192, 5) * _binom(6 + m, 9)
        - 72 * _binom(5 + m, 9)
        + 64 * _binom(4 + m, 9)
        - 24 * _binom(3 + m, 9)
        + Fraction(8, 5) * _binom(1 + m, 9)
    )
    return Fraction(alpha), Fraction(beta)


def polynomial_degree(f, probe: int = 14) -> int:
    """Degree of a polynomial function on ``0..probe-1`` via finite differences."""
    row = [Fraction(f(i)) for i in range(probe)]
    deg = -1
    k = 0
    while row:
        if any(row):
            deg = k
        row = [b - a for a, b in zip(row, row[1:])]
        k += 1
    return deg


def chern_sl2_degrees() -> tuple[int, int]:
    return (
        polynomial_degree(lambda m: chern_sl2_coefficients(m)[0]),
        polynomial_degree(lambda m: chern_sl2_coefficients(m)[1]),
    )
