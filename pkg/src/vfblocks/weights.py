"""Dominant integral weights of sl_r in normalized partition form.

A weight is stored as ``r`` weakly decreasing non-negative integers whose last
entry is 0.  All pairings against ``x_{r-1} = (1/r)(r-1, -1, ..., -1)`` are
exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence


class LevelError(ValueError):
    """A weight exceeds the level it is being used at."""


@dataclass(frozen=True, order=True)
class Weight:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if len(parts) < 2:
            raise ValueError(f"sl_r weights need r >= 2 parts, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts[-1] != 0:
            raise ValueError(f"last part must be 0 (use Weight.normalized): {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def normalized(cls, parts: Sequence[int]) -> "Weight":
        """Build a weight from any weakly decreasing integer vector."""
        last = parts[-1]
        return cls(tuple(p - last for p in parts))

    @classmethod
    def zero(cls, r: int) -> "Weight":
        return cls((0,) * r)

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> "Weight":
        """Parse ``"2,1,0"``.  A short list is padded with zeros up to ``r``."""
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
        if r is not None:
            if len(parts) > r:
                raise ValueError(f"weight {text!r} has more than r={r} parts")
            parts += [0] * (r - len(parts))
        return cls.normalized(parts)

    @property
    def rank_r(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def scaled(self, k: int) -> "Weight":
        return Weight(tuple(k * p for p in self.parts))


def dual(w: Weight) -> Weight:
    p = w.parts
    r = len(p)
    return Weight(tuple(p[0] - p[r - 1 - i] for i in range(r)))


def level(w: Weight) -> int:
    return w.parts[0]


def x_pairing(w: Weight) -> Fraction:
    """Value of ``w`` on ``x_{r-1}``, i.e. ``lambda_1 - |lambda|/r``."""
    return w.parts[0] - Fraction(w.size, w.rank_r)


def in_root_lattice(w: Weight) -> bool:
    return w.size % w.rank_r == 0


def _check_level(w: Weight, l: int) -> None:
    if l < 0:
        raise LevelError(f"level must be non-negative, got {l}")
    if level(w) > l:
        raise LevelError(f"weight {w} has level {level(w)} > {l}")


@dataclass(frozen=True)
class EpsilonPair:
    low: Fraction
    high: Fraction

    def __contains__(self, eps: Fraction) -> bool:
        return self.low <= eps <= self.high


def epsilon_pair(w: Weight, l: int) -> EpsilonPair:
    """The two admissible node perturbations for a branch labelled ``w``.

    ``low = w*(x)/l - 1/2`` and ``high = 1/2 - w(x)/l``.  ``low <= high``
    whenever ``level(w) <= l``.
    """
    if l < 1:
        raise LevelError(f"epsilon pairs need l >= 1, got {l}")
    _check_level(w, l)
    half = Fraction(1, 2)
    low = x_pairing(dual(w)) / l - half
    high = half - x_pairing(w) / l
    return EpsilonPair(low, high)


def epsilon_midpoint(w: Weight, l: int) -> Fraction:
    if l < 1:
        raise LevelError(f"epsilon midpoint needs l >= 1, got {l}")
    _check_level(w, l)
    return (x_pairing(dual(w)) - x_pairing(w)) / (2 * l)


@lru_cache(maxsize=None)
def _level_weights(r: int, l: int) -> tuple[Weight, ...]:
    out: list[Weight] = []

    def rec(prefix: list[int], cap: int) -> None:
        if len(prefix) == r - 1:
            out.append(Weight(tuple(prefix) + (0,)))
            return
        for v in range(cap + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], l)
    out.sort()
    return tuple(out)


def weights_at_level(r: int, l: int) -> tuple[Weight, ...]:
    """All dominant weights of sl_r with level <= l, in lexicographic order."""
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if l < 0:
        raise LevelError(f"level must be non-negative, got {l}")
    return _level_weights(r, l)


def iter_weights(r: int, l: int) -> Iterator[Weight]:
    return iter(weights_at_level(r, l))
