"""Numeric slope-semistability checks on multi-rank / Euler-characteristic data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SemistabilityError(ValueError):
    pass


@dataclass(frozen=True)
class MultiDegreeSheafData:
    ranks: tuple[int, ...]
    chi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", tuple(int(x) for x in self.ranks))
        object.__setattr__(self, "chi", Fraction(self.chi))
        if any(x < 0 for x in self.ranks):
            raise SemistabilityError(f"negative rank in {self.ranks}")

    @property
    def uniform_rank(self) -> int | None:
        return self.ranks[0] if self.ranks and len(set(self.ranks)) == 1 else None

    def twisted(self, deg_l: Sequence[int]) -> "MultiDegreeSheafData":
        """Euler characteristic after tensoring with a line bundle of multidegree ``deg_l``."""
        if len(deg_l) != len(self.ranks):
            raise SemistabilityError("multidegree length does not match the components")
        return MultiDegreeSheafData(
            self.ranks, self.chi + sum(d * r for d, r in zip(deg_l, self.ranks))
        )


def _pair(w: Sequence[Fraction], ranks: Sequence[int]) -> Fraction:
    return sum((Fraction(a) * r for a, r in zip(w, ranks)), Fraction(0))


def _check_subsheaves(E: MultiDegreeSheafData, subs: Sequence[MultiDegreeSheafData]) -> None:
    for F in subs:
        if len(F.ranks) != len(E.ranks):
            raise SemistabilityError(f"subsheaf has {len(F.ranks)} components, E has {len(E.ranks)}")
        if any(rf > re for rf, re in zip(F.ranks, E.ranks)):
            raise SemistabilityError(f"subsheaf ranks {F.ranks} exceed {E.ranks}")


def linear_semistable(
    E: MultiDegreeSheafData, subsheaves: Sequence[MultiDegreeSheafData], gamma: Sequence[Fraction]
) -> bool:
    if len(gamma) != len(E.ranks):
        raise SemistabilityError("gamma length does not match the components")
    if E.chi != _pair(gamma, E.ranks):
        raise SemistabilityError(f"chi(E) = {E.chi} but sum gamma_i r_i(E) = {_pair(gamma, E.ranks)}")
    _check_subsheaves(E, subsheaves)
    return all(F.chi <= _pair(gamma, F.ranks) for F in subsheaves)


def a_gamma(E: MultiDegreeSheafData, a: Sequence[Fraction]) -> list[Fraction]:
    if len(a) != len(E.ranks):
        raise SemistabilityError("weight vector length does not match the components")
    if sum(Fraction(x) for x in a) == 0:
        raise SemistabilityError("the weights a_i sum to zero")
    denom = _pair(a, E.ranks)
    if denom == 0:
        raise SemistabilityError("sum a_i r_i(E) is zero; the a-slope is undefined")
    slope = E.chi / denom
    return [Fraction(x) * slope for x in a]


def a_semistable(
    E: MultiDegreeSheafData, subsheaves: Sequence[MultiDegreeSheafData], a: Sequence[Fraction]
) -> bool:
    return linear_semistable(E, subsheaves, a_gamma(E, a))


def twist_alpha_from_a(
    a: Sequence[Fraction], deg_l: Sequence[int], g: int, scale: int
) -> list[int]:
    if len(a) != len(deg_l):
        raise SemistabilityError("a and deg(L) lengths differ")
    total = sum(Fraction(x) for x in a)
    if total <= 0:
        raise SemistabilityError(f"sum of a_i must be positive, got {total}")
    out = []
    for ai, di in zip(a, deg_l):
        v = scale * (di - Fraction(ai) * (g - 1) / total)
        if v.denominator != 1:
            raise SemistabilityError(f"alpha_i = {v} is not an integer; choose a more divisible scale")
        out.append(int(v))
    return out


def limit_semistable(E: MultiDegreeSheafData, subsheaves: Sequence[MultiDegreeSheafData]) -> bool:
    """Uniform-multirank slope condition; non-uniform ``F`` are skipped."""
    r = E.uniform_rank
    if not r:
        raise SemistabilityError(f"E must have uniform positive multirank, got {E.ranks}")
    _check_subsheaves(E, subsheaves)
    bound = E.chi / r
    for F in subsheaves:
        rf = F.uniform_rank
        if not rf:
            continue
        if F.chi / rf > bound:
            return False
    return True
