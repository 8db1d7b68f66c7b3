"""Univariate polynomials in ``t`` with rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Coeff = Union[int, Fraction]

_TERM = re.compile(
    r"""\s*([+-]?)\s*
        (?:(\d+(?:/\d+)?)\s*\*?\s*)?
        (t(?:\s*\^\s*(\d+))?)?\s*""",
    re.X,
)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        c = [x if type(x) is Fraction else Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, c: Coeff) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Coeff = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> "Poly":
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial")
        out = cls()
        pos = 0
        first = True
        while pos < len(s):
            m = _TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
            sign, num, tpart, power = m.groups()
            if not first and not sign:
                raise ValueError(f"missing operator in {text!r} at position {pos}")
            if num is None and tpart is None:
                raise ValueError(f"dangling sign in {text!r}")
            c = Fraction(num) if num else Fraction(1)
            if sign == "-":
                c = -c
            k = 0 if tpart is None else int(power or 1)
            out = out + cls.monomial(k, c)
            pos = m.end()
            first = False
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def valuation(self) -> int:
        """Order of vanishing at ``t = 0``."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no valuation")
        return next(i for i, c in enumerate(self.coeffs) if c)

    def monic(self) -> "Poly":
        return self * Fraction(1) / self.lead if self.coeffs else self

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Coeff) -> "Poly":
        return Poly(x / Fraction(c) for x in self.coeffs)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.lead
        d = other.degree
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] / lead
            q[k] = c
            for j, y in enumerate(other.coeffs):
                rem[k + j] -= c * y
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: Coeff) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")
