"""Small quantum cohomology of Gr(k, n) with q-degree tracking.

Schubert classes are indexed by partitions inside the ``k x (n-k)`` box.  A
product is the classical Littlewood-Richardson expansion with at most ``k``
rows, after which ``n``-rim hooks are stripped until the first row fits.  Each
removed hook contributes one power of ``q`` and the sign ``(-1)^(k - height)``.

Index sets ``I = {i_1 < ... < i_k}`` of ``{1..n}`` correspond to partitions via
``lambda_a = (n - k) + a - i_a``.  Under this convention ``I = {1, n}`` in
``Gr(2, n)`` is the one-row class ``(n-2)`` and ``{1, 2}`` is the full box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fusion import remove_rim_hook
from .kernels import lr_expand
from .weights import Weight, dual

Partition = tuple[int, ...]


class BoxError(ValueError):
    pass


def _pad(parts: Sequence[int], k: int) -> Partition:
    p = tuple(int(x) for x in parts)
    if len(p) > k and any(p[k:]):
        raise BoxError(f"partition {p} has more than {k} rows")
    p = p[:k] + (0,) * (k - len(p))
    return p


def _check_box(p: Partition, k: int, n: int) -> None:
    if any(a < b for a, b in zip(p, p[1:])) or (p and p[-1] < 0):
        raise BoxError(f"{p} is not a partition")
    if p and p[0] > n - k:
        raise BoxError(f"partition {p} does not fit the {k}x{n - k} box")


def _check_grass(k: int, n: int) -> None:
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")


@dataclass(frozen=True)
class QClass:
    """Element of QH*(Gr(k, n)): ``{(partition, q_exponent): coeff}``."""

    k: int
    n: int
    terms: Mapping[tuple[Partition, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_grass(self.k, self.n)
        clean: dict[tuple[Partition, int], int] = {}
        for (p, c), v in self.terms.items():
            p = _pad(p, self.k)
            _check_box(p, self.k, self.n)
            if c < 0:
                raise ValueError(f"negative q-exponent {c}")
            if v:
                clean[(p, c)] = clean.get((p, c), 0) + v
        object.__setattr__(self, "terms", {t: v for t, v in sorted(clean.items()) if v})

    @classmethod
    def schubert(cls, k: int, n: int, parts: Sequence[int], qdeg: int = 0) -> "QClass":
        return cls(k, n, {(tuple(parts), qdeg): 1})

    @classmethod
    def one(cls, k: int, n: int) -> "QClass":
        return cls.schubert(k, n, ())

    @classmethod
    def from_index_set(cls, k: int, n: int, index: Iterable[int]) -> "QClass":
        return cls.schubert(k, n, index_set_to_partition(k, n, index))

    def min_qdeg(self) -> int | None:
        return min((c for _, c in self.terms), default=None)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QClass):
            return NotImplemented
        return (self.k, self.n, dict(self.terms)) == (other.k, other.n, dict(other.terms))

    def __hash__(self) -> int:
        return hash((self.k, self.n, tuple(self.terms.items())))


def index_set_to_partition(k: int, n: int, index: Iterable[int]) -> Partition:
    idx = sorted(index)
    if len(idx) != k or len(set(idx)) != k or idx[0] < 1 or idx[-1] > n:
        raise ValueError(f"{idx} is not a {k}-subset of 1..{n}")
    return tuple((n - k) + a - i for a, i in enumerate(idx, start=1))


def partition_to_index_set(k: int, n: int, parts: Sequence[int]) -> tuple[int, ...]:
    p = _pad(parts, k)
    _check_box(p, k, n)
    return tuple((n - k) + a - lam for a, lam in enumerate(p, start=1))


def _reduce(nu: Partition, k: int, n: int) -> tuple[int, int, Partition] | None:
    """Strip ``n``-rim hooks; returns ``(sign, q_degree, core)`` or ``None``."""
    width = n - k
    parts = list(nu)
    sign, qdeg = 1, 0
    while parts[0] > width:
        for row in range(k):
            step = remove_rim_hook(parts, n, row)
            if step is not None:
                break
        else:
            return None
        parts, height = step
        if (k - height) % 2:
            sign = -sign
        qdeg += 1
    return sign, qdeg, tuple(parts)


def _product_schubert(k: int, n: int, a: Partition, b: Partition) -> dict[tuple[Partition, int], int]:
    out: dict[tuple[Partition, int], int] = {}
    for nu, c in lr_expand(a, b, k).items():
        red = _reduce(nu, k, n)
        if red is None:
            continue
        sign, d, core = red
        out[(core, d)] = out.get((core, d), 0) + sign * c
    return out


def quantum_product(k: int, n: int, a: QClass, b: QClass) -> QClass:
    _check_grass(k, n)
    for x in (a, b):
        if (x.k, x.n) != (k, n):
            raise BoxError(f"class lives in Gr({x.k},{x.n}), not Gr({k},{n})")
    out: dict[tuple[Partition, int], int] = {}
    for (pa, ca), va in a.terms.items():
        for (pb, cb), vb in b.terms.items():
            for (p, d), c in _product_schubert(k, n, pa, pb).items():
                key = (p, ca + cb + d)
                out[key] = out.get(key, 0) + va * vb * c
    return QClass(k, n, out)


def power_with_qdegrees(k: int, n: int, a: QClass, e: int) -> QClass:
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = QClass.one(k, n)
    for _ in range(e):
        result = quantum_product(k, n, result, a)
    return result


def sigma_I(k: int, n: int) -> QClass:
    """The class ``(n - k)``; for ``k = 2`` this is ``I = {1, n}``."""
    return QClass.schubert(k, n, (n - k,))


def gw_nonvanishing_bound(k: int, n: int, e: int) -> tuple[bool, int | None]:
    """Whether ``sigma_I^e`` has a term ``q^c sigma_J`` with ``c <= e - 2``."""
    if e < 0:
        raise ValueError(f"e must be non-negative, got {e}")
    c = power_with_qdegrees(k, n, sigma_I(k, n), e).min_qdeg()
    if c is None:
        return False, None
    return c <= e - 2, c


def horn_inequality_check(r: int, l: int, mus: Sequence[Weight]) -> bool:
    """Eigenvalue inequality at a genus-0 vertex.

    ``mus`` are the scaled weights ``l * mu^x``; pass ``dual(lambda_x)`` for
    a node label ``lambda_x``.
    """
    if len(mus) < 3:
        raise ValueError(f"need at least 3 points, got {len(mus)}")
    if l < 1:
        raise ValueError(f"level must be positive, got {l}")
    total = Fraction(0)
    for m in mus:
        if m.rank_r != r:
            raise ValueError(f"weight {m} is not an sl_{r} weight")
        p = m.parts
        total += Fraction(p[0] + p[-1], l) - Fraction(2 * m.size, r * l)
    return total <= len(mus) - 2


def horn_for_labels(r: int, l: int, labels: Sequence[Weight]) -> bool:
    """:func:`horn_inequality_check` on the duals of node labels."""
    return horn_inequality_check(r, l, [dual(w) for w in labels])
