"""Cartan data of sl(r+1), finite weights, partitions and the affine translation.

Weights live in fundamental-weight coordinates only: ``RankedWeight((1, 2, 1))``
is ``w1 + 2 w2 + w3``.  Root-lattice vectors are converted through the Cartan
matrix explicitly (``alpha = C w``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

__all__ = [
    "RankedWeight",
    "PartitionShape",
    "RectangularSequence",
    "AffineWeightLabel",
    "Order",
    "cartan_matrix",
    "min_matrix",
    "cartan_inverse_times",
    "weight_to_partition",
    "partition_to_weight",
    "nu_concat",
    "pad_partition",
    "order_compare",
    "dominance_leq",
    "affine_translate",
    "simple_reflection",
    "weyl_dimension",
    "parse_int_list",
]


@dataclass(frozen=True)
class RankedWeight:
    """A weight of sl(r+1) in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        c = tuple(int(x) for x in coords)
        if not c:
            raise ValueError("a weight of sl(r+1) needs r >= 1 coordinates")
        object.__setattr__(self, "coords", c)

    @classmethod
    def zero(cls, r: int) -> RankedWeight:
        return cls((0,) * r)

    @classmethod
    def fundamental(cls, r: int, beta: int, mult: int = 1) -> RankedWeight:
        if not 1 <= beta <= r:
            raise ValueError(f"fundamental weight index {beta} out of range 1..{r}")
        return cls(mult if i == beta - 1 else 0 for i in range(r))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.coords)

    def is_restricted(self, level: int) -> bool:
        return self.is_dominant() and sum(self.coords) <= level

    def rectangle(self) -> tuple[int, int] | None:
        """``(l, beta)`` if the weight is ``l * w_beta`` (``(0, 1)`` for zero), else None."""
        nz = [(i + 1, x) for i, x in enumerate(self.coords) if x]
        if not nz:
            return (0, 1)
        if len(nz) == 1 and nz[0][1] > 0:
            return (nz[0][1], nz[0][0])
        return None

    def __add__(self, other: RankedWeight) -> RankedWeight:
        _same_rank(self, other)
        return RankedWeight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: RankedWeight) -> RankedWeight:
        _same_rank(self, other)
        return RankedWeight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> RankedWeight:
        return RankedWeight(-a for a in self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __lt__(self, other: RankedWeight) -> bool:
        return self.coords < other.coords

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.coords) + "]"


def _same_rank(a: RankedWeight, b: RankedWeight) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


@dataclass(frozen=True, order=False)
class PartitionShape:
    """Weakly decreasing nonnegative parts; trailing zeros are stripped."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        p = [int(x) for x in parts]
        if any(x < 0 for x in p):
            raise ValueError(f"negative part in {p}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {p}")
        while p and p[-1] == 0:
            p.pop()
        object.__setattr__(self, "parts", tuple(p))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """0-based part, zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> PartitionShape:
        return PartitionShape(sum(1 for p in self.parts if p > j) for j in range(self.width))

    def n_statistic(self) -> int:
        """``n(mu) = sum_i (i-1) mu_i``."""
        return sum(i * p for i, p in enumerate(self.parts))

    def render(self, length: int | None = None) -> str:
        parts = self.parts if length is None else self.padded(length)
        return "[" + ",".join(str(x) for x in parts) + "]"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RectangularSequence:
    """One rectangle ``n^(alpha) w_alpha`` per node alpha = 1..r (zeros allowed)."""

    counts: tuple[int, ...]

    def __init__(self, counts: Iterable[int]):
        c = tuple(int(x) for x in counts)
        if not c:
            raise ValueError("need r >= 1 counts")
        if any(x < 0 for x in c):
            raise ValueError(f"rectangle widths must be nonnegative: {c}")
        object.__setattr__(self, "counts", c)

    @property
    def rank(self) -> int:
        return len(self.counts)

    @property
    def total_width(self) -> int:
        return sum(self.counts)

    def rectangles(self) -> list[tuple[int, int]]:
        """Nonzero rectangles as ``(width a_p, node alpha_p)``."""
        return [(a, alpha + 1) for alpha, a in enumerate(self.counts) if a]

    def as_weight(self) -> RankedWeight:
        return RankedWeight(self.counts)

    @classmethod
    def from_partition(cls, r: int, p: PartitionShape) -> RectangularSequence:
        """Inverse of :func:`nu_concat`: ``n^(alpha) = p_alpha - p_(alpha+1)``."""
        if len(p) > r:
            raise ValueError(f"{p} has more than {r} parts")
        parts = p.padded(r) + (0,)
        return cls(parts[a] - parts[a + 1] for a in range(r))


@dataclass(frozen=True)
class AffineWeightLabel:
    """``lambda + k Lambda_0 - delta_coeff * delta``."""

    finite: RankedWeight
    level: int
    delta_coeff: int = 0


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def cartan_matrix(r: int) -> list[list[int]]:
    if r < 1:
        raise ValueError("rank must be >= 1")
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)] for i in range(r)]


def min_matrix(k: int) -> list[list[int]]:
    """``A[a][b] = min(a, b)`` with 1-based a, b (stored 0-based)."""
    if k < 1:
        raise ValueError("size must be >= 1")
    return [[min(a, b) for b in range(1, k + 1)] for a in range(1, k + 1)]


def cartan_inverse_entry(r: int, i: int, j: int) -> Fraction:
    """``(C_r^{-1})_{ij} = min(i, j) - ij/(r+1)``, 1-based indices."""
    return Fraction(min(i, j)) - Fraction(i * j, r + 1)


def cartan_inverse_times(r: int, v: Sequence[int]) -> tuple[Fraction, ...]:
    if len(v) != r:
        raise ValueError(f"vector has length {len(v)}, expected {r}")
    return tuple(
        sum((cartan_inverse_entry(r, i, j) * v[j - 1] for j in range(1, r + 1)), Fraction(0))
        for i in range(1, r + 1)
    )


def cartan_times(v: Sequence[int]) -> tuple[int, ...]:
    """``C_r v`` for a root-coordinate vector ``v``."""
    r = len(v)
    return tuple(
        2 * v[i] - (v[i - 1] if i > 0 else 0) - (v[i + 1] if i + 1 < r else 0) for i in range(r)
    )


def weight_to_partition(w: RankedWeight) -> PartitionShape:
    """Young diagram of a dominant weight: ``parts[b] = sum_{a >= b} l_a``."""
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    return PartitionShape(reversed(list(accumulate(reversed(w.coords)))))


def partition_to_weight(r: int, p: PartitionShape) -> RankedWeight:
    return RectangularSequence.from_partition(r, p).as_weight()


def nu_concat(n: RectangularSequence) -> PartitionShape:
    """Horizontal concatenation of the rectangles ``n^(alpha) w_alpha``."""
    return PartitionShape(reversed(list(accumulate(reversed(n.counts)))))


def pad_partition(w: RankedWeight, m_r: int) -> PartitionShape:
    """Add ``m_r`` full columns of height r+1 to the diagram of ``w``."""
    if m_r < 0:
        raise ValueError("m_r must be nonnegative")
    base = weight_to_partition(w).padded(w.rank)
    return PartitionShape([m_r + x for x in base] + [m_r])


def order_compare(a: PartitionShape, b: PartitionShape) -> Order:
    """Lexicographic comparison of parts (zero padded), regardless of size."""
    n = max(len(a), len(b))
    pa, pb = a.padded(n), b.padded(n)
    if pa == pb:
        return Order.EQ
    return Order.LT if pa < pb else Order.GT


def dominance_leq(a: PartitionShape, b: PartitionShape) -> bool:
    if a.size != b.size:
        return False
    n = max(len(a), len(b))
    return all(x <= y for x, y in zip(accumulate(a.padded(n)), accumulate(b.padded(n))))


def affine_translate(w: AffineWeightLabel, N: Sequence[int]) -> AffineWeightLabel:
    """Translation by the root-lattice vector ``sum N_i alpha_i``."""
    l = w.finite.coords
    r = len(l)
    if len(N) != r:
        raise ValueError(f"translation vector has length {len(N)}, expected {r}")
    k = w.level
    CN = cartan_times(N)
    NCN = sum(n * c for n, c in zip(N, CN))
    if (k * NCN) % 2:
        raise ArithmeticError("non-integral delta coefficient")  # N^T C N is always even
    new_finite = RankedWeight(x + k * c for x, c in zip(l, CN))
    delta = w.delta_coeff + sum(n * x for n, x in zip(N, l)) + k * NCN // 2
    return AffineWeightLabel(new_finite, k, delta)


def simple_reflection(w: RankedWeight, i: int) -> RankedWeight:
    """``s_i(w) = w - w_i alpha_i`` in fundamental-weight coordinates (1-based i)."""
    r = w.rank
    if not 1 <= i <= r:
        raise ValueError(f"reflection index {i} out of range 1..{r}")
    li = w.coords[i - 1]
    out = list(w.coords)
    out[i - 1] -= 2 * li
    if i - 2 >= 0:
        out[i - 2] += li
    if i < r:
        out[i] += li
    return RankedWeight(out)


def weyl_dimension(w: RankedWeight) -> int:
    if not w.is_dominant():
        raise ValueError(f"{w} is not dominant")
    r = w.rank
    num = 1
    den = 1
    for i in range(r):
        s = 0
        for j in range(i, r):
            s += w.coords[j]
            num *= s + j - i + 1
            den *= j - i + 1
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Weyl dimension formula not integral for {w}")
    return q


def dominant_conjugate(w: RankedWeight) -> tuple[RankedWeight, int]:
    """Dominant weight in the Weyl orbit of ``w`` and the length parity used to reach it."""
    coords = list(w.coords)
    sign = 1
    r = len(coords)
    while True:
        for i in range(r):
            if coords[i] < 0:
                li = coords[i]
                coords[i] = -li
                if i > 0:
                    coords[i - 1] += li
                if i + 1 < r:
                    coords[i + 1] += li
                sign = -sign
                break
        else:
            return RankedWeight(coords), sign


def parse_int_list(text: str) -> tuple[int, ...]:
    """``"1,2,1"`` -> ``(1, 2, 1)``."""
    items = [t.strip() for t in text.split(",")]
    if not items or any(t == "" for t in items):
        raise ValueError(f"expected comma-separated integers, got {text!r}")
    return tuple(int(t) for t in items)


def all_partitions(n: int, max_part: int | None = None, max_len: int | None = None):
    """Partitions of ``n`` in reverse lexicographic order, as tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest

