"""Generalized Kostka polynomials from the fermionic sum, and the Kostka matrix.

For a dominant weight ``lambda`` of sl(r+1) and rectangles
``mu_p = a_p w_(alpha_p)``, the polynomial is a sum over mode vectors
``m_a^(alpha)`` (multiplicities of parts ``a`` in partitions ``nu^(alpha)`` of
``m^(alpha)``, with ``m = C_r^{-1}(n - l)``) of

    q^{m.(C x A)m / 2} * prod_{a,alpha} [P_a^(alpha) + m_a^(alpha), m_a^(alpha)]_q

where ``A_ab = min(a, b)`` and ``P`` are the vacancy numbers.  Large level is
assumed throughout, so parts are only capped by the total rectangle width.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Optional, Sequence, Union

from .qseries import LaurentPolynomial, gaussian_binomial, reciprocal_q
from .weights import (
    PartitionShape,
    RankedWeight,
    RectangularSequence,
    all_partitions,
    cartan_inverse_times,
    order_compare,
    partition_to_weight,
    weight_to_partition,
)

__all__ = [
    "ModeVector",
    "KostkaMatrix",
    "UnitriangularityError",
    "kostka_poly",
    "kostka_poly_rectangles",
    "quadratic_form",
    "vacancy_numbers",
    "n_statistic",
    "build_kostka_matrix",
    "invert_unitriangular",
    "kostka_index_set",
]

Rectangles = Sequence[tuple[int, int]]  # (width a_p, node alpha_p)


class UnitriangularityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ModeVector:
    """``modes[alpha-1][a-1] = m_a^(alpha)`` for ``a = 1..k_eff``."""

    modes: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.modes)

    @property
    def bound(self) -> int:
        return len(self.modes[0]) if self.modes else 0

    def totals(self) -> tuple[int, ...]:
        """``m^(alpha) = sum_a a m_a^(alpha)``."""
        return tuple(sum((a + 1) * x for a, x in enumerate(row)) for row in self.modes)

    @classmethod
    def from_partitions(cls, parts: Sequence[Sequence[int]], bound: int) -> ModeVector:
        rows = []
        for nu in parts:
            row = [0] * bound
            for a in nu:
                if not 1 <= a <= bound:
                    raise ValueError(f"part {a} outside 1..{bound}")
                row[a - 1] += 1
            rows.append(tuple(row))
        return cls(tuple(rows))


def _column_sums(row: Sequence[int]) -> list[int]:
    # Q_a = sum_b min(a, b) m_b: boxes in the first a columns
    k = len(row)
    out = []
    for a in range(1, k + 1):
        out.append(sum(min(a, b + 1) * x for b, x in enumerate(row)))
    return out


def _rect_counts(r: int, rects: Rectangles, bound: int) -> list[list[int]]:
    n = [[0] * bound for _ in range(r)]
    for a, alpha in rects:
        if not 1 <= alpha <= r:
            raise ValueError(f"rectangle node {alpha} outside 1..{r}")
        if a < 1:
            continue
        if a > bound:
            raise ValueError(f"rectangle width {a} exceeds bound {bound}")
        n[alpha - 1][a - 1] += 1
    return n


def quadratic_form(r: int, m: ModeVector) -> Fraction:
    """``m.(C_r x A)m / 2`` as an exact rational."""
    if m.rank != r:
        raise ValueError("mode vector rank mismatch")
    Q = [_column_sums(row) for row in m.modes]
    total = 0
    for al in range(r):
        for a, x in enumerate(m.modes[al]):
            if not x:
                continue
            s = 2 * Q[al][a]
            if al > 0:
                s -= Q[al - 1][a]
            if al + 1 < r:
                s -= Q[al + 1][a]
            total += x * s
    return Fraction(total, 2)


def vacancy_numbers(r: int, m: ModeVector, rects: Rectangles) -> list[list[int]]:
    """``P[alpha-1][a-1] = sum_b A_ab n_b^(alpha) - sum_(beta,b) C_(alpha beta) A_ab m_b^(beta)``."""
    k = m.bound
    n = _rect_counts(r, rects, k)
    Qm = [_column_sums(row) for row in m.modes]
    Qn = [_column_sums(row) for row in n]
    P = []
    for al in range(r):
        row = []
        for a in range(k):
            v = Qn[al][a] - 2 * Qm[al][a]
            if al > 0:
                v += Qm[al - 1][a]
            if al + 1 < r:
                v += Qm[al + 1][a]
            row.append(v)
        P.append(row)
    return P


def n_statistic(rects: Union[RectangularSequence, Rectangles]) -> int:
    """``sum_{p<p'} min(alpha_p, alpha_p') min(a_p, a_p')`` over the nonzero rectangles."""
    if isinstance(rects, RectangularSequence):
        rects = rects.rectangles()
    rs = [(a, al) for a, al in rects if a > 0]
    return sum(
        min(rs[i][1], rs[j][1]) * min(rs[i][0], rs[j][0])
        for i in range(len(rs))
        for j in range(i + 1, len(rs))
    )


def _check_dominant(lam: RankedWeight) -> None:
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not a dominant weight")


def mode_totals(r: int, lam: RankedWeight, rects: Rectangles) -> Optional[tuple[int, ...]]:
    """``m = C_r^{-1}(n - l)`` when it is a nonnegative integer vector, else None."""
    n = [0] * r
    for a, alpha in rects:
        n[alpha - 1] += a
    m = cartan_inverse_times(r, [x - y for x, y in zip(n, lam.coords)])
    if any(x.denominator != 1 or x < 0 for x in m):
        return None
    return tuple(int(x) for x in m)


def kostka_poly(r: int, lam: RankedWeight, n: RectangularSequence, *, bound: Optional[int] = None) -> LaurentPolynomial:
    """Kostka polynomial for one rectangle ``n^(alpha) w_alpha`` per node."""
    if n.rank != r:
        raise ValueError(f"sequence rank {n.rank} does not match r={r}")
    return kostka_poly_rectangles(r, lam, n.rectangles(), bound=bound)


def kostka_poly_rectangles(
    r: int, lam: RankedWeight, rects: Rectangles, *, bound: Optional[int] = None
) -> LaurentPolynomial:
    """Kostka polynomial for an arbitrary list of rectangles ``(a_p, alpha_p)``.

    ``bound`` overrides the part cap (default: total rectangle width, at least 1);
    it exists so that the cap can be shown to be harmless.
    """
    if lam.rank != r:
        raise ValueError(f"weight rank {lam.rank} does not match r={r}")
    _check_dominant(lam)
    rects = tuple((int(a), int(al)) for a, al in rects if a > 0)
    m = mode_totals(r, lam, rects)
    if m is None:
        return LaurentPolynomial()
    k = bound if bound is not None else max(1, sum(a for a, _ in rects))
    return _kostka_cached(r, tuple(lam.coords), tuple(sorted(rects)), m, k)


@lru_cache(maxsize=None)
def _kostka_cached(r, lam, rects, m, k) -> LaurentPolynomial:
    n = _rect_counts(r, rects, k)
    Qn = [_column_sums(row) for row in n]
    choices = []
    for al in range(r):
        opts = []
        for nu in all_partitions(m[al], max_part=k):
            row = [0] * k
            for a in nu:
                row[a - 1] += 1
            opts.append((tuple(row), _column_sums(row)))
        choices.append(opts)

    result: dict[int, int] = {}
    rows: list = [None] * r

    def vac_ok(al: int) -> bool:
        Qa = rows[al][1]
        for a in range(k):
            v = Qn[al][a] - 2 * Qa[a]
            if al > 0:
                v += rows[al - 1][1][a]
            if al + 1 < r:
                v += rows[al + 1][1][a]
            if v < 0:
                return False
        return True

    def rec(al: int):
        if al == r:
            if r >= 1 and not vac_ok(r - 1):
                return
            _accumulate(r, rows, Qn, k, result)
            return
        for opt in choices[al]:
            rows[al] = opt
            if al >= 1 and not vac_ok(al - 1):
                continue
            rec(al + 1)
        rows[al] = None

    rec(0)
    return LaurentPolynomial(result)


def _accumulate(r, rows, Qn, k, result) -> None:
    twice = 0
    poly = LaurentPolynomial.constant(1)
    for al in range(r):
        row, Q = rows[al]
        for a in range(k):
            x = row[a]
            if not x:
                continue
            s = 2 * Q[a]
            P = Qn[al][a] - 2 * Q[a]
            if al > 0:
                s -= rows[al - 1][1][a]
                P += rows[al - 1][1][a]
            if al + 1 < r:
                s -= rows[al + 1][1][a]
                P += rows[al + 1][1][a]
            twice += x * s
            poly = poly * gaussian_binomial(x, P)
    if twice % 2:
        raise ArithmeticError(f"half-integral exponent {twice}/2 on a contributing term")
    for e, c in poly.items():
        result[e + twice // 2] = result.get(e + twice // 2, 0) + c


def kostka_index_set(r: int, width_bound: int, size_max: int, residue: int) -> list[PartitionShape]:
    """Partitions with <= r parts, width <= width_bound, size <= size_max, size = residue mod r+1, ascending."""
    if width_bound < 0:
        raise ValueError("width_bound must be >= 0")
    out = []
    for size in range(0, size_max + 1):
        if (size - residue) % (r + 1):
            continue
        for p in all_partitions(size, max_part=width_bound, max_len=r):
            out.append(PartitionShape(p))
    return sorted(out, key=cmp_to_key(order_compare))


@dataclass
class KostkaMatrix:
    rank: int
    order: list[PartitionShape]
    entries: list[list[LaurentPolynomial]]
    is_inverse: bool = False
    _pos: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._pos = {p: i for i, p in enumerate(self.order)}
        if len(self.entries) != len(self.order) or any(len(r) != len(self.order) for r in self.entries):
            raise ValueError("entries must be a square array matching the index")

    def __len__(self) -> int:
        return len(self.order)

    def index_of(self, p: Union[PartitionShape, RankedWeight]) -> int:
        if isinstance(p, RankedWeight):
            p = weight_to_partition(p)
        return self._pos[p]

    def entry(self, row, col) -> LaurentPolynomial:
        """Entry by partitions or dominant weights."""
        return self.entries[self.index_of(row)][self.index_of(col)]

    def column(self, col) -> dict[PartitionShape, LaurentPolynomial]:
        j = self.index_of(col)
        return {p: self.entries[i][j] for i, p in enumerate(self.order) if self.entries[i][j]}

    def weights(self) -> list[RankedWeight]:
        return [partition_to_weight(self.rank, p) for p in self.order]

    def check_unitriangular(self) -> None:
        for i, row in enumerate(self.entries):
            if row[i] != 1:
                raise UnitriangularityError(f"diagonal entry at {self.order[i]} is {row[i]}")
            for j in range(i):
                if row[j]:
                    raise UnitriangularityError(
                        f"nonzero entry {row[j]} below the diagonal at ({self.order[i]}, {self.order[j]})"
                    )

    def substitute_inverse_q(self) -> KostkaMatrix:
        """Entrywise ``q -> 1/q``."""
        return KostkaMatrix(
            self.rank, list(self.order), [[reciprocal_q(e) for e in row] for row in self.entries], self.is_inverse
        )

    def __matmul__(self, other: KostkaMatrix) -> list[list[LaurentPolynomial]]:
        if self.order != other.order:
            raise ValueError("index sets differ")
        n = len(self.order)
        zero = LaurentPolynomial()
        return [
            [sum((self.entries[i][l] * other.entries[l][j] for l in range(n)), zero) for j in range(n)]
            for i in range(n)
        ]

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "order": [list(p.padded(self.rank)) for p in self.order],
            "entries": [[e.to_json() for e in row] for row in self.entries],
            "inverse": self.is_inverse,
        }

    @classmethod
    def from_json(cls, data: dict) -> KostkaMatrix:
        return cls(
            int(data["rank"]),
            [PartitionShape(p) for p in data["order"]],
            [[LaurentPolynomial.from_json(e) for e in row] for row in data["entries"]],
            bool(data["inverse"]),
        )

    def render(self) -> str:
        """Index list in weight labels followed by the matrix, one row per line."""
        labels = [str(w) for w in self.weights()]
        cells = [[str(e) for e in row] for row in self.entries]
        width = max([len(c) for row in cells for c in row] + [1])
        lines = ["order: " + " ".join(labels)]
        lines.append("[")
        for row in cells:
            lines.append("  [" + ", ".join(c.rjust(width) for c in row) + "]")
        lines.append("]")
        return "\n".join(lines)


def build_kostka_matrix(r: int, width_bound: int, size_max: int, residue: int) -> KostkaMatrix:
    """Kostka matrix on the index set of :func:`kostka_index_set`.

    Entry ``(row p, col s)`` is ``K_{lambda, n}`` with ``lambda`` the weight of
    ``p`` and ``n`` the rectangles read off the columns of ``s``.
    """
    order = kostka_index_set(r, width_bound, size_max, residue)
    return _build_cached(r, tuple(order))


@lru_cache(maxsize=None)
def _build_cached(r: int, order: tuple[PartitionShape, ...]) -> KostkaMatrix:
    weights = [partition_to_weight(r, p) for p in order]
    seqs = [RectangularSequence.from_partition(r, p) for p in order]
    entries = [[kostka_poly(r, lam, n) for n in seqs] for lam in weights]
    K = KostkaMatrix(r, list(order), entries, False)
    K.check_unitriangular()
    return K


def invert_unitriangular(K: KostkaMatrix) -> KostkaMatrix:
    """Exact inverse by back substitution over Z[q, 1/q]."""
    K.check_unitriangular()
    n = len(K)
    zero = LaurentPolynomial()
    X = [[zero] * n for _ in range(n)]
    for j in range(n):
        X[j][j] = LaurentPolynomial.constant(1)
        for i in range(j - 1, -1, -1):
            acc = zero
            for l in range(i + 1, j + 1):
                if K.entries[i][l] and X[l][j]:
                    acc = acc + K.entries[i][l] * X[l][j]
            X[i][j] = -acc
    return KostkaMatrix(K.rank, list(K.order), X, not K.is_inverse)
