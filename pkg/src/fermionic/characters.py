"""Weight-graded q-characters of affine sl(r+1) modules, truncated at degree D.

A character is a table ``finite weight -> TruncatedSeries``.  Three families
of sums are implemented:

* principal subspaces and their fusion products (all modes ``m_a >= 0``);
* integrable modules and fusions of integrable modules (the top mode
  ``m_k`` ranges over all integers, with an overall ``1/(q)_inf^r``);
* the "two-line" parametrizations, where the total ``m^(alpha)`` replaces
  ``m_k^(alpha)`` and a congruence mod k links the two; these are used to
  cross-check the compact forms and to take the translation limit.

Arbitrary highest weights go through the inverse Kostka matrix at ``q -> 1/q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence

from .kostka import KostkaMatrix, build_kostka_matrix, invert_unitriangular
from .lattice import QuadraticForm, enumerate_points, enumerate_with_values
from .qseries import (
    INFINITY,
    LaurentPolynomial,
    TruncatedSeries,
    inverse_pochhammer_series,
    reciprocal_q,
)
from .weights import (
    PartitionShape,
    RankedWeight,
    RectangularSequence,
    cartan_inverse_times,
    cartan_matrix,
    simple_reflection,
    weight_to_partition,
)

__all__ = [
    "WeightGradedCharacter",
    "ShiftedSeries",
    "LevelRestrictionError",
    "char_W_rect",
    "char_W_rect_two_line",
    "char_W_rect_translated",
    "char_V_rect",
    "char_fusion_W",
    "char_fusion_W_two_line",
    "char_fusion_V",
    "char_fusion_V_two_line",
    "char_V_general",
    "char_W_general",
    "string_functions",
    "inverse_kostka_column",
]


class LevelRestrictionError(ValueError):
    """The weight or rectangle sequence does not fit at the requested level."""


@dataclass
class WeightGradedCharacter:
    rank: int
    level: int
    max_degree: int
    table: dict[RankedWeight, TruncatedSeries]
    formula: str
    label: tuple[str, tuple[int, ...]] = ("lambda", ())

    def __post_init__(self):
        clean = {}
        for w, s in self.table.items():
            if s.max_degree < self.max_degree:
                raise ValueError(f"series at {w} only exact through {s.max_degree}")
            s = s.truncate(self.max_degree)
            if s:
                clean[w] = s
        self.table = clean

    def weights(self) -> list[RankedWeight]:
        return sorted(self.table)

    def series(self, w) -> TruncatedSeries:
        if not isinstance(w, RankedWeight):
            w = RankedWeight(w)
        return self.table.get(w, TruncatedSeries.zero(self.max_degree))

    def multiplicity(self, w, degree: int) -> int:
        return self.series(w).coefficient(degree)

    def layer(self, degree: int) -> dict[RankedWeight, int]:
        """Weight multiplicities of the ``q**degree`` component."""
        out = {}
        for w, s in self.table.items():
            c = s.coefficient(degree)
            if c:
                out[w] = c
        return out

    def min_exponent(self) -> Optional[int]:
        exps = [s.valuation() for s in self.table.values()]
        return min(exps) if exps else None

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for s in self.table.values() for _, c in s.items())

    def truncate(self, max_degree: int) -> WeightGradedCharacter:
        return WeightGradedCharacter(
            self.rank, self.level, max_degree, {w: s.truncate(max_degree) for w, s in self.table.items()},
            self.formula, self.label,
        )

    def agrees_with(self, other: WeightGradedCharacter, through: Optional[int] = None) -> bool:
        d = min(self.max_degree, other.max_degree) if through is None else through
        a, b = self.truncate(d).table, other.truncate(d).table
        return a.keys() == b.keys() and all(a[w] == b[w] for w in a)

    def differences(self, other: WeightGradedCharacter, through: Optional[int] = None) -> list[str]:
        d = min(self.max_degree, other.max_degree) if through is None else through
        a, b = self.truncate(d).table, other.truncate(d).table
        out = []
        for w in sorted(set(a) | set(b)):
            sa = a.get(w, TruncatedSeries.zero(d))
            sb = b.get(w, TruncatedSeries.zero(d))
            if sa != sb:
                out.append(f"{w}: {sa} != {sb}")
        return out

    def weyl_violations(self) -> list[str]:
        """Places where the multiplicity at (w, q^d) differs from that at (s_i w, q^d)."""
        out = []
        for w, s in self.table.items():
            for i in range(1, self.rank + 1):
                sw = simple_reflection(w, i)
                if self.series(sw) != s:
                    out.append(f"{w} vs s_{i}{w}={sw}")
        return out

    def __add__(self, other: WeightGradedCharacter) -> WeightGradedCharacter:
        d = min(self.max_degree, other.max_degree)
        table = dict(self.truncate(d).table)
        for w, s in other.truncate(d).table.items():
            table[w] = table[w] + s if w in table else s
        return WeightGradedCharacter(self.rank, self.level, d, table, self.formula, self.label)

    def to_json(self) -> dict:
        key, vec = self.label
        data = {"rank": self.rank, "level": self.level, "formula": self.formula, key: list(vec)}
        data["max_degree"] = self.max_degree
        data["table"] = [{"weight": list(w.coords), "series": self.table[w].to_json()} for w in self.weights()]
        return data

    @classmethod
    def from_json(cls, data: dict) -> WeightGradedCharacter:
        key = "lambda" if "lambda" in data else "n"
        table = {RankedWeight(e["weight"]): TruncatedSeries.from_json(e["series"]) for e in data["table"]}
        return cls(
            int(data["rank"]), int(data["level"]), int(data["max_degree"]), table, data["formula"],
            (key, tuple(int(x) for x in data[key])),
        )

    def render(self) -> str:
        return "\n".join(f"{w}: {self.table[w]}" for w in self.weights())


# --------------------------------------------------------------------------
# shared machinery


def _validate(r: int, k: int, D: int) -> None:
    if r < 1:
        raise ValueError("rank must be >= 1")
    if k < 0:
        raise ValueError("level must be >= 0")
    if D < 0:
        raise ValueError("max_degree must be >= 0")


def _check_sequence(r: int, k: int, n: Sequence[int]) -> tuple[int, ...]:
    n = tuple(int(x) for x in n)
    if len(n) != r:
        raise ValueError(f"sequence has length {len(n)}, expected {r}")
    if any(x < 0 for x in n):
        raise ValueError(f"rectangle widths must be nonnegative: {n}")
    if sum(n) > k:
        raise LevelRestrictionError(f"total width {sum(n)} exceeds level {k}")
    return n


def _rect_sequence(r: int, k: int, l: int, beta: int) -> tuple[int, ...]:
    if not 1 <= beta <= r:
        raise ValueError(f"beta={beta} outside 1..{r}")
    if l < 0:
        raise ValueError("l must be >= 0")
    if l > k:
        raise LevelRestrictionError(f"l={l} exceeds level k={k}")
    return tuple(l if a == beta - 1 else 0 for a in range(r))


@lru_cache(maxsize=None)
def _denominator(parts: tuple, cutoff: int) -> tuple[int, ...]:
    """Coefficients of prod 1/(q)_m over ``parts`` through ``cutoff``."""
    if not parts:
        return (1,) + (0,) * cutoff
    head = inverse_pochhammer_series(parts[0], cutoff).coefficients()
    if len(parts) == 1:
        return tuple(head)
    rest = _denominator(parts[1:], cutoff)
    out = [0] * (cutoff + 1)
    for i, a in enumerate(head):
        if a:
            for j in range(cutoff + 1 - i):
                out[i + j] += a * rest[j]
    return tuple(out)


class _Accumulator:
    """Per-weight coefficient rows from ``floor`` (may be negative) through ``D``."""

    def __init__(self, D: int, floor: int = 0):
        self.D = D
        self.floor = min(0, floor)
        self.table: dict[tuple[int, ...], list[int]] = {}

    def add(self, weight: tuple[int, ...], exponent: int, parts: Iterable) -> None:
        if exponent > self.D:
            return
        if exponent < self.floor:
            raise ArithmeticError(f"exponent {exponent} below the computed floor {self.floor}")
        ser = _denominator(tuple(sorted(p for p in parts if p)), self.D - exponent)
        row = self.table.setdefault(weight, [0] * (self.D - self.floor + 1))
        base = exponent - self.floor
        for i, c in enumerate(ser):
            if c:
                row[base + i] += c

    def character(self, r, k, formula, label, overall_infinity: bool) -> WeightGradedCharacter:
        D, f = self.D, self.floor
        table = {}
        inv = inverse_pochhammer_series(INFINITY, D - f) if overall_infinity else None
        for w, row in self.table.items():
            s = TruncatedSeries({i + f: c for i, c in enumerate(row)}, D)
            if inv is not None:
                for _ in range(r):
                    s = s * inv
            table[RankedWeight(w)] = s
        return WeightGradedCharacter(r, k, D, table, formula, label)


def _points(form: QuadraticForm, D: int, lower, check: bool):
    tight = list(enumerate_with_values(form, D, lower))
    if check:
        loose = set(enumerate_points(form, D, lower, prune_budget=D + 1))
        if loose != {x for x, _ in tight}:
            raise ArithmeticError("enumeration shell is not stable: widening the search found new terms")
    return tight


def _floor(form: QuadraticForm) -> int:
    return math.floor(form.minimum)


def _weight(n: Sequence[int], m_tot: Sequence[int]) -> tuple[int, ...]:
    # n - C m in fundamental-weight coordinates
    r = len(n)
    return tuple(
        n[i] - 2 * m_tot[i] + (m_tot[i - 1] if i > 0 else 0) + (m_tot[i + 1] if i + 1 < r else 0)
        for i in range(r)
    )


def _trivial(r: int, k: int, D: int, formula: str, label) -> WeightGradedCharacter:
    return WeightGradedCharacter(r, k, D, {RankedWeight.zero(r): TruncatedSeries.one(D)}, formula, label)


def _compact_sum(
    r: int, k: int, n: tuple[int, ...], D: int, *, integrable: bool, formula: str, label, check_shell: bool = True
) -> WeightGradedCharacter:
    """Sum over mode vectors ``m_a^(alpha)``, a = 1..k, of
    ``q^{m.(C x A)m/2 - n.(id x A)m} / prod (q)_{m_a}`` at weight ``n - C m``.

    With ``integrable`` the top modes ``m_k`` run over all integers, are
    dropped from the denominator, and the result gets ``1/(q)_inf^r``.
    """
    if k == 0:
        return _trivial(r, k, D, formula, label)
    C = cartan_matrix(r)
    dim = r * k
    gram = [[C[i // k][j // k] * min(i % k + 1, j % k + 1) for j in range(dim)] for i in range(dim)]
    linear = [min(i % k + 1, n[i // k]) for i in range(dim)]
    form = QuadraticForm(gram, linear)
    lower = [None if integrable and i % k == k - 1 else 0 for i in range(dim)]
    acc = _Accumulator(D, _floor(form))
    # weight = n - sum_i x_i * shift_i
    shifts = [tuple((i % k + 1) * C[i // k][b] for b in range(r)) for i in range(dim)]
    kept = [i for i in range(dim) if not (integrable and i % k == k - 1)]
    scale = form.scale
    for x, v in _points(form, D, lower, check_shell):
        e, rem = divmod(v, scale)
        if rem:
            raise ArithmeticError(f"non-integral exponent {Fraction(v, scale)} at {x}")
        w = list(n)
        for i, xi in enumerate(x):
            if xi:
                for b, c in enumerate(shifts[i]):
                    w[b] -= xi * c
        acc.add(tuple(w), e, [x[i] for i in kept])
    return acc.character(r, k, formula, label, integrable)


def _cinv(k: int, a: int, b: int) -> Fraction:
    # (C_{k-1}^{-1})_{ab} = min(a, b) - ab/k, 1-based
    return Fraction(min(a, b)) - Fraction(a * b, k)


def _two_line_sum(
    r: int, k: int, n: tuple[int, ...], D: int, *, mode: str, N: int = 0, formula: str, label,
    check_shell: bool = True,
) -> WeightGradedCharacter:
    """Sum over totals ``mt`` (r entries) and modes ``m_a``, a < k, with
    ``sum_a a m_a = mt mod k``::

        q^{mt.C.mt/(2k) - n.mt/k + m.(C x C_{k-1}^{-1})m/2 - n'.(id x C_{k-1}^{-1})m}

    at weight ``n - C mt``.  ``mode`` selects the remaining factors:

    * ``"W"``: ``mt >= 0``, ``sum a m_a <= mt``, extra ``1/(q)_{(mt - mbar)/k}``;
    * ``"N"``: ``mt >= -k N_alpha`` with ``N_alpha = N alpha (r+1-alpha)``, extra
      ``1/(q)_{(mt - mbar)/k + N_alpha}``;
    * ``"V"``: ``mt`` unrestricted, overall ``1/(q)_inf^r``.
    """
    if k == 0:
        return _trivial(r, k, D, formula, label)
    C = cartan_matrix(r)
    km = k - 1
    dim = r + r * km
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    linear = [Fraction(0)] * dim
    for i in range(r):
        for j in range(r):
            gram[i][j] = Fraction(C[i][j], k)
        linear[i] = Fraction(n[i], k)
    for al in range(r):
        for be in range(r):
            if not C[al][be]:
                continue
            for a in range(1, k):
                for b in range(1, k):
                    gram[r + al * km + a - 1][r + be * km + b - 1] = C[al][be] * _cinv(k, a, b)
        if 1 <= n[al] <= km:
            for a in range(1, k):
                linear[r + al * km + a - 1] = _cinv(k, n[al], a)
    form = QuadraticForm(gram, linear)
    shifts = [N * (al + 1) * (r - al) for al in range(r)]
    if mode == "W":
        lower = [0] * r + [0] * (r * km)
    elif mode == "N":
        lower = [-k * s for s in shifts] + [0] * (r * km)
    elif mode == "V":
        lower = [None] * r + [0] * (r * km)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    acc = _Accumulator(D, _floor(form))
    scale = form.scale
    for x, v in _points(form, D, lower, check_shell):
        mt = x[:r]
        modes = x[r:]
        parts = list(modes)
        ok = True
        for al in range(r):
            mbar = sum(a * modes[al * km + a - 1] for a in range(1, k))
            if (mt[al] - mbar) % k:
                ok = False
                break
            top = (mt[al] - mbar) // k
            if mode == "W":
                if top < 0:
                    ok = False
                    break
                parts.append(top)
            elif mode == "N":
                if top + shifts[al] < 0:
                    ok = False
                    break
                parts.append(top + shifts[al])
        if not ok:
            continue
        e, rem = divmod(v, scale)
        if rem:
            raise ArithmeticError(f"non-integral exponent {Fraction(v, scale)} at {x}")
        acc.add(_weight(n, mt), e, parts)
    return acc.character(r, k, formula, label, mode == "V")


# --------------------------------------------------------------------------
# rectangular highest weights


def char_W_rect(r: int, k: int, l: int, beta: int, D: int) -> WeightGradedCharacter:
    """Principal subspace of ``V_{l w_beta}`` (all modes nonnegative)."""
    _validate(r, k, D)
    n = _rect_sequence(r, k, l, beta)
    return _compact_sum(r, k, n, D, integrable=False, formula="W_rect", label=("lambda", n))


def char_W_rect_two_line(r: int, k: int, l: int, beta: int, D: int) -> WeightGradedCharacter:
    """Same character as :func:`char_W_rect` with the totals split off."""
    _validate(r, k, D)
    n = _rect_sequence(r, k, l, beta)
    return _two_line_sum(r, k, n, D, mode="W", formula="W_rect", label=("lambda", n))


def char_W_rect_translated(r: int, k: int, l: int, beta: int, N: int, D: int) -> WeightGradedCharacter:
    """Principal subspace generated from the translated extremal vector, in the
    normalization where ``N -> infinity`` gives :func:`char_V_rect`."""
    _validate(r, k, D)
    if N < 0:
        raise ValueError("N must be >= 0")
    n = _rect_sequence(r, k, l, beta)
    return _two_line_sum(r, k, n, D, mode="N", N=N, formula="W_rect", label=("lambda", n))


def char_V_rect(r: int, k: int, l: int, beta: int, D: int) -> WeightGradedCharacter:
    """Integrable level-k module with highest weight ``l w_beta``."""
    _validate(r, k, D)
    n = _rect_sequence(r, k, l, beta)
    return _char_V_rect_cached(r, k, n, D)


@lru_cache(maxsize=None)
def _char_V_rect_cached(r, k, n, D):
    return _compact_sum(r, k, n, D, integrable=True, formula="V_rect", label=("lambda", n))


# --------------------------------------------------------------------------
# fusion products of rectangles n^(alpha) w_alpha


def char_fusion_W(r: int, k: int, n: RectangularSequence | Sequence[int], D: int) -> WeightGradedCharacter:
    _validate(r, k, D)
    n = _check_sequence(r, k, n.counts if isinstance(n, RectangularSequence) else n)
    return _fusion_W_cached(r, k, n, D)


@lru_cache(maxsize=None)
def _fusion_W_cached(r, k, n, D):
    return _compact_sum(r, k, n, D, integrable=False, formula="fusion_W", label=("n", n))


def char_fusion_W_two_line(r: int, k: int, n, D: int) -> WeightGradedCharacter:
    _validate(r, k, D)
    n = _check_sequence(r, k, n.counts if isinstance(n, RectangularSequence) else n)
    return _two_line_sum(r, k, n, D, mode="W", formula="fusion_W", label=("n", n))


def char_fusion_V(r: int, k: int, n: RectangularSequence | Sequence[int], D: int, *, check: bool = False) -> WeightGradedCharacter:
    """Fusion of integrable modules; ``check=True`` also evaluates the two-line
    form and insists that the two agree."""
    _validate(r, k, D)
    n = _check_sequence(r, k, n.counts if isinstance(n, RectangularSequence) else n)
    ch = _fusion_V_cached(r, k, n, D)
    if check:
        other = _two_line_sum(r, k, n, D, mode="V", formula="fusion_V", label=("n", n))
        if not ch.agrees_with(other):
            raise ArithmeticError("two parametrizations of the fusion character disagree: " + "; ".join(ch.differences(other)[:3]))
    return ch


@lru_cache(maxsize=None)
def _fusion_V_cached(r, k, n, D):
    return _compact_sum(r, k, n, D, integrable=True, formula="fusion_V", label=("n", n))


def char_fusion_V_two_line(r: int, k: int, n, D: int) -> WeightGradedCharacter:
    _validate(r, k, D)
    n = _check_sequence(r, k, n.counts if isinstance(n, RectangularSequence) else n)
    return _two_line_sum(r, k, n, D, mode="V", formula="fusion_V", label=("n", n))


# --------------------------------------------------------------------------
# arbitrary highest weights


@lru_cache(maxsize=None)
def _inverse_matrix(r: int, width: int, size: int, residue: int) -> KostkaMatrix:
    return invert_unitriangular(build_kostka_matrix(r, width, size, residue))


def inverse_kostka_column(r: int, lam: RankedWeight) -> dict[PartitionShape, LaurentPolynomial]:
    """Nonzero entries ``(K^{-1}(1/q))_{nu, lambda}`` keyed by the row partition ``nu``."""
    p = weight_to_partition(lam)
    Kinv = _inverse_matrix(r, p.width, p.size, p.size % (r + 1))
    return {nu: reciprocal_q(c) for nu, c in Kinv.column(p).items()}


def _check_highest(r: int, k: int, lam) -> RankedWeight:
    lam = lam if isinstance(lam, RankedWeight) else RankedWeight(lam)
    if lam.rank != r:
        raise ValueError(f"weight {lam} does not have rank {r}")
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    if sum(lam.coords) > k:
        raise LevelRestrictionError(f"{lam} is not level-{k} restricted")
    return lam


def _assemble(r, k, lam, D, fusion, formula) -> WeightGradedCharacter:
    column = inverse_kostka_column(r, lam)
    total: dict[RankedWeight, TruncatedSeries] = {}
    for nu, coeff in column.items():
        n = RectangularSequence.from_partition(r, nu).counts
        # coeff only lowers degrees, by at most -min_exponent
        ch = fusion(r, k, n, D - coeff.min_exponent())
        for w, s in ch.table.items():
            term = s * coeff
            total[w] = total[w] + term if w in total else term
    for w, s in total.items():
        s = s.truncate(D)
        if s and s.valuation() < 0:
            raise ArithmeticError(f"negative q-power survives at weight {w}: {s}")
        total[w] = s
    return WeightGradedCharacter(r, k, D, total, formula, ("lambda", tuple(lam.coords)))


def char_V_general(r: int, k: int, lam, D: int) -> WeightGradedCharacter:
    """Integrable level-k module ``V_lambda`` for any restricted dominant ``lambda``."""
    _validate(r, k, D)
    lam = _check_highest(r, k, lam)
    return _char_V_general_cached(r, k, lam, D)


@lru_cache(maxsize=None)
def _char_V_general_cached(r, k, lam, D):
    return _assemble(r, k, lam, D, char_fusion_V, "V_general")


def char_W_general(r: int, k: int, lam, D: int) -> WeightGradedCharacter:
    """Principal subspace ``W_lambda`` for any restricted dominant ``lambda``."""
    _validate(r, k, D)
    lam = _check_highest(r, k, lam)
    return _assemble(r, k, lam, D, char_fusion_W, "W_general")


# --------------------------------------------------------------------------
# string functions


class ShiftedSeries(NamedTuple):
    """``q**offset * series`` with ``0 <= offset < 1``."""

    offset: Fraction
    series: TruncatedSeries

    def __str__(self) -> str:
        if self.offset == 0:
            return str(self.series)
        return f"q^({self.offset})*({self.series})"


def string_functions(ch: WeightGradedCharacter, lam=None) -> dict[RankedWeight, ShiftedSeries]:
    """Divide each weight's series by ``q^{(|w|^2 - |lambda|^2)/2k}``.

    For ``w = lambda - C mt`` that power is ``mt.C.mt/(2k) - l.mt/k``.  Its
    integer part is absorbed into the series (so the cutoff moves with it);
    the fractional part, always zero at level one, is kept as ``offset``.
    """
    if ch.level < 1:
        raise ValueError("string functions need level >= 1")
    if lam is None:
        key, vec = ch.label
        if key != "lambda":
            raise ValueError("pass the highest weight explicitly for fusion characters")
        lam = RankedWeight(vec)
    elif not isinstance(lam, RankedWeight):
        lam = RankedWeight(lam)
    r, k = ch.rank, ch.level
    C = cartan_matrix(r)
    out = {}
    for w, s in ch.table.items():
        mt = cartan_inverse_times(r, [a - b for a, b in zip(lam.coords, w.coords)])
        if any(x.denominator != 1 for x in mt):
            raise ArithmeticError(f"{w} is not in lambda + root lattice")
        quad = sum(mt[i] * C[i][j] * mt[j] for i in range(r) for j in range(r))
        e = quad / (2 * k) - sum(l * x for l, x in zip(lam.coords, mt)) / k
        up = math.ceil(e)
        out[w] = ShiftedSeries(up - e, s.shift(-up))
    return out
