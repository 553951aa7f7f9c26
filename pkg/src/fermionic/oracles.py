"""Brute-force reference computations.

Nothing here shares code with the fermionic sums: finite characters come from
Gelfand-Tsetlin patterns, tensor multiplicities from peeling off highest
weights, Kostka-Foulkes polynomials from the charge statistic on tableaux,
and affine characters from the Weyl-Kac formula.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .characters import WeightGradedCharacter
from .lattice import QuadraticForm, enumerate_points
from .qseries import LaurentPolynomial, TruncatedSeries
from .weights import (
    AffineWeightLabel,
    PartitionShape,
    RankedWeight,
    affine_translate,
    cartan_inverse_times,
    cartan_matrix,
    dominant_conjugate,
    weyl_dimension,
)

__all__ = [
    "SemistandardTableau",
    "finite_char",
    "lr_multiplicity",
    "tensor_decomposition",
    "semistandard_tableaux",
    "charge",
    "charge_kostka",
    "cocharge_kostka",
    "weyl_kac_char",
]


# --------------------------------------------------------------------------
# finite characters


def _patterns(top: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
    """Gelfand-Tsetlin patterns with the given top row, listed top row first."""
    if len(top) == 1:
        yield [top]
        return

    def rows(i: int, acc: list[int]):
        if i == len(top) - 1:
            yield tuple(acc)
            return
        for v in range(top[i + 1], top[i] + 1):
            acc.append(v)
            yield from rows(i + 1, acc)
            acc.pop()

    for below in rows(0, []):
        for rest in _patterns(below):
            yield [top] + rest


@lru_cache(maxsize=None)
def _finite_char_cached(lam: RankedWeight) -> dict[RankedWeight, int]:
    r = lam.rank
    top = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        top[i] = top[i + 1] + lam.coords[i]
    out: Counter = Counter()
    for pat in _patterns(tuple(top)):
        sums = [sum(row) for row in reversed(pat)]  # row lengths 1..r+1
        content = [sums[0]] + [sums[i] - sums[i - 1] for i in range(1, r + 1)]
        out[RankedWeight(content[i] - content[i + 1] for i in range(r))] += 1
    total = sum(out.values())
    if total != weyl_dimension(lam):
        raise ArithmeticError(f"finite character of {lam} has {total} states, expected {weyl_dimension(lam)}")
    return dict(out)


def finite_char(r: int, lam) -> dict[RankedWeight, int]:
    """Weight multiplicities of the irreducible sl(r+1) module with highest weight ``lam``."""
    lam = lam if isinstance(lam, RankedWeight) else RankedWeight(lam)
    if lam.rank != r or not lam.is_dominant():
        raise ValueError(f"{lam} is not a dominant weight of rank {r}")
    return dict(_finite_char_cached(lam))


# --------------------------------------------------------------------------
# tensor product multiplicities


def _height(w: RankedWeight) -> int:
    # (r+1) times the sum of the simple-root coordinates
    r = w.rank
    return sum(int(x * (r + 1)) for x in cartan_inverse_times(r, w.coords))


@lru_cache(maxsize=None)
def _decompose(factors: tuple[RankedWeight, ...]) -> dict[RankedWeight, int]:
    r = factors[0].rank
    prod: Counter = Counter({RankedWeight.zero(r): 1})
    for f in factors:
        nxt: Counter = Counter()
        ch = _finite_char_cached(f)
        for w, a in prod.items():
            for v, b in ch.items():
                nxt[w + v] += a * b
        prod = nxt
    out = {}
    while prod:
        top = max((w for w in prod if w.is_dominant()), key=_height)
        mult = prod[top]
        if mult < 0:
            raise ArithmeticError(f"negative multiplicity {mult} for {top}")
        out[top] = mult
        for v, b in _finite_char_cached(top).items():
            prod[v] -= mult * b
            if prod[v] == 0:
                del prod[v]
    return out


def tensor_decomposition(r: int, mus: Sequence) -> dict[RankedWeight, int]:
    """Irreducible components of a tensor product of finite modules."""
    ws = [m if isinstance(m, RankedWeight) else RankedWeight(m) for m in mus]
    for w in ws:
        if w.rank != r or not w.is_dominant():
            raise ValueError(f"{w} is not a dominant weight of rank {r}")
    if not ws:
        return {RankedWeight.zero(r): 1}
    return dict(_decompose(tuple(sorted(ws))))


def lr_multiplicity(r: int, lam, mus: Sequence) -> int:
    """Multiplicity of ``lam`` in the tensor product of the modules ``mus``."""
    lam = lam if isinstance(lam, RankedWeight) else RankedWeight(lam)
    return tensor_decomposition(r, mus).get(lam, 0)


# --------------------------------------------------------------------------
# tableaux and charge


@dataclass(frozen=True)
class SemistandardTableau:
    shape: PartitionShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(row) for row in self.rows) != tuple(self.shape.parts):
            raise ValueError("rows do not match the shape")
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not weakly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError("columns must strictly increase")

    def content(self) -> tuple[int, ...]:
        c = Counter(x for row in self.rows for x in row)
        top = max(c) if c else 0
        return tuple(c[i] for i in range(1, top + 1))

    def reading_word(self) -> tuple[int, ...]:
        """Rows from bottom to top, each read left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)


def semistandard_tableaux(shape: PartitionShape, content: Sequence[int]) -> Iterator[SemistandardTableau]:
    """All tableaux of ``shape`` in which letter i appears ``content[i-1]`` times."""
    shape = shape if isinstance(shape, PartitionShape) else PartitionShape(shape)
    target = list(shape.parts)
    if sum(content) != shape.size:
        return
    n = len(target)

    def strips(cur: list[int], size: int, i: int, nxt: list[int]):
        # horizontal strip: row i may grow up to the old length of row i-1
        if i == n:
            if size == 0:
                yield list(nxt)
            return
        cap = target[i] if i == 0 else min(target[i], cur[i - 1])
        for add in range(min(size, cap - cur[i]), -1, -1):
            nxt.append(cur[i] + add)
            yield from strips(cur, size - add, i + 1, nxt)
            nxt.pop()

    def rec(letter: int, cur: list[int], fill: list[list[int]]):
        if letter > len(content):
            if cur == target:
                yield SemistandardTableau(shape, tuple(tuple(r) for r in fill))
            return
        for nxt in strips(cur, content[letter - 1], 0, []):
            new_fill = [row + [letter] * (nxt[i] - cur[i]) for i, row in enumerate(fill)]
            yield from rec(letter + 1, nxt, new_fill)

    yield from rec(1, [0] * n, [[] for _ in range(n)])


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    letters = list(word)
    c = Counter(letters)
    top = max(c) if c else 0
    content = [c[i] for i in range(1, top + 1)]
    if any(a < b for a, b in zip(content, content[1:])):
        raise ValueError("charge needs a word of partition content")
    used = [False] * len(letters)
    total = 0
    while not all(used):
        # extract a standard subword: scan leftwards cyclically for 1, 2, ...
        pos = len(letters)
        idx = 0
        picked = []
        for letter in range(1, top + 1):
            cand = [i for i in range(len(letters)) if not used[i] and letters[i] == letter]
            if not cand:
                break
            left = [i for i in cand if i < pos]
            if left:
                nxt = max(left)
                wrapped = False
            else:
                nxt = max(cand)
                wrapped = True
            if letter > 1 and wrapped:
                idx += 1
            total += idx
            picked.append(nxt)
            pos = nxt
        for i in picked:
            used[i] = True
    return total


def charge_kostka(lam_bar, mu: Sequence[int]) -> LaurentPolynomial:
    """Sum of ``q**charge`` over tableaux of shape ``lam_bar`` and content ``mu``.

    ``mu`` is sorted into a partition first; the polynomial does not depend on
    the order of the content.
    """
    shape = lam_bar if isinstance(lam_bar, PartitionShape) else PartitionShape(lam_bar)
    content = sorted((x for x in mu if x), reverse=True)
    out: Counter = Counter()
    for t in semistandard_tableaux(shape, content):
        out[charge(t.reading_word())] += 1
    return LaurentPolynomial(out)


def cocharge_kostka(lam_bar, mu: Sequence[int]) -> LaurentPolynomial:
    """``q**n(mu) * K(1/q)``: the same tableaux graded by ``n(mu) - charge``."""
    content = sorted((x for x in mu if x), reverse=True)
    n_mu = sum(i * m for i, m in enumerate(content))
    ch = charge_kostka(lam_bar, content)
    return LaurentPolynomial({n_mu - e: c for e, c in ch.items()})


# --------------------------------------------------------------------------
# Weyl-Kac


def _positive_roots(r: int) -> list[tuple[int, ...]]:
    C = cartan_matrix(r)
    roots = []
    for i in range(r):
        for j in range(i, r):
            roots.append(tuple(sum(C[a][b] for a in range(i, j + 1)) for b in range(r)))
    return roots


def _divide_geometric(table: list[dict], n: int, shift: tuple[int, ...] | None) -> None:
    """In place: multiply by ``1/(1 - q^n e^shift)`` (``shift`` None means e^0)."""
    D = len(table) - 1
    for d in range(n, D + 1):
        src = table[d - n]
        if not src:
            continue
        dst = table[d]
        for w, c in src.items():
            key = w if shift is None else tuple(a + b for a, b in zip(w, shift))
            dst[key] = dst.get(key, 0) + c


def weyl_kac_char(r: int, k: int, lam, D: int, *, check_shell: bool = True) -> WeightGradedCharacter:
    """Truncated character of the level-k integrable module from the Weyl-Kac formula."""
    lam = lam if isinstance(lam, RankedWeight) else RankedWeight(lam)
    if r < 1 or k < 0 or D < 0:
        raise ValueError("need r >= 1, k >= 0, D >= 0")
    if lam.rank != r or not lam.is_dominant():
        raise ValueError(f"{lam} is not a dominant weight of rank {r}")
    if sum(lam.coords) > k:
        raise ValueError(f"{lam} is not level-{k} restricted")
    K = k + r + 1
    C = cartan_matrix(r)
    # delta-degree of t_gamma: K gamma.C.gamma/2 + (lambda + rho).gamma
    form = QuadraticForm([[K * c for c in row] for row in C], [-(l + 1) for l in lam.coords])
    pts = list(enumerate_points(form, D))
    if check_shell and set(pts) != set(enumerate_points(form, D, prune_budget=D + 1)):
        raise ArithmeticError("Weyl-Kac shell is not stable")
    table: list[dict] = [dict() for _ in range(D + 1)]
    base = AffineWeightLabel(RankedWeight(l + 1 for l in lam.coords), K)
    for g in pts:
        image = affine_translate(base, g)
        e = image.delta_coeff
        if e != form.value(g) or e < 0:
            raise ArithmeticError(f"translation degree mismatch at {g}")
        shifted = image.finite
        dom, sign = dominant_conjugate(shifted)
        if 0 in dom.coords:
            continue
        top = RankedWeight(x - 1 for x in dom.coords)
        layer = table[e]
        for w, m in _finite_char_cached(top).items():
            layer[w.coords] = layer.get(w.coords, 0) + sign * m
    for n in range(1, D + 1):
        for _ in range(r):
            _divide_geometric(table, n, None)
        for a in _positive_roots(r):
            _divide_geometric(table, n, a)
            _divide_geometric(table, n, tuple(-x for x in a))
    per_weight: dict[RankedWeight, dict[int, int]] = defaultdict(dict)
    for d, layer in enumerate(table):
        for w, c in layer.items():
            if c:
                per_weight[RankedWeight(w)][d] = c
    return WeightGradedCharacter(
        r, k, D, {w: TruncatedSeries(t, D) for w, t in per_weight.items()}, "V_weyl_kac",
        ("lambda", tuple(lam.coords)),
    )
