"""Integer points under a positive-definite quadratic budget.

All the character sums here have the shape ``sum_x q**f(x) * (series with
nonnegative exponents)`` with ``f(x) = x^T G x / 2 - b^T x`` and ``G``
positive definite, so only the finitely many ``x`` with ``f(x) <= D`` matter.
They are found depth-first, completing the square one coordinate at a time
(``G = U^T diag(d) U`` with ``U`` unit upper triangular).  Pruning uses floats
with a small safety margin; every emitted point is re-checked exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Optional, Sequence

__all__ = ["QuadraticForm", "enumerate_points", "enumerate_with_values", "shell_is_stable"]

_EPS = 1e-9


def _solve(G: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(G)
    M = [row[:] + [b[i]] for i, row in enumerate(G)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


class QuadraticForm:
    """``f(x) = x^T G x / 2 - b^T x`` over integer vectors."""

    def __init__(self, gram: Sequence[Sequence], linear: Optional[Sequence] = None):
        n = len(gram)
        self.dim = n
        self.G = [[Fraction(v) for v in row] for row in gram]
        self.b = [Fraction(v) for v in (linear if linear is not None else [0] * n)]
        if any(len(row) != n for row in self.G) or len(self.b) != n:
            raise ValueError("gram must be square and match the linear term")
        if any(self.G[i][j] != self.G[j][i] for i in range(n) for j in range(n)):
            raise ValueError("gram matrix must be symmetric")
        den = 1
        for v in [x for row in self.G for x in row] + self.b:
            den = den * v.denominator // math.gcd(den, v.denominator)
        # 2*den*f(x) = x^T Gi x - 2 bi.x, all integers
        self._den = den
        self._Gi = [[int(v * den) for v in row] for row in self.G]
        self._bi = [int(v * den) for v in self.b]
        self.scale = 2 * den
        self._factor()

    def _factor(self) -> None:
        n = self.dim
        # eliminate from the last coordinate down so that the search can fix
        # coordinates n-1, n-2, ... in turn
        A = [row[:] for row in self.G]
        d = [Fraction(0)] * n
        U = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            d[i] = A[i][i]
            if d[i] <= 0:
                raise ValueError("gram matrix is not positive definite")
            U[i][i] = Fraction(1)
            for j in range(i + 1, n):
                U[i][j] = A[i][j] / d[i]
            for j in range(i + 1, n):
                for l in range(i + 1, n):
                    A[j][l] -= U[i][j] * d[i] * U[i][l]
        self.center = _solve(self.G, self.b) if n else []
        self.minimum = -sum(x * y for x, y in zip(self.b, self.center)) / 2
        self._d = [float(x) for x in d]
        self._U = [[float(x) for x in row] for row in U]
        self._c = [float(x) for x in self.center]

    def value(self, x: Sequence[int]) -> Fraction:
        return Fraction(self.twice_scaled(x), 2 * self._den)

    def twice_scaled(self, x: Sequence[int]) -> int:
        n = self.dim
        Gi = self._Gi
        quad = 0
        for i in range(n):
            xi = x[i]
            if xi:
                row = Gi[i]
                quad += xi * sum(row[j] * x[j] for j in range(n) if x[j])
        return quad - 2 * sum(bi * xi for bi, xi in zip(self._bi, x))

    def within(self, x: Sequence[int], budget) -> bool:
        return self.twice_scaled(x) <= 2 * self._den * Fraction(budget)


def enumerate_points(
    form: QuadraticForm,
    budget,
    lower: Optional[Sequence[Optional[int]]] = None,
    *,
    prune_budget=None,
) -> Iterator[tuple[int, ...]]:
    """Yield every integer ``x`` with ``form.value(x) <= budget`` and ``x >= lower``.

    ``lower`` entries may be None for unbounded coordinates.  ``prune_budget``
    (default ``budget``) only loosens the search region; the exact filter
    always uses ``budget``.
    """
    for x, _ in enumerate_with_values(form, budget, lower, prune_budget=prune_budget):
        yield x


def enumerate_with_values(
    form: QuadraticForm,
    budget,
    lower: Optional[Sequence[Optional[int]]] = None,
    *,
    prune_budget=None,
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Like :func:`enumerate_points` but also yields ``form.twice_scaled(x)``,
    the exact integer ``form.scale * form.value(x)``."""
    n = form.dim
    lo = list(lower) if lower is not None else [None] * n
    if len(lo) != n:
        raise ValueError("lower bounds do not match the dimension")
    if n == 0:
        if 0 <= Fraction(budget):
            yield (), 0
        return
    search = Fraction(budget if prune_budget is None else prune_budget)
    R = float(search - form.minimum)
    if R < -_EPS:
        return
    scale = form.scale
    limit = Fraction(budget) * scale
    limit = limit.numerator // limit.denominator  # integer values only
    d, c0 = form._d, form._c
    Gi, bi = form._Gi, form._bi
    # sparse upper parts of U and of the integer Gram matrix
    Urows = [[(j, form._U[i][j]) for j in range(i + 1, n) if form._U[i][j] != 0.0] for i in range(n)]
    Grows = [[(j, Gi[i][j]) for j in range(i + 1, n) if Gi[i][j]] for i in range(n)]
    x = [0] * n
    y = [0.0] * n  # x - center
    tol = _EPS * (1.0 + abs(R))

    def rec(i: int, remaining: float, partial: int):
        shift = 0.0
        for j, u in Urows[i]:
            shift += u * y[j]
        cross = 0
        for j, g in Grows[i]:
            cross += g * x[j]
        center = c0[i] - shift
        rad = math.sqrt(max(2.0 * remaining / d[i], 0.0)) + _EPS
        a = math.ceil(center - rad - _EPS)
        bnd = math.floor(center + rad + _EPS)
        if lo[i] is not None and a < lo[i]:
            a = lo[i]
        gii, lin, di, ci = Gi[i][i], 2 * (cross - bi[i]), d[i], c0[i]
        for v in range(a, bnd + 1):
            t = v - center
            rest = remaining - 0.5 * di * t * t
            if rest < -tol:
                continue
            val = partial + v * (gii * v + lin)
            x[i] = v
            if i == 0:
                if val <= limit:
                    yield tuple(x), val
            else:
                y[i] = v - ci
                yield from rec(i - 1, rest, val)
        x[i] = 0
        y[i] = 0.0

    yield from rec(n - 1, R + tol, 0)


def shell_is_stable(form: QuadraticForm, budget, lower=None) -> bool:
    """True iff widening the search region by one degree finds no new point within ``budget``."""
    tight = set(enumerate_points(form, budget, lower))
    loose = set(enumerate_points(form, budget, lower, prune_budget=Fraction(budget) + 1))
    return tight == loose
