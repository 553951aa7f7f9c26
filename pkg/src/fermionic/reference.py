"""Reference tables, frozen as text so they can be diffed against computed output.

The sl4 matrices use the index order below (weight labels); rows and columns
share it.  Entries are written exactly as :class:`LaurentPolynomial` prints them.
"""

from __future__ import annotations

from .qseries import LaurentPolynomial

SL4_ORDER = [
    (0, 0, 0),
    (1, 0, 1), (0, 2, 0),
    (2, 1, 0), (0, 1, 2),
    (4, 0, 0), (2, 0, 2), (1, 2, 1), (0, 4, 0), (0, 0, 4),
]

_SL4_KOSTKA = """
1 | q | 0 | 0 | 0 | 0 | q^2 | 0       | 0 | 0
0 | 1 | 0 | q | q | 0 | q   | q^2     | 0 | 0
0 | 0 | 1 | 0 | 0 | 0 | 0   | q + q^2 | 0 | 0
0 | 0 | 0 | 1 | 0 | 0 | 0   | q       | 0 | 0
0 | 0 | 0 | 0 | 1 | 0 | 0   | q       | 0 | 0
0 | 0 | 0 | 0 | 0 | 1 | 0   | 0       | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 1   | 0       | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0   | 1       | 0 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0   | 0       | 1 | 0
0 | 0 | 0 | 0 | 0 | 0 | 0   | 0       | 0 | 1
"""

_SL4_KOSTKA_INVERSE = """
1 | -q | 0 | q^2 | q^2 | 0 | 0  | -q^3     | 0 | 0
0 | 1  | 0 | -q  | -q  | 0 | -q | q^2      | 0 | 0
0 | 0  | 1 | 0   | 0   | 0 | 0  | -q - q^2 | 0 | 0
0 | 0  | 0 | 1   | 0   | 0 | 0  | -q       | 0 | 0
0 | 0  | 0 | 0   | 1   | 0 | 0  | -q       | 0 | 0
0 | 0  | 0 | 0   | 0   | 1 | 0  | 0        | 0 | 0
0 | 0  | 0 | 0   | 0   | 0 | 1  | 0        | 0 | 0
0 | 0  | 0 | 0   | 0   | 0 | 0  | 1        | 0 | 0
0 | 0  | 0 | 0   | 0   | 0 | 0  | 0        | 1 | 0
0 | 0  | 0 | 0   | 0   | 0 | 0  | 0        | 0 | 1
"""


def _grid(text: str) -> list[list[LaurentPolynomial]]:
    return [
        [LaurentPolynomial.parse(cell) for cell in line.split("|")]
        for line in text.strip().splitlines()
    ]


def sl4_kostka() -> list[list[LaurentPolynomial]]:
    return _grid(_SL4_KOSTKA)


def sl4_kostka_inverse() -> list[list[LaurentPolynomial]]:
    return _grid(_SL4_KOSTKA_INVERSE)


def sl4_assembly_121() -> dict[tuple[int, ...], LaurentPolynomial]:
    """Coefficients multiplying the fusion characters in the expansion of ``V_(1,2,1)``."""
    P = LaurentPolynomial.parse
    return {
        (1, 2, 1): P("1"),
        (2, 1, 0): P("-q^-1"),
        (0, 1, 2): P("-q^-1"),
        (0, 2, 0): P("-q^-1 - q^-2"),
        (1, 0, 1): P("q^-2"),
        (0, 0, 0): P("-q^-3"),
    }


def sl3_kostka(l1: int, l2: int, m1: int, m2: int) -> LaurentPolynomial:
    """Closed form for sl3: ``delta_{ij} q^i`` at ``((l1, l2), (l1 - i, l2 - j))``."""
    i, j = l1 - m1, l2 - m2
    if 0 <= i <= min(l1, l2) and 0 <= j <= min(l1, l2) and i == j:
        return LaurentPolynomial.monomial(i)
    return LaurentPolynomial()


def sl3_kostka_inverse(l1: int, l2: int, m1: int, m2: int) -> LaurentPolynomial:
    if (m1, m2) == (l1, l2):
        return LaurentPolynomial.constant(1)
    if l1 > 0 and l2 > 0 and (m1, m2) == (l1 - 1, l2 - 1):
        return LaurentPolynomial.monomial(1, -1)
    return LaurentPolynomial()
