"""Exact Laurent polynomials and degree-truncated power series in ``q``.

Coefficients are Python integers, so nothing ever overflows.  Both types are
immutable; arithmetic returns new objects.

A :class:`TruncatedSeries` remembers the degree ``max_degree`` through which
its coefficients are known exactly.  Anything above that degree has been
thrown away and must not be trusted.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

__all__ = [
    "LaurentPolynomial",
    "TruncatedSeries",
    "q_pochhammer",
    "gaussian_binomial",
    "reciprocal_q",
    "inverse_pochhammer_series",
    "eval_at_one",
    "promote",
    "INFINITY",
]

INFINITY = float("inf")


def _clean(terms: Mapping[int, int]) -> dict[int, int]:
    return {int(e): int(c) for e, c in terms.items() if c}


def _format_terms(items: Iterable[tuple[int, int]]) -> str:
    pieces = []
    for e, c in items:
        if e == 0:
            mono = str(abs(c))
        else:
            var = "q" if e == 1 else f"q^{e}"
            mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not pieces:
            pieces.append(mono if c > 0 else f"-{mono}")
        else:
            pieces.append(("+ " if c > 0 else "- ") + mono)
    return " ".join(pieces) if pieces else "0"


_TERM = re.compile(r"([+-]?)(?:(?:(\d+)\*)?q(?:\^(-?\d+))?|(\d+))")


def _parse_terms(text: str) -> dict[int, int]:
    """Inverse of :func:`_format_terms`; spacing is ignored."""
    body = text.replace(" ", "")
    if body in ("", "0"):
        return {}
    out: dict[int, int] = {}
    pos = 0
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        sign, coef, exp, const = m.groups()
        if const is not None:
            e, c = 0, int(const)
        else:
            c = int(coef) if coef else 1
            e = int(exp) if exp is not None else 1
        out[e] = out.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
    return out


def _terms_json(items: Iterable[tuple[int, int]]) -> list[dict]:
    return [{"exp": e, "coef": str(c)} for e, c in items]


def _terms_from_json(data: dict) -> dict[int, int]:
    if data.get("var", "q") != "q":
        raise ValueError(f"unsupported variable {data.get('var')!r}")
    return {int(t["exp"]): int(t["coef"]) for t in data["terms"]}


class LaurentPolynomial:
    """Finite sum of ``c * q**e`` with integer ``c`` and integer (possibly negative) ``e``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPolynomial:
        return cls({exp: coef})

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls({0: c})

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], start: int = 0) -> LaurentPolynomial:
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exponent(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def max_exponent(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        return _format_terms(self.items())

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __add__(self, other: Union[LaurentPolynomial, int]) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: Union[LaurentPolynomial, int]) -> LaurentPolynomial:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPolynomial:
        return LaurentPolynomial.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, TruncatedSeries):
            return other.__mul__(self)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> LaurentPolynomial:
        return LaurentPolynomial({e: c * v for e, v in self._terms.items()})

    def shift(self, n: int) -> LaurentPolynomial:
        """Multiply by ``q**n``."""
        return LaurentPolynomial({e + n: c for e, c in self._terms.items()})

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = LaurentPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, divisor: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
        """Division with remainder after clearing negative exponents.

        The divisor's leading coefficient must be +-1 so that the quotient
        stays integral.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return LaurentPolynomial(), LaurentPolynomial()
        s, t = self.min_exponent(), divisor.min_exponent()
        num = {e - s: c for e, c in self._terms.items()}
        den = {e - t: c for e, c in divisor._terms.items()}
        deg = max(den)
        lead = den[deg]
        if lead not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        quot: dict[int, int] = {}
        while num and max(num) >= deg:
            top = max(num)
            c = num[top] * lead
            quot[top - deg] = c
            for e, v in den.items():
                k = e + top - deg
                num[k] = num.get(k, 0) - c * v
                if not num[k]:
                    del num[k]
        return (
            LaurentPolynomial({e + s - t: c for e, c in quot.items()}),
            LaurentPolynomial({e + s: c for e, c in num.items()}),
        )

    def exact_div(self, divisor: LaurentPolynomial) -> LaurentPolynomial:
        """Quotient over the integers; raises ArithmeticError unless it divides exactly."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = dict(self._terms)
        deg = divisor.max_exponent()
        lead = divisor._terms[deg]
        low = divisor.min_exponent()
        quot: dict[int, int] = {}
        while num:
            top = max(num)
            c, r = divmod(num[top], lead)
            # an exact quotient never needs a term below this
            if r or top - deg + low < min(num):
                raise ArithmeticError(f"inexact division: ({self}) / ({divisor})")
            quot[top - deg] = c
            for e, v in divisor._terms.items():
                k = e + top - deg
                num[k] = num.get(k, 0) - c * v
                if not num[k]:
                    del num[k]
        return LaurentPolynomial(quot)

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """Read the text form produced by ``str``, e.g. ``"1 - q + 2*q^-3"``."""
        return cls(_parse_terms(text))

    def to_json(self) -> dict:
        return {"var": "q", "max_degree": None, "terms": _terms_json(self.items())}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPolynomial:
        if data.get("max_degree") is not None:
            raise ValueError("JSON describes a truncated series, not a polynomial")
        return cls(_terms_from_json(data))


class TruncatedSeries:
    """Power series in ``q`` known exactly through degree ``max_degree``.

    The stored terms all have exponent ``<= max_degree``; negative exponents
    are allowed (there are only finitely many of them).
    """

    __slots__ = ("_terms", "max_degree")

    def __init__(self, terms: Optional[Mapping[int, int]], max_degree: int):
        self.max_degree = int(max_degree)
        self._terms = {e: c for e, c in _clean(terms or {}).items() if e <= self.max_degree}

    @classmethod
    def zero(cls, max_degree: int) -> TruncatedSeries:
        return cls({}, max_degree)

    @classmethod
    def one(cls, max_degree: int) -> TruncatedSeries:
        return cls({0: 1}, max_degree)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exp: int) -> int:
        if exp > self.max_degree:
            raise ValueError(f"coefficient of q^{exp} is beyond the cutoff {self.max_degree}")
        return self._terms.get(exp, 0)

    def coefficients(self, start: int = 0) -> list[int]:
        return [self._terms.get(e, 0) for e in range(start, self.max_degree + 1)]

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int:
        """Smallest exponent present, or ``max_degree + 1`` for the zero series."""
        return min(self._terms) if self._terms else self.max_degree + 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.max_degree == other.max_degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.max_degree, frozenset(self._terms.items())))

    def agrees_with(self, other: TruncatedSeries, through: Optional[int] = None) -> bool:
        """Termwise equality up to ``through`` (default: the smaller cutoff)."""
        d = min(self.max_degree, other.max_degree)
        if through is not None:
            if through > d:
                raise ValueError(f"cannot compare through {through}; exact only through {d}")
            d = through
        return self.truncate(d)._terms == other.truncate(d)._terms

    def truncate(self, max_degree: int) -> TruncatedSeries:
        if max_degree > self.max_degree:
            raise ValueError(f"cannot raise cutoff from {self.max_degree} to {max_degree}")
        return TruncatedSeries(self._terms, max_degree)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self}, max_degree={self.max_degree})"

    def __str__(self) -> str:
        return _format_terms(self.items())

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries({e: -c for e, c in self._terms.items()}, self.max_degree)

    def _coerce(self, other) -> Optional[TruncatedSeries]:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries({0: other}, self.max_degree)
        if isinstance(other, LaurentPolynomial):
            return promote(other, self.max_degree)
        return None

    def __add__(self, other) -> TruncatedSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = min(self.max_degree, o.max_degree)
        out = {e: c for e, c in self._terms.items() if e <= d}
        for e, c in o._terms.items():
            if e <= d:
                out[e] = out.get(e, 0) + c
        return TruncatedSeries(out, d)

    __radd__ = __add__

    def __sub__(self, other) -> TruncatedSeries:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, LaurentPolynomial):
            # exact factor: only its negative exponents cost precision
            d = self.max_degree + min(other.min_exponent() or 0, 0)
            return TruncatedSeries(_convolve(self._terms, other._terms, d), d)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        d = min(
            self.max_degree + min(other.valuation(), 0),
            other.max_degree + min(self.valuation(), 0),
        )
        return TruncatedSeries(_convolve(self._terms, other._terms, d), d)

    __rmul__ = __mul__

    def scale(self, c: int) -> TruncatedSeries:
        return TruncatedSeries({e: c * v for e, v in self._terms.items()}, self.max_degree)

    def shift(self, n: int) -> TruncatedSeries:
        """Multiply by ``q**n``; the cutoff moves with it."""
        return TruncatedSeries({e + n: c for e, c in self._terms.items()}, self.max_degree + n)

    def to_json(self) -> dict:
        return {"var": "q", "max_degree": self.max_degree, "terms": _terms_json(self.items())}

    @classmethod
    def from_json(cls, data: dict) -> TruncatedSeries:
        if data.get("max_degree") is None:
            raise ValueError("JSON describes a polynomial, not a truncated series")
        return cls(_terms_from_json(data), int(data["max_degree"]))


def _convolve(a: Mapping[int, int], b: Mapping[int, int], cutoff: int) -> dict[int, int]:
    out: dict[int, int] = {}
    if not a or not b:
        return out
    bmin = min(b)
    for e1, c1 in a.items():
        if e1 + bmin > cutoff:
            continue
        for e2, c2 in b.items():
            e = e1 + e2
            if e <= cutoff:
                out[e] = out.get(e, 0) + c1 * c2
    return out


def promote(p: LaurentPolynomial, max_degree: int) -> TruncatedSeries:
    """View an exact polynomial as a series exact through ``max_degree``."""
    return TruncatedSeries(p.terms, max_degree)


@lru_cache(maxsize=None)
def q_pochhammer(m: int) -> LaurentPolynomial:
    """``(q)_m = (1-q)(1-q^2)...(1-q^m)``; ``(q)_0 = 1``."""
    if m < 0:
        raise ValueError("q_pochhammer needs m >= 0")
    if m == 0:
        return LaurentPolynomial.constant(1)
    return q_pochhammer(m - 1) * LaurentPolynomial({0: 1, m: -1})


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, n: int) -> LaurentPolynomial:
    """The q-binomial ``[m+n choose m]_q = (q)_{m+n} / ((q)_m (q)_n)``.

    The division is carried out exactly; a remainder would mean an arithmetic
    bug and raises :class:`ArithmeticError`.
    """
    if m < 0 or n < 0:
        raise ValueError("gaussian_binomial needs m, n >= 0")
    num = q_pochhammer(m + n)
    return num.exact_div(q_pochhammer(m)).exact_div(q_pochhammer(n))


def reciprocal_q(p: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute ``q -> 1/q``."""
    return LaurentPolynomial({-e: c for e, c in p.terms.items()})


@lru_cache(maxsize=None)
def _inverse_pochhammer(m, max_degree: int) -> tuple[int, ...]:
    # 1/prod(1-q^i) via repeated geometric-series division, i <= min(m, D)
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    top = max_degree if m == INFINITY else min(int(m), max_degree)
    for i in range(1, top + 1):
        for e in range(i, max_degree + 1):
            coeffs[e] += coeffs[e - i]
    return tuple(coeffs)


def inverse_pochhammer_series(m, max_degree: int) -> TruncatedSeries:
    """``1/(q)_m`` (``m`` may be :data:`INFINITY`) exact through ``max_degree``."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    if m != INFINITY and (int(m) != m or m < 0):
        raise ValueError("m must be a nonnegative integer or INFINITY")
    coeffs = _inverse_pochhammer(m, max_degree)
    return TruncatedSeries(dict(enumerate(coeffs)), max_degree)


def eval_at_one(p: LaurentPolynomial) -> int:
    """Sum of all coefficients, i.e. the value at ``q = 1``."""
    return sum(p.terms.values())
