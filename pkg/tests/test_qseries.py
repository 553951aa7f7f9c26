import itertools
import json

import pytest
from hypothesis import given, strategies as st

from fermionic.qseries import (
    INFINITY,
    LaurentPolynomial,
    TruncatedSeries,
    eval_at_one,
    gaussian_binomial,
    inverse_pochhammer_series,
    promote,
    q_pochhammer,
    reciprocal_q,
)

L = LaurentPolynomial

laurent = st.dictionaries(st.integers(-6, 8), st.integers(-20, 20), max_size=6).map(L)
series = st.builds(
    lambda terms, d: TruncatedSeries(terms, d),
    st.dictionaries(st.integers(-3, 10), st.integers(-9, 9), max_size=6),
    st.integers(0, 10),
)


def pochhammer_by_subsets(m):
    # (1-q)...(1-q^m) = sum over subsets S of {1..m} of (-1)^|S| q^{sum S}
    out = {}
    for size in range(m + 1):
        for s in itertools.combinations(range(1, m + 1), size):
            out[sum(s)] = out.get(sum(s), 0) + (-1) ** size
    return L(out)


def gaussian_by_subsets(m, n):
    # m-subsets of {1..m+n}, weighted by q^{sum - m(m+1)/2}
    out = {}
    for s in itertools.combinations(range(1, m + n + 1), m):
        e = sum(s) - m * (m + 1) // 2
        out[e] = out.get(e, 0) + 1
    return L(out)


def partitions_count(d, max_part=None):
    top = d if max_part is None else max_part

    def rec(rest, cap):
        if rest == 0:
            return 1
        return sum(rec(rest - p, p) for p in range(min(rest, cap), 0, -1))

    return rec(d, top)


@pytest.mark.parametrize("m", range(0, 8))
def test_pochhammer_matches_subset_expansion(m):
    assert q_pochhammer(m) == pochhammer_by_subsets(m)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5)])
def test_gaussian_binomial_counts_subsets(m, n):
    g = gaussian_binomial(m, n)
    assert g == gaussian_by_subsets(m, n)
    assert g == gaussian_binomial(n, m)


def test_gaussian_binomial_values():
    assert str(gaussian_binomial(1, 1)) == "1 + q"
    assert str(gaussian_binomial(2, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
    assert gaussian_binomial(0, 5) == L.constant(1)


@pytest.mark.parametrize("m", range(6))
def test_gaussian_binomial_is_palindromic(m):
    for n in range(6):
        g = gaussian_binomial(m, n)
        assert reciprocal_q(g).shift(m * n) == g


def test_inverse_pochhammer_counts_partitions():
    D = 12
    s = inverse_pochhammer_series(INFINITY, D)
    assert s.coefficients() == [partitions_count(d) for d in range(D + 1)]
    s3 = inverse_pochhammer_series(3, D)
    assert s3.coefficients() == [partitions_count(d, 3) for d in range(D + 1)]


def test_inverse_pochhammer_inverts():
    for m in range(6):
        prod = inverse_pochhammer_series(m, 9) * q_pochhammer(m)
        assert prod == TruncatedSeries.one(9)


def test_inverse_pochhammer_rejects_bad_input():
    with pytest.raises(ValueError):
        inverse_pochhammer_series(-1, 3)
    with pytest.raises(ValueError):
        inverse_pochhammer_series(2, -1)


def test_text_form():
    assert str(L()) == "0"
    assert str(L({0: 1, 1: 1, 2: 2})) == "1 + q + 2*q^2"
    assert str(L({3: -1})) == "-q^3"
    assert str(L({-1: 1})) == "q^-1"
    assert str(L({1: -1, 2: -1})) == "-q - q^2"


@given(laurent)
def test_parse_inverts_str(p):
    assert L.parse(str(p)) == p


@given(laurent)
def test_json_roundtrip(p):
    data = json.loads(json.dumps(p.to_json()))
    assert L.from_json(data) == p


@given(series)
def test_series_json_roundtrip(s):
    data = json.loads(json.dumps(s.to_json()))
    assert TruncatedSeries.from_json(data) == s


def test_json_kinds_are_not_confused():
    with pytest.raises(ValueError):
        L.from_json(TruncatedSeries.one(3).to_json())
    with pytest.raises(ValueError):
        TruncatedSeries.from_json(L.constant(1).to_json())


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == L()
    assert a * 1 == a


@given(laurent, laurent)
def test_eval_at_one_is_a_homomorphism(a, b):
    assert eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b)
    assert eval_at_one(a + b) == eval_at_one(a) + eval_at_one(b)


@given(laurent, laurent)
def test_exact_division_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@given(laurent, laurent)
def test_divmod_reconstructs(a, b):
    if b.is_zero() or abs(b.terms[b.max_exponent()]) != 1:
        return
    quot, rem = a.divmod(b)
    assert quot * b + rem == a


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        L({0: 1, 1: 1}).exact_div(L({0: 1, 2: 1}))
    with pytest.raises(ArithmeticError):
        L({0: 1}).exact_div(L({0: 2}))
    with pytest.raises(ArithmeticError):
        L({0: 1}).exact_div(L({0: 1, 1: 1}))
    assert L({0: 2, 1: 4}).exact_div(L({0: 1, 1: 2})) == L.constant(2)


@given(series, series)
def test_series_addition_cutoff(a, b):
    s = a + b
    assert s.max_degree == min(a.max_degree, b.max_degree)


@given(series, series)
def test_series_product_agrees_with_polynomial_product(a, b):
    s = a * b
    exact = L(a.terms) * L(b.terms)
    # everything at or below the cutoff is determined by the known terms
    assert s == promote(exact, s.max_degree)
    va, vb = a.valuation(), b.valuation()
    assert s.max_degree == min(a.max_degree + min(vb, 0), b.max_degree + min(va, 0))


def test_negative_valuation_costs_precision():
    a = TruncatedSeries({-2: 1}, 5)
    b = TruncatedSeries({0: 1, 1: 1}, 5)
    assert (a * b).max_degree == 3
    assert (b * L({-1: 1})).max_degree == 4


def test_coefficient_beyond_cutoff_is_refused():
    s = TruncatedSeries({0: 1}, 2)
    assert s.coefficient(2) == 0
    with pytest.raises(ValueError):
        s.coefficient(3)
    with pytest.raises(ValueError):
        s.truncate(3)


def test_agrees_with():
    a = TruncatedSeries({0: 1, 3: 1}, 4)
    b = TruncatedSeries({0: 1, 4: 2}, 6)
    assert a.agrees_with(b, 2)
    assert not a.agrees_with(b)
    with pytest.raises(ValueError):
        a.agrees_with(b, 5)


def test_shift_moves_cutoff():
    s = TruncatedSeries({0: 1, 2: 3}, 4).shift(-1)
    assert s.items() == [(-1, 1), (1, 3)]
    assert s.max_degree == 3
    assert s.valuation() == -1
