import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fermionic.lattice import QuadraticForm, enumerate_points, enumerate_with_values, shell_is_stable


@st.composite
def forms(draw):
    n = draw(st.integers(1, 3))
    # G = M^T M + I is positive definite
    M = [[draw(st.integers(-2, 2)) for _ in range(n)] for _ in range(n)]
    G = [[sum(M[l][i] * M[l][j] for l in range(n)) + (i == j) for j in range(n)] for i in range(n)]
    den = draw(st.sampled_from([1, 2]))
    G = [[Fraction(v, den) for v in row] for row in G]
    b = [Fraction(draw(st.integers(-2, 2)), draw(st.sampled_from([1, 2, 3]))) for _ in range(n)]
    return QuadraticForm(G, b), den


def radius(form, den, budget):
    # G >= I/den, so |x|^2/(2 den) - |b||x| <= budget bounds |x|
    nb = math.sqrt(float(sum(v * v for v in form.b)))
    return math.ceil(den * (nb + math.sqrt(nb * nb + 2 * budget / den))) + 1


def box_points(form, budget, lower, rad):
    ranges = [range(lo if lo is not None else -rad, rad + 1) for lo in lower]
    cap = form.scale * budget
    return sorted(x for x in itertools.product(*ranges) if form.twice_scaled(x) <= cap)


@settings(max_examples=60, deadline=None)
@given(forms(), st.integers(0, 4), st.data())
def test_matches_box_enumeration(fd, budget, data):
    form, den = fd
    lower = [data.draw(st.sampled_from([None, 0, -1])) for _ in range(form.dim)]
    got = sorted(enumerate_points(form, budget, lower))
    assert got == box_points(form, budget, lower, radius(form, den, budget))


@settings(max_examples=40, deadline=None)
@given(forms(), st.integers(0, 4))
def test_values_are_exact(fd, budget):
    form, _ = fd
    for x, v in enumerate_with_values(form, budget):
        assert Fraction(v, form.scale) == form.value(x)


def test_minimum_and_center():
    f = QuadraticForm([[2, -1], [-1, 2]], [1, 0])
    assert f.center == [Fraction(2, 3), Fraction(1, 3)]
    assert f.minimum == Fraction(-1, 3)


def test_rejects_bad_gram():
    with pytest.raises(ValueError):
        QuadraticForm([[1, 2], [2, 1]])
    with pytest.raises(ValueError):
        QuadraticForm([[1, 0], [1, 1]])


def test_prune_budget_only_widens():
    f = QuadraticForm([[2]], [1])
    assert sorted(enumerate_points(f, 3, prune_budget=10)) == sorted(enumerate_points(f, 3))


def test_shell_stability():
    f = QuadraticForm([[2, -1], [-1, 2]])
    assert shell_is_stable(f, 5)
    assert shell_is_stable(f, 5, [0, 0])


def test_zero_dimensional_form():
    assert list(enumerate_points(QuadraticForm([]), 0)) == [()]
