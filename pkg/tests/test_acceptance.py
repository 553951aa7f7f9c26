"""The eleven acceptance criteria, each at its stated tolerance.

Every test records a ``criterion N: PASS/FAIL`` line that is repeated in the
terminal summary.  Criteria 3 and 5 are run exactly as worded; both contradict
other criteria and are expected to fail (see the notes in the README).
"""

import itertools
import time

import pytest

from conftest import clear_caches
from fermionic import characters as chars
from fermionic import reference
from fermionic.kostka import build_kostka_matrix, invert_unitriangular, kostka_poly
from fermionic.oracles import finite_char, weyl_kac_char
from fermionic.verify import (
    charge_composite_sweep,
    cocharge_sweep,
    collapse_checks,
    fusion_recombination_checks,
    lr_sweep,
    translation_checks,
    two_line_checks,
    weyl_kac_sweep_cases,
)
from fermionic.weights import RankedWeight, RectangularSequence, weyl_dimension


def tally(outcomes):
    outcomes = list(outcomes)
    bad = [(label, detail) for label, ok, detail in outcomes if not ok]
    return len(outcomes), bad


def summary(n, bad):
    if not bad:
        return f"{n}/{n} checks"
    label, detail = bad[0]
    return f"{n - len(bad)}/{n} checks; first failure {label}: {detail}"


def timed(fn):
    clear_caches()
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_sl4_kostka_matrix(criterion):
    K, secs = timed(lambda: build_kostka_matrix(3, 4, 12, 0))
    order = [tuple(w.coords) for w in K.weights()]
    want = reference.sl4_kostka()
    wrong = [(order[i], order[j]) for i in range(10) for j in range(10) if K.entries[i][j] != want[i][j]]
    ok = order == reference.SL4_ORDER and len(K) == 10 and not wrong and secs < 5
    criterion(1, ok, f"{100 - len(wrong)}/100 entries, {secs:.2f}s")
    assert order == reference.SL4_ORDER
    assert not wrong
    assert secs < 5


def test_criterion_2_sl4_inverse(criterion):
    Kinv = invert_unitriangular(build_kostka_matrix(3, 4, 12, 0))
    want = reference.sl4_kostka_inverse()
    wrong = [(i, j) for i in range(10) for j in range(10) if Kinv.entries[i][j] != want[i][j]]
    corner = Kinv.entry(RankedWeight((0, 0, 0)), RankedWeight((1, 2, 1)))
    ok = not wrong and str(corner) == "-q^3"
    criterion(2, ok, f"{100 - len(wrong)}/100 entries, corner {corner}")
    assert not wrong
    assert str(corner) == "-q^3"


def sl3_cases():
    for l1, l2 in itertools.product(range(5), repeat=2):
        t = min(l1, l2)
        for i, j in itertools.product(range(t + 1), repeat=2):
            yield l1, l2, i, j


def test_criterion_3_sl3_closed_form_as_worded(criterion):
    def run():
        bad = []
        n = 0
        for l1, l2, i, j in sl3_cases():
            n += 1
            got = kostka_poly(2, RankedWeight((l1, l2)), RectangularSequence((l1 - i, l2 - j)))
            want = reference.sl3_kostka(l1, l2, l1 - i, l2 - j)
            if got != want:
                bad.append((f"K((l1,l2)=({l1},{l2}), n=({l1 - i},{l2 - j}))", f"got {got}, expected {want}"))
        return n, bad

    (n, bad), secs = timed(run)
    ok = not bad and secs < 1
    criterion(3, ok, summary(n, bad) + f", {secs:.2f}s; the transposed reading is checked separately")
    if not bad:
        assert secs < 1
        return
    pytest.xfail("literal index order contradicts the Littlewood-Richardson criterion; see README")


def test_criterion_3_sl3_closed_form_transposed():
    # kostka_poly((l1-i, l2-j), (l1, l2)): the order used by the sl4 matrix
    t0 = time.perf_counter()
    n = 0
    for l1, l2, i, j in sl3_cases():
        n += 1
        got = kostka_poly(2, RankedWeight((l1 - i, l2 - j)), RectangularSequence((l1, l2)))
        assert got == reference.sl3_kostka(l1, l2, l1 - i, l2 - j), (l1, l2, i, j)
    assert n == 155
    assert time.perf_counter() - t0 < 1


def test_criterion_4_littlewood_richardson(criterion):
    (n, bad), secs = timed(lambda: tally(lr_sweep(3, 8)))
    ok = not bad and n >= 300 and secs < 120
    criterion(4, ok, summary(n, bad) + f", {secs:.1f}s")
    assert not bad
    assert n >= 300
    assert secs < 120


@pytest.mark.xfail(strict=True, reason="q^n(R) cocharge(1/q) is the charge polynomial; K is the cocharge one")
def test_criterion_5_charge_composite(criterion):
    n, bad = tally(charge_composite_sweep(8))
    criterion(5, not bad, summary(n, bad))
    assert not bad


def test_criterion_5_cocharge_identity():
    # what does hold on the same sweep: K equals the cocharge Kostka-Foulkes polynomial
    n, bad = tally(cocharge_sweep(8))
    assert n > 1000
    assert not bad, bad[:3]


def test_criterion_6_weyl_kac(criterion):
    def run():
        from fermionic.verify import weyl_kac_checks

        return tally(weyl_kac_checks(8))

    (n, bad), secs = timed(run)
    ok = not bad and secs < 300
    criterion(6, ok, summary(n, bad) + f", {secs:.1f}s")
    assert not bad
    assert secs < 300


def positivity_cases():
    for r, k, lam in weyl_kac_sweep_cases():
        yield r, k, lam, 8
    yield 3, 4, (1, 2, 1), 4


def test_criterion_7_positivity(criterion):
    bad = []
    n = 0
    for r, k, lam, D in positivity_cases():
        n += 1
        ch = chars.char_V_general(r, k, lam, D)
        if not ch.is_nonnegative() or ch.min_exponent() < 0:
            bad.append((f"r={r} k={k} lambda={lam}", f"min exponent {ch.min_exponent()}"))
    # the r=3 assembly really does go through Laurent coefficients
    coeffs = chars.inverse_kostka_column(3, RankedWeight((1, 2, 1)))
    negative = any(c.min_exponent() < 0 for c in coeffs.values() if not c.is_zero())
    ok = not bad and negative
    criterion(7, ok, summary(n, bad))
    assert negative
    assert not bad


def test_criterion_8_rectangular_collapse(criterion):
    n, bad = tally(collapse_checks(6))
    criterion(8, not bad, summary(n, bad))
    assert not bad


def test_criterion_9_parametrizations_and_recombination(criterion):
    n1, bad1 = tally(two_line_checks(6))
    n2, bad2 = tally(fusion_recombination_checks(3))
    n, bad = n1 + n2, bad1 + bad2
    criterion(9, not bad, summary(n, bad))
    assert not bad


def test_criterion_10_weyl_invariance_and_top_layer(criterion):
    bad = []
    n = 0
    for r, k, lam, D in positivity_cases():
        outputs = [chars.char_V_general(r, k, lam, D)]
        rect = RankedWeight(lam).rectangle()
        if rect is not None:
            outputs.append(chars.char_V_rect(r, k, rect[0], rect[1], D))
        for ch in outputs:
            n += 1
            v = ch.weyl_violations()
            top = ch.layer(0)
            if v:
                bad.append((f"{ch.formula} r={r} k={k} lambda={lam}", v[0]))
            elif top != finite_char(r, lam) or sum(top.values()) != weyl_dimension(RankedWeight(lam)):
                bad.append((f"{ch.formula} r={r} k={k} lambda={lam}", "top layer"))
    criterion(10, not bad, summary(n, bad))
    assert not bad


def test_criterion_11_translation_convergence(criterion):
    n, bad = tally(translation_checks(6))
    criterion(11, not bad, summary(n, bad))
    assert not bad
