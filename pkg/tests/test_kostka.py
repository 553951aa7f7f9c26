import itertools
import json

import pytest

from fermionic.kostka import (
    KostkaMatrix,
    build_kostka_matrix,
    invert_unitriangular,
    kostka_index_set,
    kostka_poly,
    mode_totals,
    n_statistic,
    quadratic_form,
    ModeVector,
)
from fermionic.oracles import lr_multiplicity
from fermionic.qseries import LaurentPolynomial, eval_at_one
from fermionic.weights import (
    PartitionShape,
    RankedWeight,
    RectangularSequence,
    dominance_leq,
    nu_concat,
    pad_partition,
    partition_to_weight,
    weight_to_partition,
)

L = LaurentPolynomial


def sweep(max_rank=3, max_size=8):
    """All (r, lambda, n) with r <= max_rank, |nu(n)| <= max_size and lambda
    in the right residue class."""
    for r in range(1, max_rank + 1):
        for n in itertools.product(range(max_size + 1), repeat=r):
            size = sum((a + 1) * c for a, c in enumerate(n))
            if size > max_size:
                continue
            for lam in itertools.product(range(size + 1), repeat=r):
                lsize = sum((a + 1) * c for a, c in enumerate(lam))
                if lsize <= size and (size - lsize) % (r + 1) == 0:
                    yield r, RankedWeight(lam), RectangularSequence(n)


SWEEP = list(sweep())


def test_sweep_is_substantial():
    assert len(SWEEP) > 300


def test_examples():
    assert str(kostka_poly(3, RankedWeight((0, 0, 0)), RectangularSequence((1, 0, 1)))) == "q"
    assert str(kostka_poly(3, RankedWeight((0, 2, 0)), RectangularSequence((1, 2, 1)))) == "q + q^2"
    assert str(kostka_poly(2, RankedWeight((0, 0)), RectangularSequence((1, 1)))) == "q"
    assert str(kostka_poly(2, RankedWeight((0, 0)), RectangularSequence((0, 0)))) == "1"


def test_lemma_properties_on_sweep():
    for r, lam, n in SWEEP:
        K = kostka_poly(r, lam, n)
        nu = nu_concat(n)
        part = weight_to_partition(lam)
        assert all(c > 0 for c in K.terms.values()), (lam, n)
        assert K.is_zero() or K.min_exponent() >= 0
        if part == nu:
            assert K == L.constant(1)
        if (part.parts[:1] or (0,))[0] > (nu.parts[:1] or (0,))[0]:
            assert K.is_zero(), (lam, n)
        if not K.is_zero():
            m = mode_totals(r, lam, n.rectangles())
            assert m is not None
            assert dominance_leq(pad_partition(lam, m[-1]), nu), (lam, n)


def test_wrong_residue_vanishes():
    assert kostka_poly(2, RankedWeight((1, 0)), RectangularSequence((1, 1))).is_zero()
    assert kostka_poly(3, RankedWeight((2, 0, 0)), RectangularSequence((1, 0, 0))).is_zero()


def test_value_at_one_is_lr_multiplicity():
    for r, lam, n in SWEEP:
        K = kostka_poly(r, lam, n)
        mus = [RankedWeight.fundamental(r, al, a) for a, al in n.rectangles()]
        assert eval_at_one(K) == lr_multiplicity(r, lam, mus), (r, lam, n)


def test_raising_the_part_cap_changes_nothing():
    for r, lam, n in SWEEP[::3]:
        cap = max(1, sum(n.counts))
        assert kostka_poly(r, lam, n, bound=cap + 2) == kostka_poly(r, lam, n), (lam, n)


def test_quadratic_form_examples():
    assert quadratic_form(1, ModeVector.from_partitions([[]], 1)) == 0
    assert quadratic_form(1, ModeVector.from_partitions([[1]], 1)) == 1
    assert quadratic_form(2, ModeVector.from_partitions([[1], [1]], 1)) == 1


def test_n_statistic_examples():
    assert n_statistic(RectangularSequence((0, 3, 0))) == 0
    assert n_statistic(RectangularSequence((1, 0, 1))) == 1
    assert n_statistic(RectangularSequence((1, 2, 1))) == 4


def test_index_set_order():
    idx = kostka_index_set(3, 4, 12, 0)
    labels = [partition_to_weight(3, p).coords for p in idx]
    assert labels == [
        (0, 0, 0), (1, 0, 1), (0, 2, 0), (2, 1, 0), (0, 1, 2),
        (4, 0, 0), (2, 0, 2), (1, 2, 1), (0, 4, 0), (0, 0, 4),
    ]


def test_width_zero_matrix():
    K = build_kostka_matrix(3, 0, 12, 0)
    assert len(K) == 1
    assert K.entries == [[L.constant(1)]]


@pytest.mark.parametrize("r,width,size,residue", [(1, 4, 8, 0), (2, 3, 9, 1), (2, 4, 12, 0), (3, 4, 12, 0), (3, 3, 10, 2)])
def test_inverse_times_matrix_is_identity(r, width, size, residue):
    K = build_kostka_matrix(r, width, size, residue)
    K.check_unitriangular()
    Kinv = invert_unitriangular(K)
    n = len(K)
    for prod in (K @ Kinv, Kinv @ K):
        for i in range(n):
            for j in range(n):
                assert prod[i][j] == (L.constant(1) if i == j else L())


def test_identity_inverts_to_itself():
    K = build_kostka_matrix(1, 3, 6, 0)
    # rank 1: every K-polynomial above the diagonal is a power of q, still unitriangular
    eye = KostkaMatrix(K.rank, K.order, [[L.constant(int(i == j)) for j in range(len(K))] for i in range(len(K))])
    assert invert_unitriangular(eye).entries == eye.entries


def test_matrix_json_roundtrip():
    K = build_kostka_matrix(3, 4, 12, 0)
    data = json.loads(json.dumps(K.to_json()))
    back = KostkaMatrix.from_json(data)
    assert back.entries == K.entries and back.order == K.order
    assert json.dumps(back.to_json()) == json.dumps(K.to_json())


def test_column_lookup():
    K = build_kostka_matrix(3, 4, 12, 0)
    col = K.column(RankedWeight((1, 2, 1)))
    assert col[weight_to_partition(RankedWeight((0, 2, 0)))] == L({1: 1, 2: 1})
    assert K.entry(RankedWeight((0, 0, 0)), RankedWeight((1, 0, 1))) == L.monomial(1)


def test_rank_mismatch_is_rejected():
    with pytest.raises(ValueError):
        kostka_poly(3, RankedWeight((0, 0)), RectangularSequence((1, 0, 1)))
    with pytest.raises(ValueError):
        kostka_poly(2, RankedWeight((1, -1)), RectangularSequence((1, 1)))
