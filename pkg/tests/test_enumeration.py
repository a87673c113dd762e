"""Compiled and pure enumeration backends must agree exactly."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3kit import enumeration
from k3kit._enum_pure import cholesky_rational, count_by_norm
from k3kit.lattice import standard_lattice


def _posdef_corpus():
    e8 = [list(r) for r in standard_lattice("E8").gram]
    nik = [[-x for x in row] for row in standard_lattice("NIKULIN").gram]
    return [
        ("E8", e8),
        ("Nikulin(-1)", nik),
        ("diag", [[2, 0, 0], [0, 4, 0], [0, 0, 6]]),
        ("skew", [[2, 1, 0], [1, 2, 1], [0, 1, 4]]),
    ]


@pytest.mark.parametrize("label,gram", _posdef_corpus())
@pytest.mark.parametrize("target", [1, 2, 3, 4, 6, 8, 12, 16])
def test_backends_agree(label, gram, target):
    pure = enumeration.count_positive_definite(gram, target, force_pure=True)
    dispatched = enumeration.count_positive_definite(gram, target)
    assert pure == dispatched


def test_e8_theta_coefficients():
    # classical values: 240 roots, 2160 norm-4 vectors, 6720 norm-6 vectors
    e8 = [list(r) for r in standard_lattice("E8").gram]
    assert count_by_norm(e8, 2) == 240
    assert count_by_norm(e8, 4) == 2160
    assert count_by_norm(e8, 6) == 6720


def test_counts_are_even():
    # v and -v always pair up
    for _, gram in _posdef_corpus():
        for t in range(1, 9):
            assert enumeration.count_positive_definite(gram, t) % 2 == 0


def test_zero_and_negative_targets():
    assert count_by_norm([[2]], 0) == 0
    assert count_by_norm([[2]], -2) == 0
    assert count_by_norm([], 2) == 0


def test_rank_one():
    assert count_by_norm([[2]], 2) == 2       # +-1
    assert count_by_norm([[2]], 8) == 2       # +-2
    assert count_by_norm([[2]], 3) == 0


def test_cholesky_rejects_indefinite():
    with pytest.raises(ValueError):
        cholesky_rational([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        cholesky_rational([[-2, 0], [0, 2]])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
       st.integers(1, 10))
def test_backends_agree_on_random_posdef(b, target):
    # B^T B + I is positive definite for any integer B
    n = 3
    gram = [[sum(b[k][i] * b[k][j] for k in range(n)) + (2 if i == j else 0)
             for j in range(n)] for i in range(n)]
    assert (enumeration.count_positive_definite(gram, target, force_pure=True)
            == enumeration.count_positive_definite(gram, target))


def test_backend_name_reports():
    gram = [[2, 0], [0, 2]]
    name = enumeration.backend_name(gram, 4)
    if enumeration.HAVE_COMPILED:
        assert name == "compiled"
    else:
        assert name == "pure"
    # oversized entries push the dispatcher to the pure path
    huge = [[10 ** 9, 0], [0, 10 ** 9]]
    assert enumeration.backend_name(huge, 4) == "pure"
