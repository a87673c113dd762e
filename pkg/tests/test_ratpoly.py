from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3kit import ratpoly as rp

coeff = st.fractions(min_value=-9, max_value=9, max_denominator=4)
polys = st.lists(coeff, min_size=0, max_size=6).map(rp.poly)


def test_poly_normalizes_trailing_zeros():
    assert rp.poly([1, 2, 0, 0]) == (Fraction(1), Fraction(2))
    assert rp.poly([0, 0]) == ()
    assert rp.degree(()) == -1
    assert rp.degree(rp.poly([5])) == 0


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert rp.add(p, q) == rp.add(q, p)
    assert rp.mul(p, q) == rp.mul(q, p)
    assert rp.mul(p, rp.add(q, r)) == rp.add(rp.mul(p, q), rp.mul(p, r))
    assert rp.sub(rp.add(p, q), q) == p


@given(polys, polys)
def test_divmod_identity(p, q):
    if not q:
        return
    quot, rem = rp.divmod_poly(p, q)
    assert rp.add(rp.mul(quot, q), rem) == p
    assert rp.degree(rem) < rp.degree(q)


@settings(max_examples=50)
@given(polys, polys)
def test_gcd_divides_both(p, q):
    g = rp.gcd(p, q)
    if g:
        assert not rp.divmod_poly(p, g)[1]
        assert not rp.divmod_poly(q, g)[1]


def test_squarefree():
    t2 = rp.poly([0, 0, 1])             # t^2
    assert not rp.is_squarefree(t2)
    assert rp.is_squarefree(rp.poly([-1, 0, 1]))   # t^2 - 1
    assert rp.is_squarefree(rp.poly([7]))
    assert not rp.is_squarefree(())


def test_valuation():
    t = rp.poly([0, 1])
    p = rp.mul(rp.mul(t, t), rp.poly([1, 1]))      # t^2 (t+1)
    assert rp.valuation(p, t) == 2
    assert rp.valuation(p, rp.poly([1, 1])) == 1
    assert rp.valuation(p, rp.poly([2, 1])) == 0
    assert rp.valuation((), t) is None


def test_reverse_weighted():
    p = rp.poly([1, 2])  # 1 + 2t, weight 3 -> s^3 + 2 s^2
    assert rp.reverse_weighted(p, 3) == rp.poly([0, 0, 2, 1])
    with pytest.raises(ValueError):
        rp.reverse_weighted(rp.poly([1, 1, 1]), 1)


def test_resultant_detects_common_roots():
    p = rp.poly([-1, 0, 1])   # (t-1)(t+1)
    q = rp.poly([-1, 1])      # t - 1
    assert rp.resultant(p, q) == 0
    r = rp.poly([1, 1])       # t + 1 vs t - 1: resultant is det of Sylvester
    assert rp.resultant(q, r) != 0


@settings(max_examples=40)
@given(polys, polys)
def test_resultant_zero_iff_gcd_nonconstant(p, q):
    if rp.degree(p) < 1 or rp.degree(q) < 1:
        return
    shared = rp.degree(rp.gcd(p, q)) > 0
    assert (rp.resultant(p, q) == 0) == shared


def test_irreducible_factors_roundtrip():
    # (t-1)(t+1)(t^2+1)(t^4+1) = t^8 - 1
    p = rp.poly([-1, 0, 0, 0, 0, 0, 0, 0, 1])
    factors = rp.irreducible_factors(p)
    degs = sorted(rp.degree(f) for f, _ in factors)
    assert degs == [1, 1, 2, 4]
    prod = rp.poly([1])
    for f, m in factors:
        for _ in range(m):
            prod = rp.mul(prod, f)
    assert prod == rp.monic(p)
    for f, _ in factors:
        assert f[-1] == 1  # monic


def test_factor_multiplicity():
    t = rp.poly([0, 1])
    p = rp.mul(rp.mul(t, t), rp.poly([3, 1]))
    factors = dict(rp.irreducible_factors(p))
    assert factors[t] == 2
    assert factors[rp.poly([3, 1])] == 1


def test_string_roundtrip():
    p = rp.poly([Fraction(1, 2), 3, Fraction(-7, 5)])
    s = rp.to_strings(p)
    assert s == ["1/2", "3/1", "-7/5"]
    assert rp.from_strings(s) == p
    assert rp.from_strings([1, "3/4"]) == rp.poly([1, Fraction(3, 4)])
    with pytest.raises(ValueError):
        rp.from_strings([0.5])


def test_evaluate():
    p = rp.poly([1, 2, 3])
    assert rp.evaluate(p, Fraction(2)) == 1 + 4 + 12
    assert rp.evaluate((), Fraction(5)) == 0


def test_format_poly():
    assert rp.format_poly(rp.poly([-1, 0, 1])) == "t^2 - 1"
    assert rp.format_poly(()) == "0"
