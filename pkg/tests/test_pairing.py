from fractions import Fraction

import pytest

from hessex.hessfn import all_hessenberg, dimension, full, identity, validate, young_order
from hessex.pairing import (PairingError, beta, expand_class, hess_schubert_flag, integrate,
                            pairing_data, pairing_matrix, young_order_brute, young_subgroup)
from hessex.polycore import Poly, parse_poly
from hessex.quotient import quotient_ring
from hessex.schubert import Permutation, all_permutations, schubert_poly


def test_beta_examples():
    assert beta(validate("2,2")) == parse_poly("1/2*x1 - 1/2*x2", 2)
    assert pairing_data(validate("2,2")).beta.lift() == Poly.var(2, 1)
    assert beta(identity(4)) == Poly.const(4, 1)
    vdm = Poly.const(3, 1)
    for j in range(1, 3):
        for i in range(j + 1, 4):
            vdm = vdm * (Poly.var(3, j) - Poly.var(3, i))
    assert beta(full(3)) == vdm * Fraction(1, 6)


def test_young_subgroup():
    ys = young_subgroup(validate("1,3,3,4"))
    assert ys.breakpoints == (1, 3, 4) and ys.order == 2
    assert [list(b) for b in ys.blocks()] == [[1], [2, 3], [4]]


@pytest.mark.parametrize("n", range(1, 7))
def test_young_order_brute(n):
    for h in all_hessenberg(n):
        assert young_order_brute(h) == young_order(h)


@pytest.mark.parametrize("n", range(1, 6))
def test_integral_of_beta(n):
    for h in all_hessenberg(n):
        pd = pairing_data(h)
        assert pd.integrate(pd.beta) == 1
        if dimension(h) > 0:
            assert pd.integrate(pd.ring.normal_form(Poly.const(n, 1))) == 0


def test_integrate_is_linear_and_top_only():
    h = validate("2,3,4,4")
    ring = quotient_ring(h, 1)
    a = ring.normal_form(parse_poly("x1*x2*x3 + x1", 4))
    b = ring.normal_form(parse_poly("x2^3 - x3", 4))
    assert integrate(a + b.scale(3)) == integrate(a) + 3 * integrate(b)
    assert integrate(ring.normal_form(parse_poly("x1 + x2^2", 4))) == 0


def test_flag_n2():
    pd = pairing_data(full(2))
    assert pd.integrate(pd.ring.normal_form(Poly.var(2, 1))) == 1
    assert pairing_matrix(full(2), 1) == [[1]]


@pytest.mark.parametrize("n", range(1, 5))
def test_pairing_nonsingular(n):
    for h in all_hessenberg(n):
        pd = pairing_data(h)
        for d in range(dimension(h) + 1):
            assert pd.nonsingular(d)


def test_pairing_degree_range():
    with pytest.raises(PairingError):
        pairing_matrix(validate("2,2"), 2)


@pytest.mark.parametrize("n", range(1, 5))
def test_hess_schubert_flag(n):
    for w in all_permutations(n):
        assert hess_schubert_flag(w) == schubert_poly(w)


def test_hess_schubert_non_flag():
    with pytest.raises(PairingError, match="not determined by presentation"):
        hess_schubert_flag(Permutation.parse("2314"), validate("2,4,4,4"))


def test_expand_class():
    ring = quotient_ring(validate("2,3,3"), 1)
    assert expand_class(ring.normal_form(parse_poly("x1^2", 3))) == {(1, 1, 0): 1}
    assert expand_class(ring.normal_form(parse_poly("x2", 3))) == {(0, 1, 0): 1}
    r4 = quotient_ring(validate("2,4,4,4"), 1)
    a = expand_class(r4.normal_form(schubert_poly(Permutation.parse("2314"))))
    b = expand_class(r4.normal_form(schubert_poly(Permutation.parse("3124"))))
    assert a == b
