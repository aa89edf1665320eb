import pytest

from hessex.gens import generator_list
from hessex.hessfn import all_hessenberg, p_of_h, validate
from hessex.polycore import Poly, parse_poly
from hessex.quotient import (ZeroRingError, filtration_check, graded_slice_dim, hilbert_closed,
                             hilbert_oracle, is_regular_sequence, iso_check, lemma_sequences,
                             monomial_basis, peel_check, phi, poincare_inductive,
                             poincare_product, quotient_ring, ring_dim, series_text)


def test_poincare_2344():
    h = validate("2,3,4,4")
    total, terms = poincare_inductive(h)
    assert total == poincare_product(h) == [1, 3, 3, 1]
    assert [t.shifted for t in terms] == [[1, 2, 1], [0, 1, 1], [0, 0, 1], [0, 0, 0, 1]]
    assert series_text(total) == "1 + 3t + 3t^2 + t^3"


def test_basis_2444():
    got = set(monomial_basis(validate("2,4,4,4"), 1))
    want = {(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 0, 0), (1, 0, 1, 0),
            (0, 2, 0, 0), (0, 1, 1, 0), (1, 2, 0, 0), (1, 1, 1, 0), (0, 2, 1, 0), (1, 2, 1, 0)}
    assert got == want


def test_zero_ring_rejected():
    with pytest.raises(ZeroRingError):
        monomial_basis(validate("1,2"), 2)
    assert ring_dim(validate("1,2"), 2) == 0
    with pytest.raises(ZeroRingError):
        is_regular_sequence(list(generator_list(validate("1,2"), 2).polys))


def test_slice_dims_233():
    gens = list(generator_list(validate("2,3,3"), 1).polys)
    assert hilbert_oracle(gens, 3) == [1, 2, 1, 0]
    assert graded_slice_dim(gens, 2) == 6 - 1


def test_normal_form_remark_233():
    ring = quotient_ring(validate("2,3,3"), 1)
    assert ring.normal_form(parse_poly("x1^2 - x1*x2", 3)).is_zero()
    assert ring.normal_form(parse_poly("4*x1*x2 + 2*x2^2", 3)).is_zero()
    assert ring.normal_form(parse_poly("x1^2", 3)).coords == {(1, 1, 0): 1}
    assert ring.series() == [1, 2, 1]


def test_irregular_sequence_detected():
    x1 = Poly.var(2, 1)
    rep = is_regular_sequence([x1 * x1, x1 * Poly.var(2, 2)])
    assert not rep
    # x2^k survives in every degree k >= 2
    assert hilbert_oracle([x1 * x1, x1 * Poly.var(2, 2)], 6) == [1, 2, 1, 1, 1, 1, 1]
    assert graded_slice_dim([x1 + Poly.var(2, 2)], 1) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_matches_closed(n):
    for h in all_hessenberg(n):
        for s in range(1, p_of_h(h) + 1):
            rep = is_regular_sequence(list(generator_list(h, s).polys))
            assert rep and rep.expected == hilbert_closed(h, s)
            assert quotient_ring(h, s).series() == hilbert_closed(h, s)


@pytest.mark.parametrize("n", range(1, 7))
def test_poincare_formulas_agree(n):
    for h in all_hessenberg(n):
        assert poincare_inductive(h)[0] == poincare_product(h) == hilbert_closed(h, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_filtration_iso_peel(n):
    for h in all_hessenberg(n):
        assert filtration_check(h).ok
        for s in range(1, p_of_h(h) + 1):
            assert iso_check(h, s).ok
            assert peel_check(h, s).ok


@pytest.mark.parametrize("n", range(1, 5))
def test_lemma_sequences_regular(n):
    for h in all_hessenberg(n):
        for _, seq in lemma_sequences(h):
            assert is_regular_sequence(seq)


def test_normal_form_ring_map():
    ring = quotient_ring(validate("2,3,4,4"), 1)
    p = parse_poly("x1^2 + 3*x2*x4 - x3", 4)
    q = parse_poly("x2 - 1/2*x4^2", 4)
    a, b = ring.normal_form(p), ring.normal_form(q)
    assert ring.normal_form(a.lift()) == a
    assert a * b == ring.normal_form(p * q)
    assert (a + b) == ring.normal_form(p + q)


def test_phi():
    p = parse_poly("x1*x2 + x3^2 + x2", 3)
    assert phi(p, 2) == parse_poly("x2^2", 2)
