import pytest

from hessex.gens import f_poly, g_poly, generator_list, peeled_list
from hessex.hessfn import HessError, all_hessenberg, validate
from hessex.polycore import Poly, linear_form, parse_poly
from hessex.quotient import ideal_contains, in_ideal

N = 8


def P(text, n=N):
    return parse_poly(text, n)


def test_small_values():
    assert f_poly(3, 1, 1) == P("x1", 3)
    assert g_poly(3, 2, 1) == P("x1 - x2", 3)
    assert f_poly(3, 2, 1) == P("x1^2 - x1*x2", 3)
    assert f_poly(3, 3, 3) == P("x1 + x2 + x3", 3)
    assert g_poly(3, 3, 3) == Poly.const(3, 3)
    assert f_poly(3, 2, 0).is_zero() and g_poly(3, 2, 0).is_zero()


def test_index_errors():
    with pytest.raises(HessError):
        f_poly(3, 2, 3)
    with pytest.raises(HessError):
        g_poly(3, 4, 1)


@pytest.mark.parametrize("i", range(1, N + 1))
def test_identity_and_recursions(i):
    for j in range(1, i + 1):
        assert f_poly(N, i, j) == Poly.var(N, j) * g_poly(N, i, j) + g_poly(N, i, j - 1)
        if j < i:
            lin = linear_form(N, {j: 1, i: -1})
            assert f_poly(N, i, j) == f_poly(N, i - 1, j - 1) + lin * f_poly(N, i - 1, j)
            assert g_poly(N, i, j) == g_poly(N, i - 1, j - 1) + lin * g_poly(N, i - 1, j)
    assert g_poly(N, i, i) == Poly.const(N, i)


def test_homogeneity():
    for i in range(1, 6):
        for j in range(1, i + 1):
            assert f_poly(5, i, j).is_homogeneous() and f_poly(5, i, j).degree() == i - j + 1
            assert g_poly(5, i, j).degree() == i - j


def test_generator_list_labels():
    gl = generator_list(validate("2,3,4,4"), 3)
    assert gl.labels() == ["g_{2,1}", "g_{3,2}", "f_{4,3}", "f_{4,4}"]
    assert gl.degrees() == [1, 1, 2, 1]
    assert not gl.has_constant()
    assert generator_list(validate("1,2"), 2).has_constant()


@pytest.mark.parametrize("n", range(2, 5))
def test_membership_lemmas(n):
    for h in all_hessenberg(n):
        for j in range(2, n + 1):
            fs = [f_poly(n, h(m), m) for m in range(1, j)]
            gs = [g_poly(n, h(m), m) for m in range(1, j)]
            for i in range(h(j - 1), n + 1):
                assert in_ideal(f_poly(n, i, j - 1), fs)
                assert in_ideal(g_poly(n, i, j - 1), gs)
        for m in range(1, n + 1):
            assert in_ideal(f_poly(n, h(m), m), [g_poly(n, h(k), k) for k in range(1, m + 1)])


@pytest.mark.parametrize("n", range(1, 5))
def test_peeled_ideals_equal(n):
    for h in all_hessenberg(n):
        for j in range(1, n + 1):
            a, b = list(generator_list(h, j).polys), peeled_list(h, j)
            assert ideal_contains(a, b) and ideal_contains(b, a)


def test_membership_is_not_vacuous():
    gens = [f_poly(3, 2, 1)]
    assert not in_ideal(Poly.var(3, 1), gens)
