"""One test per acceptance criterion; each prints a PASS/FAIL line in the summary."""

import json
import time
from contextlib import contextmanager
from fractions import Fraction

from conftest import record
from hessex.cli import run
from hessex.gens import f_poly, g_poly, generator_list
from hessex.hessfn import all_hessenberg, dimension, p_of_h, peterson, r_s, shrink, validate
from hessex.pairing import hess_schubert_flag, pairing_data
from hessex.polycore import Poly, linear_form, parse_poly
from hessex.quotient import (filtration_check, hilbert_closed, is_regular_sequence, iso_check,
                             quotient_ring)
from hessex.schubert import (Permutation, all_permutations, alt_decomposition, question71_check,
                             schubert_poly)

W = Permutation.parse


@contextmanager
def criterion(num, name, limit=None):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        record(num, name, False, f"({time.perf_counter() - t0:.2f}s)")
        raise
    dt = time.perf_counter() - t0
    ok = limit is None or dt < limit
    record(num, name, ok, f"({dt:.2f}s" + (f", limit {limit}s)" if limit else ")"))
    assert ok, f"criterion {num} took {dt:.2f}s, limit {limit}s"


def cli_json(capsys, *argv):
    assert run([*argv, "--json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_criterion_1_poincare(capsys):
    with criterion(1, "Poincare polynomial of (2,3,4,4) by three methods", limit=1.0):
        obj = cli_json(capsys, "poincare", "--h", "2,3,4,4")
        cube = [1, 3, 3, 1]
        assert obj["closed"] == obj["inductive"] == obj["oracle"] == cube
        # t^3*1 + t^2*1 + t(1+t) + (1+t)^2, listed from s=1
        assert [s["series"] for s in obj["summands"]] == [[1, 2, 1], [0, 1, 1], [0, 0, 1], [0, 0, 0, 1]]
        assert run(["poincare", "--h", "2,3,4,4"]) == 0
        assert capsys.readouterr().out.startswith("(1+t)^3 = 1 + 3t + 3t^2 + t^3")


BASIS_2444 = ["1", "x1", "x2", "x3", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x1*x2^2",
              "x1*x2*x3", "x2^2*x3", "x1*x2^2*x3"]


def test_criterion_2_basis(capsys):
    with criterion(2, "monomial basis of (2,4,4,4)"):
        obj = cli_json(capsys, "basis", "--h", "2,4,4,4")
        got = {tuple(e) for e in obj["basis"]}
        want = {parse_poly(m, 4).terms()[0][0] for m in BASIS_2444}
        assert len(obj["basis"]) == 12 and got == want


def _rows(table):
    out = set()
    for lead, rest in table:
        out.add((lead, tuple(sorted((w, str(Fraction(c))) for w, c in rest.items()))))
    return out


REL_3444 = [
    ("4123", {"3142": 1, "2341": -1}),
    ("4213", {"3412": 1, "3241": 2, "2431": -1}),
    ("4132", {"3241": 1}),
    ("4312", {"3421": 1}),
    ("4231", {}),
    ("4321", {}),
]
REL_2444 = [
    ("3124", {"2314": 1}),
    ("4123", {"2413": "1/2"}),
    ("3214", {"2413": "1/2"}),
    ("3142", {"2413": "1/2", "2341": 1}),
    ("4213", {}),
    ("3241", {"2431": "1/2"}),
    ("4132", {"2431": "1/2"}),
    ("3412", {}),
    ("4312", {}),
    ("3421", {}),
    ("4231", {}),
    ("4321", {}),
]


def test_criterion_3_relations(capsys):
    with criterion(3, "relation tables for (3,4,4,4) and (2,4,4,4)", limit=30.0):
        for h, table in (("3,4,4,4", REL_3444), ("2,4,4,4", REL_2444)):
            obj = cli_json(capsys, "relations", "--h", h)
            got = set()
            for r in obj["relations"]:
                got.add((r["lead"], tuple(sorted((t["w"], t["c"]) for t in r["equals"]))))
            assert obj["count"] == len(table) and got == _rows(table)


def test_criterion_4_alternating():
    with criterion(4, "alternating decomposition of f_{i-1,j}"):
        S = lambda w: schubert_poly(W(w))
        assert f_poly(4, 3, 1) == S("4123") - S("3142") + S("2341")
        assert f_poly(4, 2, 1) == S("3124") - S("2314")
        for n in range(2, 7):
            for i in range(2, n + 1):
                for j in range(1, i):
                    assert alt_decomposition(i, j, n).to_poly(n) == f_poly(n, i - 1, j)


def test_criterion_5_regular_sequences():
    with criterion(5, "rank-oracle Hilbert series = product formula, n <= 5", limit=300.0):
        count = 0
        for n in range(1, 6):
            for h in all_hessenberg(n):
                for s in range(1, p_of_h(h) + 1):
                    rep = is_regular_sequence(list(generator_list(h, s).polys))
                    assert rep.regular and rep.expected == hilbert_closed(h, s), (h, s)
                    count += 1
        assert count > 0


def test_criterion_6_filtration():
    with criterion(6, "filtration, dimension identity and quotient isomorphism, n <= 5"):
        for n in range(1, 6):
            for h in all_hessenberg(n):
                rep = filtration_check(h)
                assert rep.ok, h
                for st in rep.steps:
                    assert st.dim_s == st.dim_next + quotient_ring(shrink(h, st.s), r_s(h, st.s)).dim
                for s in range(1, p_of_h(h) + 1):
                    assert iso_check(h, s).ok, (h, s)


def test_criterion_7_identities():
    with criterion(7, "f = x_j g_{i,j} + g_{i,j-1} and both recursions, i <= 8", limit=1.0):
        n = 8
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                assert f_poly(n, i, j) == Poly.var(n, j) * g_poly(n, i, j) + g_poly(n, i, j - 1)
                if j < i:
                    lin = linear_form(n, {j: 1, i: -1})
                    assert f_poly(n, i, j) == f_poly(n, i - 1, j - 1) + lin * f_poly(n, i - 1, j)
                    assert g_poly(n, i, j) == g_poly(n, i - 1, j - 1) + lin * g_poly(n, i - 1, j)


def test_criterion_8_groebner_remark():
    with criterion(8, "normal forms in A_1 of (2,3,3)"):
        ring = quotient_ring(validate("2,3,3"), 1)
        assert ring.normal_form(parse_poly("x1^2 - x1*x2", 3)).is_zero()
        assert ring.normal_form(parse_poly("4*x1*x2 + 2*x2^2", 3)).is_zero()


def test_criterion_9_question71(capsys):
    with criterion(9, "Schubert basis question on all of [4] and Peterson n <= 5"):
        obj = cli_json(capsys, "question71", "--n", "4")
        assert len(obj["results"]) == 14 and obj["all"]
        for n in range(2, 6):
            assert question71_check(peterson(n))


def test_criterion_10_flag_and_pairing():
    with criterion(10, "flag Hessenberg Schubert polynomials, pairing, integral of beta"):
        for w in all_permutations(4):
            assert hess_schubert_flag(w) == schubert_poly(w)
        for h in all_hessenberg(4):
            pd = pairing_data(h)
            for d in range(dimension(h) + 1):
                assert pd.nonsingular(d), (h, d)
        for n in range(1, 6):
            for h in all_hessenberg(n):
                pd = pairing_data(h)
                assert pd.integrate(pd.beta) == 1
