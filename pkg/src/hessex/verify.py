"""Batch driver for the property suites of every module.

Each suite yields ``(label, ok)`` pairs; :func:`verify_all` counts them.
Linear-algebra suites stop at n = 5 (some at 4), combinatorial ones at 6.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .gens import f_poly, g_poly, generator_list, peeled_list
from .hessfn import (all_corner_chains, all_hessenberg, corners, dimension, full, p_of_h,
                     peterson, r_s, remove_corner, shrink, validate, young_order)
from .pairing import hess_schubert_flag, pairing_data, young_order_brute
from .polycore import Poly, format_poly, linear_form, parse_poly
from .quotient import (filtration_check, hilbert_closed, ideal_contains, in_ideal,
                       is_regular_sequence, iso_check, lemma_sequences, peel_check,
                       poincare_inductive, poincare_product, quotient_ring)
from .schubert import (Permutation, SchubertExpr, all_permutations, alt_decomposition,
                       check_kernel_basis, check_kernel_sequence, derive_relations,
                       monk_expand, question71_check, relation_oracle, schubert_poly,
                       schubert_poly_via)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class VerifyReport:
    max_n: int
    suites: list

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def lines(self) -> list[str]:
        out = []
        for s in self.suites:
            tag = "PASS" if s.ok else "FAIL"
            out.append(f"{tag} {s.name}: {s.passed} passed, {s.failed} failed ({s.seconds:.2f}s)")
            out.extend(f"    {f}" for f in s.failures[:5])
        return out


def _hs(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from all_hessenberg(n)


def _random_poly(rng: random.Random, n: int, terms: int = 4, maxdeg: int = 3) -> Poly:
    d = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, maxdeg) for _ in range(n))
        d[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Poly(n, d)


# -- polycore ---------------------------------------------------------------------

def suite_poly_axioms(max_n, rng):
    for n in range(1, min(max_n, 4) + 1):
        for _ in range(20):
            a, b, c = (_random_poly(rng, n) for _ in range(3))
            yield f"assoc n={n}", (a * b) * c == a * (b * c)
            yield f"distrib n={n}", a * (b + c) == a * b + a * c
            yield f"comm n={n}", a * b == b * a
            yield f"components n={n}", sum(a.components().values(), Poly.zero(n)) == a
            for i in range(1, n):
                yield f"dd^2 n={n} i={i}", a.divided_difference(i).divided_difference(i).is_zero()


def suite_poly_roundtrip(max_n, rng):
    for n in range(1, min(max_n, 5) + 1):
        for _ in range(20):
            a = _random_poly(rng, n)
            yield f"text n={n}", parse_poly(format_poly(a), n) == a
            yield f"json n={n}", Poly.from_json(a.to_json()) == a


# -- hessfn -----------------------------------------------------------------------

def suite_hessfn(max_n, rng):
    for n in range(1, min(max_n, 6) + 1):
        yield f"catalan n={n}", len(all_hessenberg(n)) == comb(2 * n, n) // (n + 1)
        for h in all_hessenberg(n):
            for s in range(1, n + 1):
                try:
                    hs = shrink(h, s)
                    ok = hs.n == n - 1
                except ValueError:
                    ok = False
                yield f"shrink {h} s={s}", ok
                if s <= p_of_h(h) and n > 1:
                    yield f"r_s<=p {h} s={s}", r_s(h, s) <= p_of_h(hs)
            for c in corners(h):
                if c.i > c.j:
                    hp = remove_corner(h, c)
                    yield f"corner {h} {c}", hp.boxes() == h.boxes() - 1 and h.contains(hp)


# -- gens -------------------------------------------------------------------------

def suite_gens_identities(max_n, rng):
    top = 8 if max_n >= 4 else max_n
    n = top
    for i in range(1, top + 1):
        for j in range(1, i + 1):
            yield f"f=xg+g i={i} j={j}", f_poly(n, i, j) == Poly.var(n, j) * g_poly(n, i, j) + g_poly(n, i, j - 1)
            if j < i:
                lin = linear_form(n, {j: 1, i: -1})
                yield f"f rec i={i} j={j}", f_poly(n, i, j) == f_poly(n, i - 1, j - 1) + lin * f_poly(n, i - 1, j)
                yield f"g rec i={i} j={j}", g_poly(n, i, j) == g_poly(n, i - 1, j - 1) + lin * g_poly(n, i - 1, j)
        yield f"g_ii i={i}", g_poly(n, i, i) == Poly.const(n, i)


def suite_gens_membership(max_n, rng):
    for h in _hs(1, min(max_n, 4)):
        n = h.n
        for j in range(2, n + 1):
            fs = [f_poly(n, h(m), m) for m in range(1, j)]
            gs = [g_poly(n, h(m), m) for m in range(1, j)]
            for i in range(h(j - 1), n + 1):
                yield f"f member {h} i={i} j={j}", in_ideal(f_poly(n, i, j - 1), fs)
                yield f"g member {h} i={i} j={j}", in_ideal(g_poly(n, i, j - 1), gs)
        for m in range(1, n + 1):
            gs = [g_poly(n, h(k), k) for k in range(1, m + 1)]
            yield f"f in g {h} m={m}", in_ideal(f_poly(n, h(m), m), gs)
        for j in range(1, n + 1):
            a, b = list(generator_list(h, j).polys), peeled_list(h, j)
            yield f"equal ideals {h} j={j}", ideal_contains(a, b) and ideal_contains(b, a)


# -- quotient ---------------------------------------------------------------------

def suite_hilbert(max_n, rng):
    for h in _hs(1, min(max_n, 5)):
        for s in range(1, p_of_h(h) + 1):
            gl = generator_list(h, s)
            rep = is_regular_sequence(list(gl.polys))
            yield f"regular {h} s={s}", bool(rep) and rep.expected == hilbert_closed(h, s)
            ring = quotient_ring(h, s)
            yield f"series {h} s={s}", ring.series() == hilbert_closed(h, s)
        prod = 1
        for m in range(1, h.n + 1):
            prod *= h(m) - m + 1
        yield f"dim {h}", quotient_ring(h, 1).dim == prod


def suite_lemma_sequences(max_n, rng):
    for h in _hs(1, min(max_n, 4)):
        for label, seq in lemma_sequences(h):
            yield f"{label} {h}", bool(is_regular_sequence(seq))


def suite_poincare(max_n, rng):
    for h in _hs(1, min(max_n, 6)):
        a = poincare_product(h)
        b, _ = poincare_inductive(h)
        yield f"poincare {h}", a == b == hilbert_closed(h, 1)


def suite_nf(max_n, rng):
    for h in _hs(1, min(max_n, 4)):
        ring = quotient_ring(h, 1)
        for _ in range(3):
            p, q = _random_poly(rng, h.n, 3, 2), _random_poly(rng, h.n, 3, 2)
            a, b = ring.normal_form(p), ring.normal_form(q)
            yield f"idempotent {h}", ring.normal_form(a.lift()) == a
            yield f"ring map {h}", ring.normal_form(p * q) == ring.normal_form(a.lift() * b.lift())


def suite_filtration(max_n, rng):
    for h in _hs(1, min(max_n, 5)):
        rep = filtration_check(h)
        yield f"filtration {h}", rep.ok
        for s in range(1, p_of_h(h) + 1):
            yield f"iso {h} s={s}", iso_check(h, s).ok
            yield f"peel {h} l={s}", peel_check(h, s).ok


# -- schubert ---------------------------------------------------------------------

def suite_schubert_polys(max_n, rng):
    for n in range(1, min(max_n, 5) + 1):
        for w in all_permutations(n):
            yield f"path {w}", schubert_poly_via(w, lambda a: a[-1]) == schubert_poly(w)
    for n in range(2, min(max_n, 6) + 1):
        for i in range(2, n + 1):
            for j in range(1, i):
                yield f"alt n={n} i={i} j={j}", alt_decomposition(i, j, n).to_poly(n) == f_poly(n, i - 1, j)


def suite_monk(max_n, rng):
    for n in range(2, min(max_n, 5) + 1):
        ring = quotient_ring(full(n), 1)
        for w in all_permutations(n):
            for r in range(1, n):
                lhs = ring.normal_form(schubert_poly(w) * Poly.var(n, r))
                e = monk_expand(r, w)
                rhs = ring.normal_form(e.to_poly(n))
                yield f"monk {w} r={r}", lhs == rhs


def suite_kernels(max_n, rng):
    for h in _hs(1, min(max_n, 5)):
        for c in corners(h):
            if c.i == c.j:
                continue
            for s in range(1, p_of_h(h) + 1):
                yield f"kernel basis {h} {c} s={s}", check_kernel_basis(h, c, s).ok
            if h.n <= 4:
                for s in range(1, h.n + 1):
                    yield f"kernel seq {h} {c} s={s}", check_kernel_sequence(h, c, s).ok


def suite_relations(max_n, rng):
    for h in _hs(1, min(max_n, 4)):
        rs = derive_relations(h)
        yield f"oracle {h}", rs.solved_form == relation_oracle(h)
        if h.n <= 4:
            for chain in all_corner_chains(h):
                if derive_relations(h, chain).solved_form != rs.solved_form:
                    yield f"chain {h}", False
                    break
            else:
                yield f"chains {h}", True


def _table(rows):
    out = []
    for lead, rest in rows:
        out.append((Permutation.parse(lead),
                     SchubertExpr({Permutation.parse(w): Fraction(c) for w, c in rest.items()})))
    return out


EXAMPLE_3444 = [
    ("4321", {}), ("4312", {"3421": 1}), ("4231", {}),
    ("4213", {"3412": 1, "3241": 2, "2431": -1}), ("4132", {"3241": 1}),
    ("4123", {"3142": 1, "2341": -1}),
]
EXAMPLE_2444 = [
    ("4321", {}), ("4312", {}), ("4231", {}), ("3421", {}), ("4213", {}),
    ("4132", {"2431": "1/2"}), ("3412", {}), ("3241", {"2431": "1/2"}),
    ("4123", {"2413": "1/2"}), ("3214", {"2413": "1/2"}),
    ("3142", {"2413": "1/2", "2341": 1}), ("3124", {"2314": 1}),
]


def suite_example_tables(max_n, rng):
    if max_n < 4:
        return
    for text, table in (("3,4,4,4", EXAMPLE_3444), ("2,4,4,4", EXAMPLE_2444)):
        got = derive_relations(validate(text)).solved_form
        yield f"table {text}", set(got) == set(_table(table)) and len(got) == len(table)


def suite_question71(max_n, rng):
    for h in _hs(1, min(max_n, 4)):
        yield f"q71 {h}", question71_check(h)
    for n in range(2, min(max_n, 5) + 1):
        yield f"q71 peterson n={n}", question71_check(peterson(n))


# -- pairing ----------------------------------------------------------------------

def suite_pairing(max_n, rng):
    for h in _hs(1, min(max_n, 5)):
        pd = pairing_data(h)
        yield f"int beta {h}", pd.integrate(pd.beta) == 1
        if dimension(h) > 0:
            yield f"int 1 {h}", pd.integrate(pd.ring.normal_form(Poly.const(h.n, 1))) == 0
        if h.n <= 4:
            for d in range(dimension(h) + 1):
                yield f"duality {h} d={d}", pd.nonsingular(d)
    for n in range(1, min(max_n, 4) + 1):
        for w in all_permutations(n):
            yield f"flag {w}", hess_schubert_flag(w) == schubert_poly(w)
    for h in _hs(1, min(max_n, 6)):
        yield f"young {h}", young_order_brute(h) == young_order(h)


SUITES = [
    ("polycore.axioms", suite_poly_axioms),
    ("polycore.roundtrip", suite_poly_roundtrip),
    ("hessfn.combinatorics", suite_hessfn),
    ("gens.identities", suite_gens_identities),
    ("gens.membership", suite_gens_membership),
    ("quotient.hilbert", suite_hilbert),
    ("quotient.lemma_sequences", suite_lemma_sequences),
    ("quotient.poincare", suite_poincare),
    ("quotient.normal_form", suite_nf),
    ("quotient.filtration", suite_filtration),
    ("schubert.polynomials", suite_schubert_polys),
    ("schubert.monk", suite_monk),
    ("schubert.kernels", suite_kernels),
    ("schubert.relations", suite_relations),
    ("schubert.example_tables", suite_example_tables),
    ("schubert.question71", suite_question71),
    ("pairing", suite_pairing),
]


def run_suite(name, fn, max_n, seed=0) -> SuiteResult:
    res = SuiteResult(name)
    rng = random.Random(seed)
    t0 = time.perf_counter()
    try:
        for label, ok in fn(max_n, rng):
            if ok:
                res.passed += 1
            else:
                res.failed += 1
                res.failures.append(label)
    except Exception as exc:  # a crash counts as a failure of the suite
        res.failed += 1
        res.failures.append(f"error: {type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t0
    return res


def verify_all(max_n: int, seed: int = 0, only=None) -> VerifyReport:
    if max_n < 1:
        raise ValueError(f"max_n={max_n} must be at least 1")
    suites = [(n, f) for n, f in SUITES if only is None or n in only]
    return VerifyReport(max_n, [run_suite(n, f, max_n, seed) for n, f in suites])
