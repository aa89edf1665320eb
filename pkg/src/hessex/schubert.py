"""Permutations, Schubert polynomials, Monk's rule, and relations among
Schubert classes in the Hessenberg cohomology rings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Mapping

from . import linalg
from .gens import f_poly, g_poly, generator_list
from .hessfn import (Corner, HessError, HessFunc, corner_chain, corners, dimension,
                     p_of_h, remove_corner)
from .polycore import Exps, Poly
from .quotient import (ClassVector, QuotientRing, graded_slice_dim, ideal_contains,
                       quotient_ring, rank_of_classes, ring_dim)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(v) for v in self.one_line))
        if sorted(self.one_line) != list(range(1, len(self.one_line) + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{len(self.one_line)}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(tuple(int(v) for v in text.split(",")))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def length(self) -> int:
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def swap_positions(self, a: int, b: int) -> "Permutation":
        w = list(self.one_line)
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
        return Permutation(tuple(w))

    def times_s(self, r: int) -> "Permutation":
        """Right multiplication by s_r (swap positions r, r+1)."""
        return self.swap_positions(r, r + 1)

    def ascents(self) -> list[int]:
        return [r for r in range(1, self.n) if self(r) < self(r + 1)]

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))

    def __repr__(self):
        return f"Permutation({self})"


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def from_reduced_word(word: Iterable[int], n: int) -> Permutation:
    """``s_{a1} s_{a2} ... s_{am}`` as a permutation in S_n."""
    w = Permutation.identity(n)
    for r in word:
        if not 1 <= r < n:
            raise ValueError(f"s_{r} is not a simple transposition of S_{n}")
        w = w.times_s(r)
    return w


def leading_key(w: Permutation):
    """Sort key for solved forms: length descending, then one-line descending."""
    return (-w.length(), tuple(-v for v in w.one_line))


# -- Schubert polynomials ----------------------------------------------------------

def staircase(n: int) -> Poly:
    return Poly.monomial(tuple(n - m for m in range(1, n + 1)))


@lru_cache(maxsize=None)
def schubert_poly(w: Permutation) -> Poly:
    """Descending divided differences from x1^{n-1} x2^{n-2} ... x_{n-1}."""
    n = w.n
    asc = w.ascents()
    if not asc:
        return staircase(n)
    r = asc[0]
    return schubert_poly(w.times_s(r)).divided_difference(r)


def schubert_poly_via(w: Permutation, choose) -> Poly:
    """Same recursion, picking the ascent with ``choose(ascents)`` each step."""
    asc = w.ascents()
    if not asc:
        return staircase(w.n)
    r = choose(asc)
    return schubert_poly_via(w.times_s(r), choose).divided_difference(r)


class SchubertExpr:
    """A finite combination ``sum c_w sigma_w``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Permutation, "Fraction | int"] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Permutation, Fraction] = {}
        for w, c in items:
            acc[w] = acc.get(w, 0) + Fraction(c)
        self.terms = {w: c for w, c in acc.items() if c}

    def __add__(self, other):
        return SchubertExpr(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SchubertExpr":
        return SchubertExpr({w: v * c for w, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SchubertExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Permutation, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: leading_key(t[0]))

    def to_poly(self, n: int | None = None) -> Poly:
        if not self.terms:
            if n is None:
                raise ValueError("n required for an empty expression")
            return Poly.zero(n)
        total = None
        for w, c in self.terms.items():
            t = schubert_poly(w) * c
            total = t if total is None else total + t
        return total

    def __str__(self):
        return format_expr(self.sorted_terms())

    def __repr__(self):
        return f"SchubertExpr({self})"

    def to_json(self) -> list:
        return [{"w": str(w), "c": str(c)} for w, c in self.sorted_terms()]


def format_expr(terms, symbol: str = "S") -> str:
    if not terms:
        return "0"
    parts = []
    for k, (w, c) in enumerate(terms):
        a = abs(c)
        body = f"{symbol}[{w}]" if a == 1 else f"{a}*{symbol}[{w}]"
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def build_w_k(i: int, j: int, k: int, n: int) -> Permutation:
    """Fixes [n] minus [j, i]; w(j) = i-k+1, w(i) = i-k, increasing in between."""
    if not (1 <= j < i <= n and 1 <= k <= i - j):
        raise ValueError(f"need 1 <= j < i <= n and 1 <= k <= i-j, got i={i}, j={j}, k={k}, n={n}")
    w = list(range(1, n + 1))
    middle = [v for v in range(j, i + 1) if v not in (i - k, i - k + 1)]
    w[j - 1] = i - k + 1
    w[i - 1] = i - k
    w[j:i - 1] = middle
    return Permutation(tuple(w))


def w_k_word(i: int, j: int, k: int) -> list[int]:
    """Word (s_{i-k} ... s_j)(s_{i-k+1} ... s_{i-1}); second factor empty for k = 1."""
    return list(range(i - k, j - 1, -1)) + list(range(i - k + 1, i))


def alt_decomposition(i: int, j: int, n: int) -> SchubertExpr:
    """Signed Schubert expansion of f_{i-1,j}."""
    if not 1 <= j < i <= n:
        raise ValueError(f"need 1 <= j < i <= n, got i={i}, j={j}, n={n}")
    return SchubertExpr({build_w_k(i, j, k, n): (-1) ** (k - 1) for k in range(1, i - j + 1)})


def monk_expand(r: int, w: Permutation) -> SchubertExpr:
    """``x_r * sigma_w`` in the cohomology of Flag(C^n).

    Interchanges are restricted to positions in ``[n]``; the extra terms of
    the stable rule leave S_n and vanish in this ring.
    """
    n = w.n
    if not 1 <= r <= n - 1:
        raise ValueError(f"r={r} out of range 1..{n - 1}")
    out: dict[Permutation, int] = {}
    wr = w(r)
    for q in range(r + 1, n + 1):
        wq = w(q)
        if wr < wq and not any(wr < w(t) < wq for t in range(r + 1, q)):
            out[w.swap_positions(r, q)] = out.get(w.swap_positions(r, q), 0) + 1
    for p in range(1, r):
        wp = w(p)
        if wp < wr and not any(wp < w(t) < wr for t in range(p + 1, r)):
            key = w.swap_positions(p, r)
            out[key] = out.get(key, 0) - 1
    return SchubertExpr(out)


def multiply_by_variable(expr: SchubertExpr, r: int) -> SchubertExpr:
    acc: dict[Permutation, Fraction] = {}
    for w, c in expr.terms.items():
        for v, d in monk_expand(r, w).terms.items():
            acc[v] = acc.get(v, 0) + c * d
    return SchubertExpr(acc)


def multiply_by_monomial(expr: SchubertExpr, exps: Exps) -> SchubertExpr:
    """Apply Monk one variable at a time, x1 first, each exponent times."""
    for r, e in enumerate(exps, start=1):
        for _ in range(e):
            expr = multiply_by_variable(expr, r)
    return expr


# -- kernels of restriction maps -------------------------------------------------------

def kernel_monomials(h: HessFunc, c: Corner, s: int) -> list[Exps]:
    """Monomial multipliers of the kernel basis of A_s^h -> A_s^{h'}."""
    if c not in corners(h) or c.i == c.j:
        raise HessError(f"{c} is not a removable corner of h=({h})")
    if not 1 <= s <= p_of_h(h):
        raise HessError(f"s={s} outside 1..p(h)={p_of_h(h)}")
    tops = []
    for m in range(1, h.n + 1):
        if m == c.j:
            tops.append(0)
        elif m < s:
            tops.append(h(m) - m - 1)
        else:
            tops.append(h(m) - m)
    mons = [tuple(e) for e in product(*(range(t + 1) for t in tops))]
    mons.sort(key=lambda e: (sum(e), e), reverse=True)
    return mons


def kernel_factor(h: HessFunc, c: Corner, s: int) -> Poly:
    return g_poly(h.n, c.i - 1, c.j) if c.j + 1 <= s else f_poly(h.n, c.i - 1, c.j)


def kernel_basis(h: HessFunc, c: Corner, s: int = 1) -> list[Poly]:
    """Basis of ker(A_s^h -> A_s^{h'}) where h' drops the corner ``c``."""
    factor = kernel_factor(h, c, s)
    return [factor.mul_monomial(e) for e in kernel_monomials(h, c, s)]


@dataclass
class KernelReport:
    h: HessFunc
    corner: Corner
    s: int
    size: int
    expected_size: int  # dim A_s^h - dim A_s^{h'}
    vanish: bool
    independent: bool

    @property
    def ok(self) -> bool:
        return self.vanish and self.independent and self.size == self.expected_size


def check_kernel_basis(h: HessFunc, c: Corner, s: int = 1) -> KernelReport:
    hp = remove_corner(h, c)
    basis = kernel_basis(h, c, s)
    ring = quotient_ring(h, s)
    if s <= p_of_h(hp):
        small = quotient_ring(hp, s)
        vanish = all(small.normal_form(b).is_zero() for b in basis)
    else:
        vanish = True  # target is the zero ring
    independent = rank_of_classes([ring.normal_form(b) for b in basis]) == len(basis)
    return KernelReport(h, c, s, len(basis), ring.dim - ring_dim(hp, s), vanish, independent)


@dataclass
class KernelSequenceReport:
    h: HessFunc
    corner: Corner
    s: int
    well_defined: bool  # I_h is contained in I_h' at levels s and s+1
    ker_s: int
    ker_next: int
    ker_bar: int

    @property
    def ok(self) -> bool:
        return self.well_defined and self.ker_s == self.ker_next + self.ker_bar


def _kernel_dim(small: list[Poly], big: list[Poly], top: int, n: int) -> int:
    # ker(R/<small> -> R/<big>) = <big>/<small>, counted slice by slice
    return sum(graded_slice_dim(big, d, n) - graded_slice_dim(small, d, n) for d in range(top + 1))


def check_kernel_sequence(h: HessFunc, c: Corner, s: int) -> KernelSequenceReport:
    """0 -> ker(phi_{s+1}) -> ker(phi_s) -> ker(phi_s bar) -> 0, by dimension count."""
    n = h.n
    if not 1 <= s <= n:
        raise HessError(f"s={s} out of range 1..{n}")
    hp = remove_corner(h, c)
    top = dimension(h) + 1
    xs = Poly.var(n, s)
    lo, hi = list(generator_list(h, s).polys), list(generator_list(hp, s).polys)
    lo2, hi2 = list(generator_list(h, s + 1).polys), list(generator_list(hp, s + 1).polys)
    ok = ideal_contains(hi, lo) and ideal_contains(hi2, lo2)
    return KernelSequenceReport(
        h, c, s, ok,
        _kernel_dim(lo, hi, top, n),
        _kernel_dim(lo2, hi2, top, n),
        _kernel_dim(lo + [xs], hi + [xs], top, n),
    )


# -- relations among Schubert classes -----------------------------------------------------

@dataclass
class RelationStep:
    h_from: HessFunc
    corner: Corner
    h_to: HessFunc
    relations: list  # SchubertExpr objects produced at this step


@dataclass
class RelationSet:
    h: HessFunc
    ring: QuotientRing
    relations: list  # raw relations, one per kernel basis element
    solved_form: list  # (leading Permutation, SchubertExpr remainder)
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.solved_form)

    def as_exprs(self) -> list[SchubertExpr]:
        """Each solved row as ``sigma_lead - remainder``."""
        return [SchubertExpr({lead: 1}) - rest for lead, rest in self.solved_form]

    def lines(self, symbol: str = "S") -> list[str]:
        return [f"{symbol}[{lead}] = {format_expr(rest.sorted_terms(), symbol)}"
                for lead, rest in self.solved_form]

    def to_json(self) -> dict:
        return {
            "h": list(self.h.values),
            "count": len(self.solved_form),
            "relations": [
                {"lead": str(lead), "equals": rest.to_json()} for lead, rest in self.solved_form
            ],
        }


def solved_form(exprs: Iterable[SchubertExpr], n: int) -> list[tuple[Permutation, SchubertExpr]]:
    """Reduced row echelon form with columns in :func:`leading_key` order."""
    cols = sorted(all_permutations(n), key=leading_key)
    idx = {w: k for k, w in enumerate(cols)}
    rows = [{idx[w]: c for w, c in e.terms.items()} for e in exprs if not e.is_zero()]
    out = []
    for pivot, row in linalg.rref(rows, len(cols)):
        rest = SchubertExpr({cols[c]: -v for c, v in row.items() if c != pivot})
        out.append((cols[pivot], rest))
    return out


def schubert_class_matrix(ring: QuotientRing, perms) -> list[ClassVector]:
    return [ring.normal_form(schubert_poly(w)) for w in perms]


def expr_class(expr: SchubertExpr, ring: QuotientRing) -> ClassVector:
    return ring.normal_form(expr.to_poly(ring.n))


def derive_relations(h: HessFunc, chain=None) -> RelationSet:
    """Relations among the images of Schubert classes in A_1^h.

    Walks a corner-removal chain from the flag case to ``h``; at each step
    the kernel generators monomial * f_{i-1,j} are expanded in Schubert
    classes through the alternating decomposition and Monk's rule.
    """
    n = h.n
    if chain is None:
        chain = corner_chain(h)
    all_rel: list[SchubertExpr] = []
    steps = []
    cols = sorted(all_permutations(n), key=leading_key)
    idx = {w: k for k, w in enumerate(cols)}
    for h_from, c in chain:
        base = alt_decomposition(c.i, c.j, n)
        step_rel = []
        for e in kernel_monomials(h_from, c, 1):
            rel = multiply_by_monomial(base, e)
            step_rel.append(rel)
        before = linalg.rank([{idx[w]: v for w, v in r.terms.items()} for r in all_rel], len(cols))
        all_rel.extend(step_rel)
        after = linalg.rank([{idx[w]: v for w, v in r.terms.items()} for r in all_rel], len(cols))
        if after - before != len(step_rel):
            raise RuntimeError(f"relations from corner {c} of ({h_from}) are not independent of earlier ones")
        steps.append(RelationStep(h_from, c, remove_corner(h_from, c), step_rel))
    ring = quotient_ring(h, 1)
    solved = solved_form(all_rel, n)
    rs = RelationSet(h, ring, all_rel, solved, steps)
    for expr in rs.as_exprs():
        if not expr_class(expr, ring).is_zero():
            raise RuntimeError(f"derived relation {expr} does not vanish in A_1^({h})")
    return rs


def relation_oracle(h: HessFunc) -> list[tuple[Permutation, SchubertExpr]]:
    """Solved form of ker(span{sigma_w} -> A_1^h) computed directly by rank."""
    n = h.n
    ring = quotient_ring(h, 1)
    cols = sorted(all_permutations(n), key=leading_key)
    classes = schubert_class_matrix(ring, cols)
    # rows: basis coordinates; columns: permutations
    rows = []
    for b in ring.basis:
        rows.append({k: cv.coords[b] for k, cv in enumerate(classes) if b in cv.coords})
    kernel = linalg.nullspace(rows, len(cols))
    exprs = [SchubertExpr({cols[k]: v for k, v in vec.items()}) for vec in kernel]
    return solved_form(exprs, n)


def question71_set(h: HessFunc) -> list[Permutation]:
    return [w for w in all_permutations(h.n) if all(w(m) <= h(m) for m in range(1, h.n + 1))]


def question71_check(h: HessFunc) -> bool:
    """Do the classes of sigma_w with w(m) <= h(m) form a basis of A_1^h?"""
    ring = quotient_ring(h, 1)
    perms = question71_set(h)
    if len(perms) != ring.dim:
        return False
    return rank_of_classes(schubert_class_matrix(ring, perms)) == ring.dim
