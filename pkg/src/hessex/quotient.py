"""Graded linear algebra over the quotient rings A_s^h.

Every ring here is Artinian and graded.  The degree-d slice of an ideal is
the span of ``m * g`` over generators ``g`` and monomials ``m`` of the
complementary degree; ranks and normal forms come from exact elimination
of these slices, one degree at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from . import linalg
from .gens import GeneratorList, f_poly, g_poly, generator_list, peeled_list
from .hessfn import HessFunc, p_of_h, r_s, shrink
from .polycore import Exps, Poly, monomials_of_degree


class ZeroRingError(ValueError):
    """Requested ring is the zero ring (s > p(h))."""


class BasisError(RuntimeError):
    """The expected monomial basis failed to be a complement of the ideal."""


# -- univariate series as coefficient lists ---------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def series_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def series_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def series_shift(a, k):
    return _trim([0] * k + list(a)) if a else []


def geometric(top: int):
    """``1 + t + ... + t^top``; zero for ``top < 0``."""
    return [1] * (top + 1) if top >= 0 else []


def series_text(c) -> str:
    if not c:
        return "0"
    parts = []
    for k, v in enumerate(c):
        if v == 0:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        a = abs(v)
        body = str(a) if not mono else (mono if a == 1 else f"{a}{mono}")
        if not parts:
            parts.append(("-" if v < 0 else "") + body)
        else:
            parts.append(("- " if v < 0 else "+ ") + body)
    return " ".join(parts)


# -- closed forms -------------------------------------------------------------

def _ranges(h: HessFunc, s: int) -> list[int]:
    return [h(m) - m - 1 if m < s else h(m) - m for m in range(1, h.n + 1)]


def monomial_basis(h: HessFunc, s: int) -> list[Exps]:
    """Monomials x^I with i_m <= h(m)-m-1 (m < s) and i_m <= h(m)-m (m >= s)."""
    if not 1 <= s <= p_of_h(h):
        raise ZeroRingError(f"A_{s}^h is the zero ring for h=({h}) since s > p(h)={p_of_h(h)}")
    tops = _ranges(h, s)
    basis = [tuple(e) for e in product(*(range(t + 1) for t in tops))]
    basis.sort(key=lambda e: (sum(e), e), reverse=True)
    return basis


def hilbert_closed(h: HessFunc, s: int):
    """Product formula for the Hilbert series of A_s^h (coefficient list)."""
    if not 1 <= s <= h.n + 1:
        raise ValueError(f"s={s} out of range 1..{h.n + 1}")
    out = [1]
    for top in _ranges(h, s):
        out = series_mul(out, geometric(top))
    return out


def poincare_product(h: HessFunc):
    """``prod_m (1 + t + ... + t^{h(m)-m})``."""
    out = [1]
    for m in range(1, h.n + 1):
        out = series_mul(out, geometric(h(m) - m))
    return out


@dataclass
class InductiveTerm:
    s: int
    r: int
    shrunk: HessFunc
    series: list  # F_{r_s}^{h^{(s)}}(t)

    @property
    def shifted(self):
        return series_shift(self.series, self.s - 1)


def poincare_inductive(h: HessFunc):
    """Sum over s <= p(h) of t^{s-1} F_{r_s}^{h^{(s)}}(t); returns (total, terms)."""
    terms = []
    total = []
    for s in range(1, p_of_h(h) + 1):
        hs = shrink(h, s)
        r = r_s(h, s)
        term = InductiveTerm(s, r, hs, hilbert_closed(hs, r))
        terms.append(term)
        total = series_add(total, term.shifted)
    return total, terms


# -- rank oracle ----------------------------------------------------------------

def _check_homogeneous(gens: Sequence[Poly]):
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator: {g}")


def _slice_rows(gens: Sequence[Poly], d: int, col_index: dict) -> list[dict[int, Fraction]]:
    rows = []
    for g in gens:
        if g.is_zero():
            continue
        dg = g.degree()
        if dg > d:
            continue
        terms = g.as_dict().items()
        for m in monomials_of_degree(g.nvars, d - dg):
            rows.append({col_index[tuple(a + b for a, b in zip(e, m))]: c for e, c in terms})
    return rows


def graded_slice_dim(gens: Sequence[Poly], d: int, nvars: int | None = None) -> int:
    """Rank of the degree-``d`` slice of the ideal generated by ``gens``."""
    _check_homogeneous(gens)
    if nvars is None:
        if not gens:
            raise ValueError("nvars required for an empty generator list")
        nvars = gens[0].nvars
    cols = monomials_of_degree(nvars, d)
    idx = {e: i for i, e in enumerate(cols)}
    return linalg.rank(_slice_rows(gens, d, idx), len(cols))


def quotient_slice_dim(gens: Sequence[Poly], d: int, nvars: int | None = None) -> int:
    if nvars is None:
        nvars = gens[0].nvars
    return len(monomials_of_degree(nvars, d)) - graded_slice_dim(gens, d, nvars)


def hilbert_oracle(gens: Sequence[Poly], upto: int, nvars: int | None = None):
    """Quotient dimensions in degrees ``0..upto`` (untrimmed list)."""
    if nvars is None:
        nvars = gens[0].nvars
    return [quotient_slice_dim(gens, d, nvars) for d in range(upto + 1)]


@dataclass
class RegularityReport:
    regular: bool
    expected: list
    observed: list  # degrees 0..top+1, the last entry is the guard degree
    guard_degree: int

    def __bool__(self):
        return self.regular


def is_regular_sequence(gens: Sequence[Poly]) -> RegularityReport:
    """Compare the rank-oracle Hilbert series with ``prod (1 + ... + t^{deg-1})``.

    Degrees up to the product's top degree must match, and one further guard
    degree must be zero-dimensional, so an infinite quotient cannot pass.
    """
    if not gens:
        raise ValueError("empty generator list")
    n = gens[0].nvars
    if len(gens) != n:
        raise ValueError(f"need exactly {n} generators in {n} variables, got {len(gens)}")
    _check_homogeneous(gens)
    for g in gens:
        if g.is_zero():
            raise ValueError("zero generator: not a regular sequence input")
        if g.degree() == 0:
            raise ZeroRingError("constant generator: zero ring, not a regular sequence input")
    expected = [1]
    for g in gens:
        expected = series_mul(expected, geometric(g.degree() - 1))
    top = len(expected) - 1
    observed = hilbert_oracle(gens, top + 1, n)
    ok = _trim(observed[: top + 1]) == expected and observed[top + 1] == 0
    return RegularityReport(ok, expected, observed, top + 1)


def in_ideal(p: Poly, gens: Sequence[Poly]) -> bool:
    """Membership of ``p`` in the homogeneous ideal ``<gens>``, slice by slice."""
    _check_homogeneous(gens)
    n = p.nvars
    for d, comp in p.components().items():
        cols = monomials_of_degree(n, d)
        idx = {e: i for i, e in enumerate(cols)}
        rows = _slice_rows(gens, d, idx)
        base = linalg.rank(rows, len(cols))
        extra = {idx[e]: c for e, c in comp.as_dict().items()}
        if linalg.rank(rows + [extra], len(cols)) != base:
            return False
    return True


def ideal_contains(big: Sequence[Poly], small: Sequence[Poly]) -> bool:
    """``<small>`` is contained in ``<big>``."""
    return all(in_ideal(g, big) for g in small)


# -- quotient rings -------------------------------------------------------------

class ClassVector:
    """Coordinates of a ring element over the ring's monomial basis."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: "QuotientRing", coords: dict):
        self.ring = ring
        self.coords = {e: Fraction(c) for e, c in coords.items() if c}

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other):
        if not isinstance(other, ClassVector):
            return NotImplemented
        return self.ring is other.ring and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def _combine(self, other, sign):
        if other.ring is not self.ring:
            raise ValueError("classes live in different rings")
        out = dict(self.coords)
        for e, c in other.coords.items():
            out[e] = out.get(e, 0) + sign * c
        return ClassVector(self.ring, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c) -> "ClassVector":
        return ClassVector(self.ring, {e: v * c for e, v in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, ClassVector):
            return self.ring.normal_form(self.lift() * other.lift())
        return self.scale(other)

    __rmul__ = __mul__

    def lift(self) -> Poly:
        """The representative ``sum c_I x^I`` in the polynomial ring."""
        return Poly(self.ring.n, self.coords)

    def component(self, d: int) -> "ClassVector":
        return ClassVector(self.ring, {e: c for e, c in self.coords.items() if sum(e) == d})

    def vector(self) -> list[Fraction]:
        return [self.coords.get(e, Fraction(0)) for e in self.ring.basis]

    def __repr__(self):
        return f"ClassVector({self.lift()})"


class QuotientRing:
    """A_s^h with its monomial basis and eager per-degree reduction data.

    Construction verifies, degree by degree, that the basis monomials are a
    complement of the ideal slice and that the slice one degree above the
    top is everything.  After construction the object is read-only.
    """

    def __init__(self, h: HessFunc, s: int):
        self.h = h
        self.s = s
        self.n = h.n
        self.basis = monomial_basis(h, s)
        self.gens: GeneratorList = generator_list(h, s)
        self.basis_index = {e: i for i, e in enumerate(self.basis)}
        self.top_degree = max(sum(e) for e in self.basis)
        self.slice_dims: list[int] = []
        self._reduce: dict[Exps, dict[Exps, Fraction]] = {}
        for d in range(self.top_degree + 1):
            self._build_degree(d)
        self._check_guard()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def series(self):
        return _trim(self.slice_dims)

    def basis_of_degree(self, d: int) -> list[Exps]:
        return [e for e in self.basis if sum(e) == d]

    def _build_degree(self, d: int):
        mons = monomials_of_degree(self.n, d)
        base = [e for e in mons if e in self.basis_index]
        rest = [e for e in mons if e not in self.basis_index]
        cols = rest + base
        idx = {e: i for i, e in enumerate(cols)}
        rows = _slice_rows(self.gens.polys, d, idx)
        ok, tail = linalg.rref_with_leading_block(rows, len(cols), len(rest))
        if not ok:
            raise BasisError(f"degree {d}: basis of A_{self.s}^({self.h}) is not a complement of the ideal")
        for e, entries in zip(rest, tail):
            self._reduce[e] = {cols[c]: -v for c, v in entries.items()}
        self.slice_dims.append(len(base))

    def _check_guard(self):
        d = self.top_degree + 1
        total = len(monomials_of_degree(self.n, d))
        if total and graded_slice_dim(self.gens.polys, d, self.n) != total:
            raise BasisError(f"degree {d} of A_{self.s}^({self.h}) is nonzero")

    def normal_form(self, p: Poly) -> ClassVector:
        if p.nvars != self.n:
            raise ValueError(f"polynomial has {p.nvars} variables, ring has {self.n}")
        out: dict[Exps, Fraction] = {}
        top = self.top_degree
        for e, c in p.as_dict().items():
            if sum(e) > top:
                continue
            if e in self.basis_index:
                out[e] = out.get(e, 0) + c
            else:
                for b, v in self._reduce[e].items():
                    out[b] = out.get(b, 0) + c * v
        return ClassVector(self, out)

    def element(self, coords: dict) -> ClassVector:
        bad = [e for e in coords if e not in self.basis_index]
        if bad:
            raise ValueError(f"{bad[0]} is not a basis monomial")
        return ClassVector(self, coords)

    def __repr__(self):
        return f"QuotientRing(h=({self.h}), s={self.s}, dim={self.dim})"


@lru_cache(maxsize=None)
def quotient_ring(h: HessFunc, s: int = 1) -> QuotientRing:
    """Cached constructor; rings are immutable once built."""
    return QuotientRing(h, s)


def normal_form(p: Poly, ring: QuotientRing) -> ClassVector:
    return ring.normal_form(p)


def ring_dim(h: HessFunc, s: int) -> int:
    """``dim A_s^h``, zero for the degenerate range ``s > p(h)``."""
    if s > p_of_h(h):
        return 0
    return quotient_ring(h, s).dim


def rank_of_classes(classes: Sequence[ClassVector]) -> int:
    if not classes:
        return 0
    ring = classes[0].ring
    rows = [{ring.basis_index[e]: c for e, c in cv.coords.items()} for cv in classes]
    return linalg.rank(rows, ring.dim)


# -- the filtration and the quotient isomorphism ----------------------------------

@dataclass
class FiltrationStep:
    s: int
    dim_s: int
    dim_next: int
    dim_quotient: int  # dim A_{r_s}^{h^(s)}
    map_rank: int

    @property
    def injective(self) -> bool:
        return self.map_rank == self.dim_next

    @property
    def exact(self) -> bool:
        return self.dim_s == self.dim_next + self.dim_quotient

    @property
    def ok(self) -> bool:
        return self.injective and self.exact


@dataclass
class FiltrationReport:
    h: HessFunc
    steps: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(st.ok for st in self.steps)


def filtration_check(h: HessFunc) -> FiltrationReport:
    """Check injectivity of x_s: A_{s+1} -> A_s and the dimension identity."""
    report = FiltrationReport(h)
    p = p_of_h(h)
    for s in range(1, p + 1):
        ring = quotient_ring(h, s)
        if s < p:
            nxt = quotient_ring(h, s + 1)
            xs = Poly.var(h.n, s)
            images = [ring.normal_form(xs * Poly.monomial(b)) for b in nxt.basis]
            rk = rank_of_classes(images)
            dim_next = nxt.dim
        else:
            rk, dim_next = 0, 0
        target = quotient_ring(shrink(h, s), r_s(h, s))
        report.steps.append(FiltrationStep(s, ring.dim, dim_next, target.dim, rk))
    return report


def phi(p: Poly, s: int) -> Poly:
    """x_m -> y_m (m < s), x_s -> 0, x_m -> y_{m-1} (m > s)."""
    n = p.nvars
    mapping = {m: (m if m < s else m - 1) for m in range(1, n + 1) if m != s}
    return p.substitute_zero(s).rename_vars(mapping, n - 1)


@dataclass
class IsoReport:
    h: HessFunc
    s: int
    source_series: list
    target_series: list
    target_closed: list
    generators: list  # (label, image text, matches expected generator or None, reduces to zero)

    @property
    def series_ok(self) -> bool:
        return self.source_series == self.target_series == self.target_closed

    @property
    def generators_ok(self) -> bool:
        return all(z and exact is not False for _, _, exact, z in self.generators)

    @property
    def ok(self) -> bool:
        return self.series_ok and self.generators_ok


def _expected_image(h: HessFunc, s: int, m: int):
    # images promised by the generator correspondence; None when only
    # ideal membership is claimed (m = s)
    hs = shrink(h, s)
    r = r_s(h, s)
    n1 = h.n - 1
    if m < r:
        return g_poly(n1, hs(m), m)
    if m < s:
        return f_poly(n1, hs(m), m)
    if m > s:
        return f_poly(n1, hs(m - 1), m - 1)
    return None


def iso_check(h: HessFunc, s: int) -> IsoReport:
    """Verify A_s^h/<x_s> is isomorphic to A_{r_s}^{h^(s)} via ``phi``."""
    p = p_of_h(h)
    if not 1 <= s <= p:
        raise ZeroRingError(f"s={s} outside 1..p(h)={p}")
    n = h.n
    gl = generator_list(h, s)
    hs, r = shrink(h, s), r_s(h, s)
    target = quotient_ring(hs, r)
    src_gens = list(gl.polys) + [Poly.var(n, s)]
    top = max(len(target.series()), 1)
    src = _trim(hilbert_oracle(src_gens, top, n))
    if n - 1 == 0:
        tgt = [1]
    else:
        tgt = _trim(hilbert_oracle(list(target.gens.polys), top, n - 1))
    rows = []
    for m, (label, g) in enumerate(zip(gl.labels(), gl.polys), start=1):
        img = phi(g, s)
        expected = _expected_image(h, s, m)
        exact = None if expected is None else (img == expected)
        rows.append((label, str(img), exact, target.normal_form(img).is_zero()))
    return IsoReport(h, s, src, tgt, hilbert_closed(hs, r), rows)


# -- supporting identities ---------------------------------------------------------

def lemma_sequences(h: HessFunc) -> list[tuple[str, list[Poly]]]:
    """The generator sequences claimed regular for ``h``.

    ``x_j g`` variants for 1 <= j <= p(h) and the g/f lists for 0 <= j < p(h).
    """
    p = p_of_h(h)
    out = []
    for j in range(1, p + 1):
        out.append((f"peeled j={j}", peeled_list(h, j)))
    for j in range(0, p):
        out.append((f"replaced j={j}", list(generator_list(h, j + 1).polys)))
    return out


@dataclass
class PeelReport:
    ell: int
    ring_dim: int
    source_dim: int
    image_rank: int
    next_dim: int
    lands_in_kernel: bool

    @property
    def ok(self) -> bool:
        return (
            self.image_rank == self.source_dim
            and self.lands_in_kernel
            and self.source_dim + self.next_dim == self.ring_dim
        )


def peel_check(h: HessFunc, ell: int) -> PeelReport:
    """Multiplication by g_{h(l),l}: A_l/<x_l> -> A_l is injective onto ker(A_l -> A_{l+1})."""
    ring = quotient_ring(h, ell)
    g = g_poly(h.n, h(ell), ell)
    src = [b for b in ring.basis if b[ell - 1] == 0]
    images = [ring.normal_form(g.mul_monomial(b)) for b in src]
    rk = rank_of_classes(images)
    if ell + 1 <= p_of_h(h):
        nxt = quotient_ring(h, ell + 1)
        in_kernel = all(nxt.normal_form(g.mul_monomial(b)).is_zero() for b in src)
        nd = nxt.dim
    else:
        in_kernel, nd = True, 0
    return PeelReport(ell, ring.dim, len(src), rk, nd, in_kernel)
