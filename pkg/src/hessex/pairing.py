"""Top class, integration and the Poincare pairing on A_1^h."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import linalg
from .hessfn import HessFunc, breakpoints, dimension, full, young_order
from .polycore import Exps, Poly, linear_form
from .quotient import ClassVector, QuotientRing, quotient_ring
from .schubert import Permutation, schubert_poly


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class YoungSubgroupSpec:
    breakpoints: tuple[int, ...]
    order: int

    def blocks(self) -> list[range]:
        out, prev = [], 0
        for k in self.breakpoints:
            out.append(range(prev + 1, k + 1))
            prev = k
        return out


def young_subgroup(h: HessFunc) -> YoungSubgroupSpec:
    return YoungSubgroupSpec(tuple(breakpoints(h)), young_order(h))


def young_order_brute(h: HessFunc) -> int:
    """Count permutations of [n] mapping each block to itself."""
    blocks = young_subgroup(h).blocks()
    where = {v: b for b, blk in enumerate(blocks) for v in blk}
    return sum(
        1 for w in permutations(range(1, h.n + 1))
        if all(where[w[m - 1]] == where[m] for m in range(1, h.n + 1))
    )


def beta(h: HessFunc) -> Poly:
    """``(1/|S_h|) prod_{j<n} prod_{j<i<=h(j)} (x_j - x_i)``."""
    n = h.n
    p = Poly.const(n, Fraction(1, young_order(h)))
    for j in range(1, n):
        for i in range(j + 1, h(j) + 1):
            p = p * linear_form(n, {j: 1, i: -1})
    return p


@dataclass
class PairingData:
    ring: QuotientRing
    beta: ClassVector
    top: Exps  # the single basis monomial of top degree
    gram: dict = field(default_factory=dict)  # degree -> matrix (list of rows)

    @property
    def h(self) -> HessFunc:
        return self.ring.h

    def integrate(self, c: ClassVector) -> Fraction:
        if c.ring is not self.ring:
            raise PairingError("class lives in a different ring")
        return c.coords.get(self.top, Fraction(0)) / self.beta.coords[self.top]

    def pair(self, a: ClassVector, b: ClassVector) -> Fraction:
        return self.integrate(a * b)

    def matrix(self, d: int) -> list[list[Fraction]]:
        top_deg = dimension(self.h)
        if not 0 <= d <= top_deg:
            raise PairingError(f"degree d={d} outside 0..{top_deg}")
        if d not in self.gram:
            rows = self.ring.basis_of_degree(d)
            cols = self.ring.basis_of_degree(top_deg - d)
            self.gram[d] = [
                [self.integrate(self.ring.normal_form(Poly.monomial(tuple(x + y for x, y in zip(a, b)))))
                 for b in cols]
                for a in rows
            ]
        return self.gram[d]

    def nonsingular(self, d: int) -> bool:
        M = self.matrix(d)
        if len(M) != len(M[0] if M else []):
            return False
        rows = [{c: v for c, v in enumerate(r) if v} for r in M]
        return linalg.rank(rows, len(M)) == len(M)


@lru_cache(maxsize=None)
def pairing_data(h: HessFunc) -> PairingData:
    ring = quotient_ring(h, 1)
    b = ring.normal_form(beta(h))
    tops = ring.basis_of_degree(dimension(h))
    if len(tops) != 1:
        raise PairingError(f"top degree of A_1^({h}) is {len(tops)}-dimensional")
    if b.is_zero():
        raise PairingError(f"beta_h vanishes in A_1^({h})")
    return PairingData(ring, b, tops[0])


def integrate(c: ClassVector) -> Fraction:
    return pairing_data(c.ring.h).integrate(c)


def pairing_matrix(h: HessFunc, d: int) -> list[list[Fraction]]:
    return pairing_data(h).matrix(d)


def expand_class(c: ClassVector) -> dict[Exps, Fraction]:
    """Coordinates over the monomial basis."""
    return dict(c.coords)


def hess_schubert_flag(w: Permutation, h: HessFunc | None = None) -> Poly:
    """Monomial-basis lift of the class of sigma_w; flag case only."""
    n = w.n
    if h is not None and h != full(n):
        raise PairingError(
            f"Hessenberg Schubert classes for h=({h}) are not determined by presentation; "
            "only the flag case h=(n,...,n) is supported"
        )
    ring = quotient_ring(full(n), 1)
    return ring.normal_form(schubert_poly(w)).lift()

