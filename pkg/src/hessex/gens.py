"""The triangular families f_{i,j}, g_{i,j} and the generator lists of A_s^h."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hessfn import HessError, HessFunc
from .polycore import Poly, linear_form


def _check(n: int, i: int, j: int, allow_zero_col: bool = False):
    lo = 0 if allow_zero_col else 1
    if not (lo <= j <= i <= n):
        raise HessError(f"need {lo} <= j <= i <= n, got i={i}, j={j}, n={n}")


@lru_cache(maxsize=None)
def _prod_block(n: int, i: int, j: int, k: int) -> Poly:
    # prod_{l=j+1}^{i} (x_k - x_l); empty product is 1
    p = Poly.const(n, 1)
    for l in range(j + 1, i + 1):
        p = p * linear_form(n, {k: 1, l: -1})
    return p


@lru_cache(maxsize=None)
def g_poly(n: int, i: int, j: int) -> Poly:
    """``sum_{k<=j} prod_{l=j+1}^{i} (x_k - x_l)``; ``g_{i,0} = 0``."""
    _check(n, i, j, allow_zero_col=True)
    total = Poly.zero(n)
    for k in range(1, j + 1):
        total = total + _prod_block(n, i, j, k)
    return total


@lru_cache(maxsize=None)
def f_poly(n: int, i: int, j: int) -> Poly:
    """``sum_{k<=j} prod_{l=j+1}^{i} (x_k - x_l) * x_k``; ``f_{i,0} = 0``."""
    _check(n, i, j, allow_zero_col=True)
    total = Poly.zero(n)
    for k in range(1, j + 1):
        total = total + _prod_block(n, i, j, k) * Poly.var(n, k)
    return total


@dataclass(frozen=True)
class GeneratorList:
    h: HessFunc
    s: int
    polys: tuple[Poly, ...]

    def degrees(self) -> list[int]:
        """Expected degree of each entry (a constant entry has degree 0)."""
        return [
            self.h(m) - m if m < self.s else self.h(m) - m + 1
            for m in range(1, self.h.n + 1)
        ]

    def labels(self) -> list[str]:
        return [
            f"{'g' if m < self.s else 'f'}_{{{self.h(m)},{m}}}"
            for m in range(1, self.h.n + 1)
        ]

    def has_constant(self) -> bool:
        return any(p.is_constant() and not p.is_zero() for p in self.polys)


def generator_list(h: HessFunc, s: int) -> GeneratorList:
    """g_{h(m),m} for m < s followed by f_{h(m),m} for m >= s."""
    n = h.n
    if not 1 <= s <= n + 1:
        raise HessError(f"s={s} out of range 1..{n + 1}")
    polys = tuple(
        g_poly(n, h(m), m) if m < s else f_poly(n, h(m), m) for m in range(1, n + 1)
    )
    return GeneratorList(h, s, polys)


def peeled_list(h: HessFunc, j: int) -> list[Poly]:
    """g_{h(m),m} for m < j, then x_j * g_{h(j),j}, then f_{h(m),m} for m > j."""
    n = h.n
    if not 1 <= j <= n:
        raise HessError(f"j={j} out of range 1..{n}")
    out = [g_poly(n, h(m), m) for m in range(1, j)]
    out.append(Poly.var(n, j) * g_poly(n, h(j), j))
    out.extend(f_poly(n, h(m), m) for m in range(j + 1, n + 1))
    return out
