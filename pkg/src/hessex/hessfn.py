"""Hessenberg functions and their diagram combinatorics (1-indexed)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable


class HessError(ValueError):
    """Invalid Hessenberg function or corner."""


@dataclass(frozen=True, order=True)
class Corner:
    i: int  # row
    j: int  # column

    def __str__(self):
        return f"({self.i},{self.j})"


@dataclass(frozen=True)
class HessFunc:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        n = len(self.values)
        for idx, v in enumerate(self.values, start=1):
            if v > n:
                raise HessError(f"h({idx})={v} exceeds n={n}")
            if v < idx:
                raise HessError(f"h({idx})={v} violates h(i) >= i")
            if idx > 1 and v < self.values[idx - 2]:
                raise HessError(f"non-monotone: h({idx - 1})={self.values[idx - 2]} > h({idx})={v}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, m: int) -> int:
        if not 1 <= m <= self.n:
            raise HessError(f"index {m} out of range 1..{self.n}")
        return self.values[m - 1]

    def __str__(self):
        return ",".join(map(str, self.values))

    def __repr__(self):
        return f"HessFunc({self.values})"

    def to_json(self) -> dict:
        return {"n": self.n, "h": list(self.values)}

    @classmethod
    def from_json(cls, obj) -> "HessFunc":
        h = cls(tuple(obj["h"]))
        if "n" in obj and int(obj["n"]) != h.n:
            raise HessError(f"n={obj['n']} does not match {len(h.values)} values")
        return h

    def contains(self, other: "HessFunc") -> bool:
        """True when ``other`` is contained in ``self`` (other(i) <= self(i))."""
        return other.n == self.n and all(a <= b for a, b in zip(other.values, self.values))

    def boxes(self) -> int:
        """Stars strictly below the diagonal."""
        return sum(v - i for i, v in enumerate(self.values, start=1))


def validate(values: Iterable[int] | str) -> HessFunc:
    """Build a :class:`HessFunc` from a sequence or a comma-separated string."""
    if isinstance(values, str):
        text = values.strip()
        try:
            values = [int(v) for v in text.split(",")] if text else []
        except ValueError as exc:
            raise HessError(f"cannot parse Hessenberg function {text!r}") from exc
    return HessFunc(tuple(values))


def full(n: int) -> HessFunc:
    """The flag case ``(n, ..., n)``."""
    return HessFunc((n,) * n)


def identity(n: int) -> HessFunc:
    """The Springer case ``(1, 2, ..., n)``."""
    return HessFunc(tuple(range(1, n + 1)))


def peterson(n: int) -> HessFunc:
    return HessFunc(tuple(min(i + 1, n) for i in range(1, n + 1)))


def r_s(h: HessFunc, s: int) -> int:
    """Smallest ``m`` with ``h(m) >= s``."""
    if not 1 <= s <= h.n:
        raise HessError(f"s={s} out of range 1..{h.n}")
    for m, v in enumerate(h.values, start=1):
        if v >= s:
            return m
    raise AssertionError("unreachable: h(n) = n >= s")


def p_of_h(h: HessFunc) -> int:
    """First ``m`` with ``h(m) = m``.

    The empty function (n = 0) gets 1, so that its ring A_1 is the ground field.
    """
    for m, v in enumerate(h.values, start=1):
        if v == m:
            return m
    return 1


def shrink(h: HessFunc, s: int) -> HessFunc:
    """Delete row and column ``s`` of the diagram; a function on ``[n-1]``."""
    r = r_s(h, s)
    out = []
    for m in range(1, h.n):
        if m <= r - 1:
            out.append(h(m))
        elif m <= s - 1:
            out.append(h(m) - 1)
        else:
            out.append(h(m + 1) - 1)
    return HessFunc(tuple(out))


def corners(h: HessFunc) -> list[Corner]:
    out = []
    for j in range(1, h.n + 1):
        if j == 1 or h(j - 1) < h(j):
            out.append(Corner(h(j), j))
    return out


def remove_corner(h: HessFunc, c: Corner) -> HessFunc:
    if c not in corners(h):
        raise HessError(f"{c} is not a corner of h=({h})")
    if c.i == c.j:
        raise HessError(f"corner {c} lies on the diagonal and cannot be removed")
    vals = list(h.values)
    vals[c.j - 1] -= 1
    return HessFunc(tuple(vals))


def dimension(h: HessFunc) -> int:
    """``sum_j (h(j) - j)``: top degree of the cohomology ring."""
    return sum(v - j for j, v in enumerate(h.values, start=1))


def breakpoints(h: HessFunc) -> list[int]:
    return [m for m, v in enumerate(h.values, start=1) if v == m]


def young_order(h: HessFunc) -> int:
    """Order of the Young subgroup cut out by the diagonal hits of ``h``."""
    order, prev = 1, 0
    for k in breakpoints(h):
        order *= factorial(k - prev)
        prev = k
    return order


@lru_cache(maxsize=None)
def _all(n: int) -> tuple[HessFunc, ...]:
    out = []

    def rec(prefix):
        m = len(prefix) + 1
        if m > n:
            out.append(HessFunc(tuple(prefix)))
            return
        lo = max(m, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            rec(prefix + [v])

    rec([])
    return tuple(out)


def all_hessenberg(n: int) -> list[HessFunc]:
    """Every Hessenberg function on ``[n]`` in lexicographic order."""
    return list(_all(n))


def corner_chain(h: HessFunc) -> list[tuple[HessFunc, Corner]]:
    """Corner removals leading from ``(n, ..., n)`` down to ``h``.

    Each step removes the corner in the smallest column where the current
    function still exceeds ``h``.  Returns ``(h_k, corner)`` pairs; removing
    ``corner`` from ``h_k`` yields ``h_{k+1}``.
    """
    cur = full(h.n)
    steps = []
    while cur != h:
        j = next(j for j in range(1, h.n + 1) if cur(j) > h(j))
        c = Corner(cur(j), j)
        steps.append((cur, c))
        cur = remove_corner(cur, c)
    return steps


def all_corner_chains(h: HessFunc) -> list[list[tuple[HessFunc, Corner]]]:
    """Every corner-removal chain from the flag case to ``h``."""
    chains = []

    def rec(cur, acc):
        if cur == h:
            chains.append(list(acc))
            return
        for c in corners(cur):
            if c.i > c.j and cur(c.j) > h(c.j):
                acc.append((cur, c))
                rec(remove_corner(cur, c), acc)
                acc.pop()

    rec(full(h.n), [])
    return chains


def diagram(h: HessFunc, star: str = "*", blank: str = ".") -> str:
    """Text diagram: row ``i``, column ``j``, a star iff ``i <= h(j)``."""
    rows = []
    for i in range(1, h.n + 1):
        rows.append(" ".join(star if i <= h(j) else blank for j in range(1, h.n + 1)))
    return "\n".join(rows)
