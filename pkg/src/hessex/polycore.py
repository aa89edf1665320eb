"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, over a fixed number of variables
``x1, ..., xn``.  Terms iterate in graded-lex descending order with
``x1 > x2 > ... > xn``, which is also the printing order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Exps = tuple  # tuple[int, ...] of length nvars


class PolyError(ValueError):
    """Raised on malformed polynomial input or incompatible operands."""


def _sort_key(exps: Exps):
    return (sum(exps), exps)


def monomials_of_degree(nvars: int, d: int) -> list[Exps]:
    """All exponent tuples of total degree ``d``, graded-lex descending."""
    if d < 0:
        return []
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def add_exps(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Immutable polynomial in ``nvars`` variables with exact coefficients."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, Scalar] | Iterable = ()):
        if nvars < 0:
            raise PolyError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, Fraction] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise PolyError(f"exponent vector {e} invalid for {nvars} variables")
            acc[e] = acc.get(e, 0) + Fraction(c)
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Poly":
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, k: int) -> "Poly":
        """The variable ``x_k`` (1-based)."""
        if not 1 <= k <= nvars:
            raise PolyError(f"variable index {k} out of range 1..{nvars}")
        e = [0] * nvars
        e[k - 1] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: Scalar = 1) -> "Poly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    # -- inspection -----------------------------------------------------

    def terms(self) -> list[tuple[Exps, Fraction]]:
        """Terms in canonical (graded-lex descending) order."""
        return sorted(self._terms.items(), key=lambda t: _sort_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exps, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exps: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def as_dict(self) -> dict[Exps, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise PolyError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly.zero(self.nvars)
            c = Fraction(other)
            return Poly._raw(self.nvars, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                e = add_exps(a, b)
                out[e] = out.get(e, 0) + c * d
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def mul_monomial(self, exps: Exps, c: Scalar = 1) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {add_exps(e, exps): v * c for e, v in self._terms.items()})

    # -- structural operations -------------------------------------------

    def _check_index(self, k: int):
        if not 1 <= k <= self.nvars:
            raise PolyError(f"variable index {k} out of range 1..{self.nvars}")

    def substitute_zero(self, k: int) -> "Poly":
        """Set ``x_k = 0``: drop every term containing ``x_k``."""
        self._check_index(k)
        return Poly._raw(self.nvars, {e: c for e, c in self._terms.items() if e[k - 1] == 0})

    def rename_vars(self, mapping: Mapping[int, int | None], new_nvars: int) -> "Poly":
        """Transport exponents along ``mapping`` (1-based old -> new index).

        A variable mapped to ``None`` (or left out of the mapping) is dropped;
        it must not occur in the polynomial.  Variables merged onto one target
        index have their exponents added.
        """
        out: dict[Exps, Fraction] = {}
        for e, c in self._terms.items():
            ne = [0] * new_nvars
            for k, x in enumerate(e, start=1):
                if x == 0:
                    continue
                t = mapping.get(k)
                if t is None:
                    raise PolyError(f"dropped variable x{k} occurs in the polynomial")
                if not 1 <= t <= new_nvars:
                    raise PolyError(f"target index {t} out of range 1..{new_nvars}")
                ne[t - 1] += x
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + c
        return Poly._raw(new_nvars, {e: c for e, c in out.items() if c})

    def homogeneous_component(self, d: int) -> "Poly":
        return Poly._raw(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == d})

    def components(self) -> dict[int, "Poly"]:
        degs = sorted({sum(e) for e in self._terms})
        return {d: self.homogeneous_component(d) for d in degs}

    def swap(self, i: int) -> "Poly":
        """Exchange ``x_i`` and ``x_{i+1}``."""
        self._check_index(i)
        self._check_index(i + 1)
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Poly._raw(self.nvars, out)

    def divided_difference(self, i: int) -> "Poly":
        """``(p - s_i p) / (x_i - x_{i+1})``, computed monomial by monomial."""
        if not 1 <= i <= self.nvars - 1:
            raise PolyError(f"divided difference index {i} out of range 1..{self.nvars - 1}")
        out: dict[Exps, Fraction] = {}
        for e, c in self._terms.items():
            a, b = e[i - 1], e[i]
            if a == b:
                continue
            sign = 1 if a > b else -1
            lo, hi = min(a, b), max(a, b)
            # x^lo y^lo (x^(hi-lo) - y^(hi-lo)) / (x - y)
            for k in range(hi - lo):
                ne = list(e)
                ne[i - 1] = lo + k
                ne[i] = hi - 1 - k
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + sign * c
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def evaluate(self, point: Iterable[Scalar]) -> Fraction:
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for v, x in zip(point, e):
                if x:
                    t *= v ** x
            total += t
        return total

    # -- serialization --------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.nvars}, '{format_poly(self)}')"

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"c": str(c), "e": list(e)} for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Poly":
        try:
            n = int(obj["nvars"])
            return cls(n, [(tuple(t["e"]), Fraction(t["c"])) for t in obj["terms"]])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise PolyError(f"malformed polynomial JSON: {exc}") from exc


def _format_monomial(e: Exps) -> str:
    parts = []
    for k, x in enumerate(e, start=1):
        if x == 1:
            parts.append(f"x{k}")
        elif x > 1:
            parts.append(f"x{k}^{x}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Render in the canonical text grammar, e.g. ``x1^2 - 1/2*x1*x2 + 3``."""
    if p.is_zero():
        return "0"
    chunks = []
    for idx, (e, c) in enumerate(p.terms()):
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(e)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coef>\d+(?:/\d+)?)?\s*
        (?P<mono>\*?\s*x\d+(?:\s*\^\s*\d+)?(?:\s*\*\s*x\d+(?:\s*\^\s*\d+)?)*)?\s*""",
    re.VERBOSE,
)
_FACTOR_RE = re.compile(r"x(\d+)(?:\s*\^\s*(\d+))?")


def parse_poly(text: str, nvars: int | None = None) -> Poly:
    """Parse the canonical text grammar.

    ``nvars`` defaults to the largest variable index that appears (at least 1).
    Repeated variables inside a term multiply (``x1*x1 == x1^2``).
    """
    s = text.strip()
    if not s:
        raise PolyError("empty polynomial text")
    raw: list[tuple[dict[int, int], Fraction]] = []
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise PolyError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, coef, mono = m.group("sign"), m.group("coef"), m.group("mono")
        if sign is None and not first:
            raise PolyError(f"missing operator before {s[pos:]!r}")
        if coef is None and mono is None:
            raise PolyError(f"empty term near {s[pos:]!r}")
        if mono is not None and mono.lstrip().startswith("*") and coef is None:
            raise PolyError(f"dangling '*' near {s[pos:]!r}")
        try:
            c = Fraction(coef) if coef is not None else Fraction(1)
        except ZeroDivisionError as exc:
            raise PolyError("zero denominator") from exc
        if sign == "-":
            c = -c
        powers: dict[int, int] = {}
        if mono:
            for fm in _FACTOR_RE.finditer(mono):
                k = int(fm.group(1))
                if k < 1:
                    raise PolyError("variable indices start at 1")
                powers[k] = powers.get(k, 0) + int(fm.group(2) or 1)
        raw.append((powers, c))
        pos = m.end()
        first = False
    top = max((k for pw, _ in raw for k in pw), default=0)
    if nvars is None:
        nvars = max(top, 1)
    elif top > nvars:
        raise PolyError(f"variable x{top} exceeds nvars={nvars}")
    terms = []
    for pw, c in raw:
        e = [0] * nvars
        for k, x in pw.items():
            e[k - 1] += x
        terms.append((tuple(e), c))
    return Poly(nvars, terms)


def linear_form(nvars: int, coeffs: Mapping[int, Scalar]) -> Poly:
    """``sum coeffs[k] * x_k`` with 1-based keys."""
    terms = []
    for k, c in coeffs.items():
        e = [0] * nvars
        e[k - 1] = 1
        terms.append((tuple(e), c))
    return Poly(nvars, terms)
