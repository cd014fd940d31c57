"""
Symmetric polynomials written over elementary (``e_k``) and power-sum
(``p_k``) generators, with exact rational coefficients.

Text syntax::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | integer ['/' integer] | generator ['^' n] | '(' expr ')' ['^' n]
    generator := 'e'k | 'p'k        (k >= 1)

Whitespace is ignored.  Parsing expands eagerly into a canonical map from
generator monomials to coefficients, so two texts denoting the same
polynomial in the generators compare equal.

>>> f = parse_expr("e1^2 - 2*e2")
>>> f.evaluate([1, 2])
Fraction(5, 1)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ParseError, ZeroGeneratorIndex

# A monomial is a sorted tuple of ((kind, index), exponent), kind in {"e", "p"}.
Monomial = tuple


def elementary_symmetric_all(values: Sequence, kmax: int | None = None) -> list:
    """Return ``[e_0, e_1, ..., e_kmax]`` of ``values``.

    Multiplies out ``prod (1 + t v)`` one factor at a time, keeping only the
    coefficients up to ``t^kmax``.  Entries past ``len(values)`` are 0.
    """
    n = len(values)
    if kmax is None:
        kmax = n
    coeffs = [1] + [0] * kmax
    top = 0
    for v in values:
        top = min(top + 1, kmax)
        for k in range(top, 0, -1):
            coeffs[k] += v * coeffs[k - 1]
    return coeffs


def elementary_symmetric(k: int, values: Sequence):
    """``e_k`` of a multiset; ``e_0 = 1`` and ``e_k = 0`` when ``k > len(values)``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > len(values):
        return 0
    return elementary_symmetric_all(values, k)[k]


def power_sum(k: int, values: Sequence):
    """``p_k = sum v**k`` for ``k >= 1``."""
    if k < 1:
        raise ValueError("power sums are defined for k >= 1")
    return sum(v**k for v in values)


@dataclass(frozen=True)
class Partition:
    """Non-increasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 1 for p in self.parts):
            raise ValueError(f"partition parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {self.parts!r}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def make_partition(parts: Sequence[int]) -> Partition:
    """Sort ``parts`` into non-increasing order and wrap them."""
    return Partition(tuple(sorted((int(p) for p in parts), reverse=True)))


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if largest is None:
        largest = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def c_lambda(lam, values: Sequence):
    """Product ``e_{lam_1} * ... * e_{lam_l}`` evaluated on ``values``."""
    lam = lam if isinstance(lam, Partition) else make_partition(lam)
    if not lam.parts:
        return 1
    e = elementary_symmetric_all(values, max(lam.parts))
    return math.prod(e[k] for k in lam.parts)


def _mono_degree(mono: Monomial) -> int:
    return sum(idx * exp for (_, idx), exp in mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    acc = dict(a)
    for gen, exp in b:
        acc[gen] = acc.get(gen, 0) + exp
    return tuple(sorted(acc.items()))


class SymPolyExpr:
    """Polynomial in the generators ``e_k``, ``p_k`` with rational coefficients.

    Instances are immutable; arithmetic returns new expressions in canonical
    form (no zero coefficients).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymPolyExpr is immutable")

    def __reduce__(self):
        return (SymPolyExpr, (self._terms,))

    @classmethod
    def constant(cls, c) -> SymPolyExpr:
        return cls({(): c})

    @classmethod
    def generator(cls, kind: str, k: int) -> SymPolyExpr:
        if kind not in ("e", "p"):
            raise ValueError(f"unknown generator kind {kind!r}")
        if k < 1:
            raise ValueError("generator index must be >= 1")
        return cls({(((kind, k), 1),): 1})

    @classmethod
    def from_partition(cls, lam) -> SymPolyExpr:
        """The monomial ``c_lambda = e_{lam_1} ... e_{lam_l}``."""
        lam = lam if isinstance(lam, Partition) else make_partition(lam)
        out = cls.constant(1)
        for k in lam.parts:
            out = out * cls.generator("e", k)
        return out

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def degrees(self) -> set[int]:
        return {_mono_degree(m) for m in self._terms}

    @property
    def degree(self) -> int | None:
        """Largest monomial degree, ``None`` for the zero polynomial."""
        return max(self.degrees(), default=None)

    def is_homogeneous(self) -> int | None:
        """Common degree of all monomials, or ``None`` if they differ (or f = 0)."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def max_index(self, kind: str) -> int:
        return max((idx for m in self._terms for (knd, idx), _ in m if knd == kind), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPolyExpr.constant(other)
        if not isinstance(other, SymPolyExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other):
        if isinstance(other, SymPolyExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return SymPolyExpr.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return SymPolyExpr(acc)

    __radd__ = __add__

    def __neg__(self):
        return SymPolyExpr({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return SymPolyExpr(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = SymPolyExpr.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, e: Sequence, p: dict):
        """Evaluate with ``e[k]`` bound to ``e_k`` and ``p[k]`` bound to ``p_k``.

        ``e`` must cover indices up to ``max_index('e')``.
        """
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for (kind, idx), exp in mono:
                term *= (e[idx] if kind == "e" else p[idx]) ** exp
            total += term
        return total

    def evaluate(self, values: Sequence) -> Fraction:
        """Exact value with the generators bound to the multiset ``values``."""
        values = list(values)
        e = elementary_symmetric_all(values, self.max_index("e"))
        p = {k: power_sum(k, values) for k in self._p_indices()}
        return Fraction(self.substitute(e, p))

    def _p_indices(self) -> set[int]:
        return {idx for m in self._terms for (kind, idx), _ in m if kind == "p"}

    def _sorted_terms(self):
        return sorted(self._terms.items(), key=lambda mc: (-_mono_degree(mc[0]), mc[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self._sorted_terms():
            gens = "*".join(f"{kind}{idx}" + (f"^{exp}" if exp > 1 else "") for (kind, idx), exp in mono)
            mag = abs(c)
            if not gens:
                body = str(mag)
            elif mag == 1:
                body = gens
            else:
                body = f"{mag}*{gens}"
            sign = "-" if c < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"SymPolyExpr({str(self)!r})"


def evaluate(f, values: Sequence) -> Fraction:
    """Evaluate ``f`` (an expression or its text) on a multiset."""
    if isinstance(f, str):
        f = parse_expr(f)
    return f.evaluate(values)


def is_homogeneous(f) -> int | None:
    if isinstance(f, str):
        f = parse_expr(f)
    return f.is_homogeneous()


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<gen>[ep])(?P<idx>\d+)|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = pos
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), start))
        elif m.group("gen") is not None:
            k = int(m.group("idx"))
            if k == 0:
                raise ZeroGeneratorIndex(f"generator index must be >= 1 in {m.group('gen')}0", start)
            tokens.append(("gen", (m.group("gen"), k), start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def expect_int(self, what):
        kind, val, pos = self.take()
        if kind != "num":
            raise ParseError(f"expected {what}", pos)
        return val, pos

    def parse(self):
        out = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", pos)
        return out

    def expr(self):
        out = self.term()
        while True:
            if self.accept("+"):
                out = out + self.term()
            elif self.accept("-"):
                out = out - self.term()
            else:
                return out

    def term(self):
        out = self.factor()
        while self.accept("*"):
            out = out * self.factor()
        return out

    def exponent(self, base):
        if not self.accept("^"):
            return base
        n, pos = self.expect_int("exponent")
        if n < 1:
            raise ParseError("exponent must be a positive integer", pos)
        return base**n

    def factor(self):
        if self.accept("-"):
            return -self.factor()
        kind, val, pos = self.take()
        if kind == "num":
            if self.accept("/"):
                den, dpos = self.expect_int("denominator")
                if den == 0:
                    raise ParseError("zero denominator", dpos)
                return SymPolyExpr.constant(Fraction(val, den))
            return SymPolyExpr.constant(val)
        if kind == "gen":
            return self.exponent(SymPolyExpr.generator(*val))
        if kind == "op" and val == "(":
            inner = self.expr()
            if not self.accept(")"):
                raise ParseError("expected ')'", self.peek()[2])
            return self.exponent(inner)
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos)


def parse_expr(text: str) -> SymPolyExpr:
    """Parse expression text into canonical form; raises :class:`ParseError`."""
    return _Parser(text).parse()
