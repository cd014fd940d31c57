"""
Decompositions of ``{1, ..., N}`` and their weight multisets.

A dimension vector ``(m_1, ..., m_{r+1})`` fixes a flag manifold of complex
dimension ``d = sum_{i<j} m_i m_j``.  Its fixed points under the diagonal
circle action are indexed by *decompositions*: ordered tuples of disjoint
index blocks ``(I_1, ..., I_{r+1})`` with ``|I_i| = m_i``.  At the fixed point
labelled by ``I`` the tangent weights are the ``d`` differences
``x_beta - x_alpha`` for ``alpha`` in an earlier block and ``beta`` in a later
one.

Indices are 1-based throughout, blocks are sorted ascending, and
decompositions are enumerated in lexicographic order of the concatenated
blocks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    DuplicateAssignmentValue,
    EmptyOrShortVector,
    NonPositivePart,
    ShapeMismatch,
    TooManyDecompositions,
)

DEFAULT_MAX_DECOMPOSITIONS = 10**7


@dataclass(frozen=True)
class Dims:
    """Dimension vector ``(m_1, ..., m_{r+1})`` of a flag manifold."""

    parts: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.parts) - 1

    @property
    def N(self) -> int:
        return sum(self.parts)

    @property
    def d(self) -> int:
        """Complex dimension, ``sum_{i<j} m_i m_j``."""
        return sum(a * b for a, b in itertools.combinations(self.parts, 2))

    @property
    def count(self) -> int:
        """Number of decompositions, the multinomial ``N! / prod m_i!``."""
        return math.factorial(self.N) // math.prod(math.factorial(m) for m in self.parts)

    def reversed(self) -> Dims:
        return Dims(self.parts[::-1])

    def __str__(self):
        return ",".join(map(str, self.parts))


def derive_dims(parts: Sequence[int]) -> Dims:
    """Validate a dimension vector and wrap it as :class:`Dims`."""
    parts = tuple(int(m) for m in parts)
    if len(parts) < 2:
        raise EmptyOrShortVector(f"need at least two parts, got {parts!r}")
    if any(m < 1 for m in parts):
        raise NonPositivePart(f"every part must be >= 1, got {parts!r}")
    return Dims(parts)


def as_dims(dims) -> Dims:
    return dims if isinstance(dims, Dims) else derive_dims(dims)


@dataclass(frozen=True)
class Decomposition:
    """An ordered tuple of disjoint sorted index blocks covering ``1..N``."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def dims(self) -> Dims:
        return Dims(tuple(len(b) for b in self.blocks))

    @property
    def N(self) -> int:
        return sum(len(b) for b in self.blocks)

    def row_order(self) -> list[int]:
        """0-based row permutation ``I_1 + I_2 + ... + I_{r+1}``."""
        return [a - 1 for block in self.blocks for a in block]

    def reversed(self) -> Decomposition:
        return Decomposition(self.blocks[::-1])

    def __str__(self):
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def make_decomposition(blocks: Sequence[Sequence[int]]) -> Decomposition:
    """Build a :class:`Decomposition` from raw blocks, checking the partition property."""
    blocks = tuple(tuple(sorted(int(a) for a in b)) for b in blocks)
    derive_dims([len(b) for b in blocks])
    flat = [a for b in blocks for a in b]
    if sorted(flat) != list(range(1, len(flat) + 1)):
        raise ValueError(f"blocks {blocks!r} do not partition 1..{len(flat)}")
    return Decomposition(blocks)


def enumerate_decompositions(
    dims, max_decompositions: int = DEFAULT_MAX_DECOMPOSITIONS
) -> Iterator[Decomposition]:
    """Yield every decomposition for ``dims`` in lexicographic order.

    Raises :class:`TooManyDecompositions` before yielding anything when the
    multinomial count exceeds ``max_decompositions``.
    """
    dims = as_dims(dims)
    if dims.count > max_decompositions:
        raise TooManyDecompositions(
            f"{dims.count} decompositions for dims ({dims}) exceed the ceiling {max_decompositions}"
        )
    return _enumerate(dims.parts, tuple(range(1, dims.N + 1)), ())


def _enumerate(parts, remaining, prefix):
    if len(parts) == 1:
        yield Decomposition(prefix + (remaining,))
        return
    for block in itertools.combinations(remaining, parts[0]):
        taken = set(block)
        rest = tuple(a for a in remaining if a not in taken)
        yield from _enumerate(parts[1:], rest, prefix + (block,))


def make_assignment(values: Sequence) -> tuple[Fraction, ...]:
    """Convert values to exact rationals and check they are pairwise distinct."""
    x = tuple(Fraction(v) for v in values)
    if len(set(x)) != len(x):
        dup = ", ".join(str(v) for v in sorted({v for v in x if x.count(v) > 1}))
        raise DuplicateAssignmentValue(f"assignment values must be distinct; repeated: {dup}")
    return x


def default_assignment(dims) -> tuple[Fraction, ...]:
    """The assignment ``x_i = i``."""
    return tuple(Fraction(i) for i in range(1, as_dims(dims).N + 1))


def weight_pairs(I: Decomposition) -> Iterator[tuple[int, int]]:
    """Yield ``(alpha, beta)`` index pairs in canonical order.

    Block pairs ``(i, j)`` with ``i < j`` come lexicographically, then
    ``alpha`` in ``I_i`` and ``beta`` in ``I_j`` lexicographically.
    """
    for i, j in itertools.combinations(range(len(I.blocks)), 2):
        for alpha in I.blocks[i]:
            for beta in I.blocks[j]:
                yield alpha, beta


def weight_multiset(I: Decomposition, x: Sequence, check: bool = True) -> tuple:
    """Weights ``x_beta - x_alpha`` at the fixed point ``I``, in canonical order.

    The result is a tuple of length ``d``; repeated values are kept.
    """
    if check:
        x = make_assignment(x)
    if len(x) != I.N:
        raise ShapeMismatch(f"assignment has {len(x)} values, decomposition needs {I.N}")
    return tuple(x[b - 1] - x[a - 1] for a, b in weight_pairs(I))
