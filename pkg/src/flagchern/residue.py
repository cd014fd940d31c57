"""
Exact residue sums over the fixed points of a flag manifold.

For a dimension vector ``dims`` and a symmetric polynomial ``f`` the residue
sum is

    R_f(x) = sum over decompositions I of f(W_I) / e(W_I)

where ``W_I`` is the weight multiset of :func:`~flagchern.combinatorics.weight_multiset`
and ``e(W_I)`` the product of its entries.  For homogeneous ``f`` of degree
below ``d`` this vanishes identically; in degree ``d`` it is independent of
``x`` and, for ``f = c_lambda``, equals the Chern number ``c_lambda[F]``.
All arithmetic is exact.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .combinatorics import (
    DEFAULT_MAX_DECOMPOSITIONS,
    Dims,
    as_dims,
    default_assignment,
    enumerate_decompositions,
    make_assignment,
    weight_multiset,
)
from .errors import (
    DegreeMismatch,
    DegreeNotBelowD,
    NonConstantResidue,
    NonIntegerChernNumber,
    PartitionWeightMismatch,
    ShapeMismatch,
)
from .sympoly import (
    Partition,
    SymPolyExpr,
    elementary_symmetric_all,
    make_partition,
    parse_expr,
    partitions,
    power_sum,
)

RANDOM_RANGE = (-1000, 1000)


def _as_expr(f) -> SymPolyExpr:
    return parse_expr(f) if isinstance(f, str) else f


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else make_partition(lam)


def _integral(x):
    # integer arithmetic is much cheaper than Fraction inside the hot loop
    if all(v.denominator == 1 for v in x):
        return tuple(int(v) for v in x)
    return x


def _partial_sums(decomps, fs, x, d) -> list[Fraction]:
    kmax = max([d] + [f.max_index("e") for f in fs])
    p_needed = sorted(set().union(*(f._p_indices() for f in fs)))
    sums = [Fraction(0)] * len(fs)
    for I in decomps:
        w = weight_multiset(I, x, check=False)
        e = elementary_symmetric_all(w, kmax)
        p = {k: power_sum(k, w) for k in p_needed}
        top = e[d]
        for n, f in enumerate(fs):
            sums[n] += Fraction(f.substitute(e, p)) / top
    return sums


def _chunk_job(args):
    return _partial_sums(*args)


def residue_sums(
    dims,
    fs: Sequence,
    x: Sequence | None = None,
    workers: int = 1,
    chunk_size: int | None = None,
    max_decompositions: int = DEFAULT_MAX_DECOMPOSITIONS,
) -> list[Fraction]:
    """Residue sums of several polynomials at one assignment, in one pass.

    With ``workers > 1`` the decompositions are cut into contiguous chunks
    (default size ``count // (4 * workers)``) summed in worker processes and
    reduced in chunk order.  Exact arithmetic makes the result identical to
    the sequential sum.
    """
    dims = as_dims(dims)
    fs = [_as_expr(f) for f in fs]
    x = default_assignment(dims) if x is None else make_assignment(x)
    if len(x) != dims.N:
        raise ShapeMismatch(f"assignment has {len(x)} values, dims ({dims}) need N = {dims.N}")
    x = _integral(x)
    decomps = enumerate_decompositions(dims, max_decompositions)
    if workers <= 1:
        return _partial_sums(decomps, fs, x, dims.d)

    decomps = list(decomps)
    if chunk_size is None:
        chunk_size = max(1, len(decomps) // (4 * workers))
    jobs = [(decomps[i : i + chunk_size], fs, x, dims.d) for i in range(0, len(decomps), chunk_size)]
    totals = [Fraction(0)] * len(fs)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(_chunk_job, jobs):
            totals = [a + b for a, b in zip(totals, partial)]
    return totals


def residue_sum(dims, f, x: Sequence | None = None, **kwargs) -> Fraction:
    """``R_f(x)``; ``x`` defaults to ``x_i = i``.  See :func:`residue_sums`."""
    return residue_sums(dims, [f], x, **kwargs)[0]


def euler_characteristic(dims) -> int:
    """``N! / prod m_i!``."""
    dims = as_dims(dims)
    return math.factorial(dims.N) // math.prod(math.factorial(m) for m in dims.parts)


def random_assignments(n: int, trials: int, seed: int) -> list[tuple[Fraction, ...]]:
    """``trials`` seeded draws of ``n`` distinct integers from ``[-1000, 1000]``."""
    rng = random.Random(seed)
    lo, hi = RANDOM_RANGE
    return [tuple(Fraction(v) for v in rng.sample(range(lo, hi + 1), n)) for _ in range(trials)]


@dataclass(frozen=True)
class Verdict:
    kind: str  # "AllZero", "Constant" or "NonConstant"
    value: Fraction | None = None
    witness: tuple[int, int] | None = None

    def __str__(self):
        if self.kind == "Constant":
            return f"Constant({self.value})"
        if self.kind == "NonConstant":
            return f"NonConstant(trials {self.witness[0]} and {self.witness[1]} differ)"
        return self.kind


def classify(values: Sequence[Fraction], zero_is_constant: bool = False) -> Verdict:
    if not zero_is_constant and all(v == 0 for v in values):
        return Verdict("AllZero")
    for n, v in enumerate(values[1:], 1):
        if v != values[0]:
            return Verdict("NonConstant", witness=(0, n))
    return Verdict("Constant", values[0] if values else None)


@dataclass
class ResidueReport:
    """Evidence for one vanishing or constancy check."""

    dims: Dims
    f: SymPolyExpr
    mode: str
    assignments: list = field(default_factory=list)
    values: list = field(default_factory=list)
    verdict: Verdict | None = None

    def __post_init__(self):
        if len(self.assignments) != len(self.values):
            raise ValueError("one value per assignment is required")
        if self.verdict is None:
            self.verdict = classify(self.values, zero_is_constant=self.mode == "constant")

    @property
    def expected(self) -> str:
        return "Constant" if self.mode == "constant" else "AllZero"

    @property
    def ok(self) -> bool:
        return self.verdict.kind == self.expected

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "poly": str(self.f),
            "assignments": [[str(v) for v in x] for x in self.assignments],
            "values": [str(v) for v in self.values],
            "verdict": self.verdict.kind,
            "value": None if self.verdict.value is None else str(self.verdict.value),
            "witness": None if self.verdict.witness is None else list(self.verdict.witness),
            "expected": self.expected,
            "ok": self.ok,
        }


def _evaluate_at(dims, fs, assignments, workers):
    # rows: one list of per-f values for each assignment
    return [residue_sums(dims, fs, x, workers=workers) for x in assignments]


def _report(dims, f, mode, trials, seed, workers):
    xs = random_assignments(dims.N, trials, seed)
    values = [row[0] for row in _evaluate_at(dims, [f], xs, workers)]
    return ResidueReport(dims, f, mode, xs, values)


def verify_vanishing(dims, f, trials: int = 5, seed: int = 0, workers: int = 1) -> ResidueReport:
    """Check ``R_f = 0`` at ``trials`` random assignments for ``deg f < d``."""
    dims, f = as_dims(dims), _as_expr(f)
    if f.degree is not None and f.degree >= dims.d:
        raise DegreeNotBelowD(f"deg f = {f.degree} is not below d = {dims.d}")
    return _report(dims, f, "vanishing", trials, seed, workers)


def verify_constant(dims, f, trials: int = 5, seed: int = 0, workers: int = 1) -> ResidueReport:
    """Check ``R_f`` takes one value at ``trials`` random assignments; ``f`` homogeneous of degree ``d``."""
    dims, f = as_dims(dims), _as_expr(f)
    deg = f.is_homogeneous()
    if deg != dims.d:
        raise DegreeMismatch(f"f must be homogeneous of degree d = {dims.d}, got degrees {sorted(f.degrees())}")
    return _report(dims, f, "constant", trials, seed, workers)


class Special(str, Enum):
    FUTAKI_C1 = "futaki"
    TOP_TIMES_C1 = "top-c1"


def special_polynomial(dims, which) -> SymPolyExpr:
    """``e1^(d+1)`` for ``futaki``, ``e_d * e1`` for ``top-c1``."""
    dims, which = as_dims(dims), Special(which)
    e1 = SymPolyExpr.generator("e", 1)
    if which is Special.FUTAKI_C1:
        return e1 ** (dims.d + 1)
    return SymPolyExpr.generator("e", dims.d) * e1


def verify_special(dims, which, trials: int = 5, seed: int = 0, workers: int = 1) -> ResidueReport:
    """Check the two degree ``d+1`` vanishings at random assignments."""
    dims = as_dims(dims)
    f = special_polynomial(dims, which)
    return _report(dims, f, Special(which).value, trials, seed, workers)


@dataclass(frozen=True)
class ChernTrail:
    """A Chern number with the assignments and residue values that certify it."""

    partition: Partition
    value: int
    assignments: list
    values: list


def chern_trails(dims, lams=None, trials: int = 5, seed: int = 0, workers: int = 1) -> list[ChernTrail]:
    """Chern numbers for several partitions of weight ``d`` (all of them by default).

    Each is evaluated at ``x_i = i`` and at ``trials`` seeded random
    assignments; disagreement or a non-integer value raises, since either
    indicates a defect in this code rather than a property of the manifold.
    """
    dims = as_dims(dims)
    lams = list(partitions(dims.d)) if lams is None else [_as_partition(lam) for lam in lams]
    for lam in lams:
        if lam.weight != dims.d:
            raise PartitionWeightMismatch(f"partition ({lam}) has weight {lam.weight}, but d = {dims.d}")
    xs = [default_assignment(dims)] + random_assignments(dims.N, trials, seed)
    rows = _evaluate_at(dims, [SymPolyExpr.from_partition(lam) for lam in lams], xs, workers)
    out = []
    for n, lam in enumerate(lams):
        values = [row[n] for row in rows]
        if any(v != values[0] for v in values):
            raise NonConstantResidue(f"residue of c_({lam}) on dims ({dims}) varies: {[str(v) for v in values]}")
        if values[0].denominator != 1:
            raise NonIntegerChernNumber(f"c_({lam}) on dims ({dims}) evaluated to {values[0]}")
        out.append(ChernTrail(lam, int(values[0]), xs, values))
    return out


def chern_number(dims, lam, trials: int = 5, seed: int = 0, workers: int = 1) -> int:
    """The Chern number ``c_lambda`` of the flag manifold with dimension vector ``dims``.

    >>> chern_number((1, 1, 2), (1, 1, 1, 1, 1))
    4500
    """
    return chern_trails(dims, [lam], trials, seed, workers)[0].value


def chern_numbers(dims, trials: int = 5, seed: int = 0, workers: int = 1) -> dict[Partition, int]:
    """All Chern numbers, keyed by partition of ``d``."""
    return {t.partition: t.value for t in chern_trails(dims, None, trials, seed, workers)}
