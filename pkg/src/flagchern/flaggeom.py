"""
Floating-point model of flags, their coordinate charts and the circle action.

A flag ``L_1 < ... < L_r`` in ``C^N`` is represented by an ``N x M`` complex
matrix ``A = (A_1 | ... | A_r)`` (``M = m_1 + ... + m_r``) whose first
``m_1 + ... + m_i`` columns span ``L_i``.  Two representatives describe the
same flag iff they differ by right multiplication with an invertible block
upper triangular matrix.

For a decomposition ``I`` the chart ``U_I`` consists of flags whose leading
block minors of ``A(I)`` (rows reordered as ``I_1, ..., I_{r+1}``) are
invertible.  Inside it each flag has a unique representative with identity
diagonal blocks and zeros above; its strictly-lower blocks ``B_ji`` are the
``d`` chart coordinates.  The diagonal action ``diag(t^k_1, ..., t^k_N)``
scales the coordinate indexed by ``(alpha, beta)`` by ``t^(k_beta - k_alpha)``,
which :func:`numeric_weights` recovers numerically.

This module is an independent check on
:func:`flagchern.combinatorics.weight_multiset`; nothing in the exact code
path depends on it.
"""

from __future__ import annotations

import itertools

import numpy as np

from .combinatorics import Decomposition, as_dims
from .errors import (
    IllConditioned,
    NotInChart,
    ShapeMismatch,
    WeightExtractionFailed,
    ZeroScalar,
)

ROUND_TOL = 1e-6
EQUAL_TOL = 1e-9
COND_CEILING = 1e8
MEMBERSHIP_TOL = 1e-10
MAX_RETRIES = 3


def _offsets(parts):
    return np.concatenate([[0], np.cumsum(parts)]).astype(int)


def _check_shape(A, I: Decomposition):
    parts = I.dims.parts
    shape = (I.N, sum(parts[:-1]))
    if A.shape != shape:
        raise ShapeMismatch(f"expected a {shape[0]}x{shape[1]} matrix for {I}, got {A.shape}")


def fixed_point_matrix(I: Decomposition) -> np.ndarray:
    """Representative of the fixed point ``P_I``: columns ``e_a`` for ``a`` in ``I_1, ..., I_r``."""
    cols = [a - 1 for block in I.blocks[:-1] for a in block]
    A = np.zeros((I.N, len(cols)), dtype=complex)
    A[cols, np.arange(len(cols))] = 1
    return A


def leading_blocks(A: np.ndarray, I: Decomposition) -> list[np.ndarray]:
    """The square leading minors ``(A_s^(t))_{1<=s,t<=i}`` of ``A(I)``, ``i = 1..r``."""
    _check_shape(A, I)
    AI = A[I.row_order()]
    off = _offsets(I.dims.parts)
    return [AI[: off[i], : off[i]] for i in range(1, len(off) - 1)]


def chart_membership(A: np.ndarray, I: Decomposition, tol: float = MEMBERSHIP_TOL) -> bool:
    """True iff every leading block minor of ``A(I)`` is invertible."""
    for L in leading_blocks(A, I):
        if np.linalg.svd(L, compute_uv=False)[-1] <= tol:
            return False
    return True


def normalize_chart(A: np.ndarray, I: Decomposition, cond_ceiling: float = COND_CEILING) -> np.ndarray:
    """Chart coordinates of the flag ``[A]`` in ``U_I`` as a length-``d`` vector.

    The normalizing block upper triangular ``Q`` is built one column block at
    a time: block column ``i`` solves the ``i``-th leading system against
    ``(0, ..., 0, E)``.  Coordinates are then read from ``A(I) Q`` in the
    canonical order of :func:`~flagchern.combinatorics.weight_pairs`.
    """
    if not chart_membership(A, I):
        raise NotInChart(f"flag is not in the chart of {I}")
    parts = I.dims.parts
    off = _offsets(parts)
    M = off[-2]
    AI = A[I.row_order()]
    Q = np.zeros((M, M), dtype=complex)
    for i, L in enumerate(leading_blocks(A, I), start=1):
        cond = np.linalg.cond(L)
        if not np.isfinite(cond) or cond > cond_ceiling:
            raise IllConditioned(f"leading block {i} of {I} has condition number {cond:.3g}")
        rhs = np.zeros((off[i], parts[i - 1]), dtype=complex)
        rhs[off[i - 1] :, :] = np.eye(parts[i - 1])
        Q[: off[i], off[i - 1] : off[i]] = np.linalg.solve(L, rhs)
    return _read_coords(AI @ Q, parts)


def _read_coords(B, parts):
    off = _offsets(parts)
    out = []
    for i, j in itertools.combinations(range(len(parts)), 2):
        block = B[off[j] : off[j + 1], off[i] : off[i + 1]]
        # alpha (column) outer, beta (row) inner
        out.append(block.T.reshape(-1))
    return np.concatenate(out)


def chart_to_matrix(coords, I: Decomposition) -> np.ndarray:
    """Normalized representative of the flag with the given chart coordinates.

    Inverse of :func:`normalize_chart`; rows are returned in the original
    order ``1..N``.
    """
    parts = I.dims.parts
    coords = np.asarray(coords, dtype=complex)
    if coords.shape != (I.dims.d,):
        raise ShapeMismatch(f"need {I.dims.d} coordinates for {I}, got shape {coords.shape}")
    off = _offsets(parts)
    M = off[-2]
    B = np.zeros((I.N, M), dtype=complex)
    B[:M, :M] = np.eye(M)
    pos = 0
    for i, j in itertools.combinations(range(len(parts)), 2):
        n = parts[i] * parts[j]
        B[off[j] : off[j + 1], off[i] : off[i + 1]] = coords[pos : pos + n].reshape(parts[i], parts[j]).T
        pos += n
    A = np.empty_like(B)
    A[I.row_order()] = B
    return A


def circle_act(t, k, A: np.ndarray) -> np.ndarray:
    """Scale row ``i`` of ``A`` by ``t ** k[i]``."""
    if t == 0:
        raise ZeroScalar("the acting scalar must be nonzero")
    k = np.asarray(k)
    if k.shape != (A.shape[0],):
        raise ShapeMismatch(f"need {A.shape[0]} exponents, got {k.shape}")
    return (complex(t) ** k)[:, None] * A


def random_block_upper(parts, rng) -> np.ndarray:
    """Random invertible block upper triangular matrix for the block sizes ``parts``."""
    off = _offsets(parts)
    M = off[-1]
    Q = np.zeros((M, M), dtype=complex)
    for i in range(len(parts)):
        for j in range(i, len(parts)):
            shape = (parts[i], parts[j])
            blk = rng.normal(size=shape) + 1j * rng.normal(size=shape)
            if i == j:
                # diagonally dominant keeps the draw invertible and well conditioned
                blk += 3 * np.eye(parts[i])
            Q[off[i] : off[i + 1], off[j] : off[j + 1]] = blk
    return Q


def random_coords(d: int, rng) -> np.ndarray:
    """Complex coordinates with modulus in ``[0.5, 1.5]`` and uniform phase."""
    return rng.uniform(0.5, 1.5, d) * np.exp(2j * np.pi * rng.uniform(size=d))


def numeric_weights(dims, I: Decomposition, k, t: float = 2.0, rng=None, return_residual: bool = False):
    """Recover the tangent weights at ``P_I`` from the action on chart coordinates.

    A random flag in ``U_I`` is disguised by a random block upper triangular
    change of basis, moved by ``diag(t^k)``, and renormalized.  Each
    coordinate's scaling exponent ``log|new/old| / log t`` is rounded; the
    rounding residual must stay below ``1e-6``.  Returns the ``d`` integers in
    canonical order (and the worst residual if requested).
    """
    dims = as_dims(dims)
    if I.dims != dims:
        raise ShapeMismatch(f"decomposition {I} does not match dims ({dims})")
    k = [int(v) for v in k]
    if len(k) != dims.N or len(set(k)) != dims.N:
        raise ValueError(f"need {dims.N} distinct integer exponents, got {k}")
    rng = np.random.default_rng() if rng is None else rng

    last = None
    for _ in range(MAX_RETRIES):
        try:
            old = random_coords(dims.d, rng)
            A = chart_to_matrix(old, I) @ random_block_upper(dims.parts[:-1], rng)
            new = normalize_chart(circle_act(t, k, A), I)
        except (IllConditioned, NotInChart) as exc:
            last = exc
            continue
        raw = np.log(np.abs(new / old)) / np.log(abs(t))
        weights = np.rint(raw)
        residual = float(np.max(np.abs(raw - weights), initial=0.0))
        if residual >= ROUND_TOL:
            raise WeightExtractionFailed(f"rounding residual {residual:.3g} for {I}, k={k}")
        weights = [int(w) for w in weights]
        return (weights, residual) if return_residual else weights
    raise last

