"""Permanent and determinant kernels.

The permanent uses Ryser's inclusion-exclusion formula,

    perm(A) = (-1)**n * sum_{S subset of columns} (-1)**|S| * prod_i sum_{j in S} A[i, j],

walking the subsets in Gray-code order so that each step adds or removes a
single column from the running row sums (O(2**n * n) work overall).  The
outer sum is accumulated with Kahan compensation: for the even-N Fourier
matrices the true value is an exact cancellation, and uncompensated
summation would bury it in rounding noise at larger N.

The brute-force permutation sums (:func:`permanent_naive`,
:func:`determinant_naive`) are test oracles only.
"""

from __future__ import annotations

import cmath
import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numba
import numpy as np

from homport.errors import CapExceededError
from homport.multiport import _check_dim, as_complex_matrix, build_lambda

#: Largest permanent computed without an explicit override.
PERMANENT_MAX_DIM = 24

#: Below this dimension a single worker is always used.
PARALLEL_MIN_DIM = 14

THREADS_ENV = "HOMPORT_THREADS"


def vanishing_tolerance(n: int) -> float:
    """Absolute threshold below which a permanent of an n x n matrix counts as zero."""
    return 1e-9 * n


def is_vanishing(value: complex, n: int) -> bool:
    return abs(value) <= vanishing_tolerance(n)


def default_workers() -> int:
    """Worker count from ``HOMPORT_THREADS`` (default 1)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        w = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if w < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return w


@numba.njit(cache=True, nogil=True)
def _ryser_range(a, start, stop):
    # Sum of (-1)**|S| * prod(row sums) over Gray-code steps k in [start, stop).
    n = a.shape[0]
    rowsum = np.zeros(n, dtype=np.complex128)
    gray = (start - 1) ^ ((start - 1) >> 1)
    for j in range(n):
        if (gray >> j) & 1:
            for i in range(n):
                rowsum[i] += a[i, j]
    s_re = 0.0
    s_im = 0.0
    c_re = 0.0
    c_im = 0.0
    for k in range(start, stop):
        j = 0
        while not (k >> j) & 1:
            j += 1
        bit = 1 << j
        if gray & bit:
            for i in range(n):
                rowsum[i] -= a[i, j]
        else:
            for i in range(n):
                rowsum[i] += a[i, j]
        gray ^= bit
        p = rowsum[0]
        for i in range(1, n):
            p *= rowsum[i]
        # |gray(k)| has the parity of k
        if k & 1:
            p = -p
        y = p.real - c_re
        t = s_re + y
        c_re = (t - s_re) - y
        s_re = t
        y = p.imag - c_im
        t = s_im + y
        c_im = (t - s_im) - y
        s_im = t
    return complex(s_re, s_im)


def _chunk_bounds(total: int, parts: int) -> list[tuple[int, int]]:
    # Gray-code steps run over k = 1 .. total-1.
    edges = np.linspace(1, total, parts + 1).round().astype(np.int64)
    return [(int(lo), int(hi)) for lo, hi in zip(edges[:-1], edges[1:]) if hi > lo]


def permanent(
    m,
    *,
    max_dim: int | None = PERMANENT_MAX_DIM,
    workers: int | None = None,
) -> complex:
    """Permanent of a square complex matrix (Ryser, Gray-code order).

    Parameters
    ----------
    m : array_like
        Square matrix.
    max_dim : int or None
        Refuse matrices larger than this; ``None`` lifts the cap.
    workers : int, optional
        Number of threads splitting the subset range.  Defaults to
        ``HOMPORT_THREADS`` or 1.  Partial sums are combined in a fixed
        order, so results are bit-stable for a given worker count.
    """
    a = as_complex_matrix(m)
    n = a.shape[0]
    if max_dim is not None and n > max_dim:
        raise CapExceededError("permanent", n, max_dim)
    if n == 1:
        return complex(a[0, 0])
    if workers is None:
        workers = default_workers()
    total = 1 << n
    parts = 1 if n < PARALLEL_MIN_DIM else max(1, int(workers))
    chunks = _chunk_bounds(total, parts)
    if len(chunks) == 1:
        partials = [_ryser_range(a, 1, total)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            partials = list(pool.map(lambda b: _ryser_range(a, b[0], b[1]), chunks))
    s = complex(math.fsum(z.real for z in partials), math.fsum(z.imag for z in partials))
    return s if n % 2 == 0 else -s


def permanent_naive(m) -> complex:
    """Permanent as the literal sum over all n! permutations (test oracle)."""
    a = as_complex_matrix(m)
    n = a.shape[0]
    cols = np.arange(n)
    total = 0j
    for sigma in itertools.permutations(range(n)):
        total += np.prod(a[list(sigma), cols])
    return complex(total)


def permutation_sign(sigma: Sequence[int]) -> int:
    """Sign of a permutation of ``0..n-1`` from its cycle decomposition."""
    n = len(sigma)
    seen = [False] * n
    transpositions = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def determinant(m) -> complex:
    """Determinant by LU factorisation with partial pivoting (LAPACK via numpy)."""
    a = as_complex_matrix(m)
    return complex(np.linalg.det(a))


def determinant_naive(m) -> complex:
    """Determinant as the signed permutation sum (test oracle)."""
    a = as_complex_matrix(m)
    n = a.shape[0]
    cols = np.arange(n)
    total = 0j
    for sigma in itertools.permutations(range(n)):
        total += permutation_sign(sigma) * np.prod(a[list(sigma), cols])
    return complex(total)


@dataclass(frozen=True)
class SubmatrixSpec:
    """Base matrix plus output-row multiplicities; all columns are kept.

    Row ``j`` of ``base`` appears ``row_multiplicities[j]`` times in the
    expanded matrix, so the multiplicities must sum to the dimension.
    """

    base: np.ndarray
    row_multiplicities: tuple[int, ...]

    def __post_init__(self):
        base = as_complex_matrix(self.base)
        mult = tuple(int(k) for k in self.row_multiplicities)
        n = base.shape[0]
        if len(mult) != n:
            raise ValueError(f"need {n} multiplicities, got {len(mult)}")
        if any(k < 0 for k in mult):
            raise ValueError("multiplicities must be nonnegative")
        if sum(mult) != n:
            raise ValueError(f"multiplicities sum to {sum(mult)}, expected {n}")
        base.flags.writeable = False
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "row_multiplicities", mult)

    def expand(self) -> np.ndarray:
        rows = np.repeat(np.arange(len(self.row_multiplicities)), self.row_multiplicities)
        return self.base[rows, :]


def permanent_of_spec(s: SubmatrixSpec, **kwargs) -> complex:
    """Permanent of the row-repeated matrix described by ``s``."""
    if all(k == 1 for k in s.row_multiplicities):
        return permanent(s.base, **kwargs)
    return permanent(s.expand(), **kwargs)


def perm_lambda_parity(n: int, *, cross_check_tol: float = 1e-12) -> complex:
    """Permanent of the diagonal phase matrix from its closed form.

    The product of ``w**k`` for ``k = 0..n-1`` is ``w**(n(n-1)/2)``,
    i.e. ``exp(1j*pi*(n+1))``: +1 for odd n, -1 for even n.  The value is
    cross-checked against the Ryser kernel applied to ``build_lambda(n)``.
    """
    n = _check_dim(n)
    closed = complex(1 if n % 2 else -1)
    if n <= PERMANENT_MAX_DIM:
        numeric = permanent(build_lambda(n))
        if abs(numeric - closed) > cross_check_tol:
            raise ArithmeticError(
                f"perm(Lambda_{n}) = {numeric} disagrees with closed form {closed}"
            )
    return closed


def perm_lambda_closed_form(n: int) -> complex:
    """``exp(1j*pi*(n+1))`` evaluated in floating point."""
    return cmath.exp(1j * math.pi * (n + 1))
