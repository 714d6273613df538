"""Transition matrices of multiport beam splitters.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Row index is
the output port, column index the input port; ports are numbered from 1 in
documentation and from 0 in storage, so ``U[j - 1, i - 1]`` is the amplitude
for a particle entering port ``i`` to leave through port ``j``.
"""

from __future__ import annotations

import cmath
import enum
import io
import math
import os
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from homport.errors import NonUnitaryError

#: Default tolerance for unitarity checks of user matrices and network blocks.
EPS_UNITARY = 1e-10

_QUARTER_ROOTS = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def as_complex_matrix(m) -> np.ndarray:
    """Validate ``m`` as a square, finite, non-empty complex matrix.

    Returns a ``complex128`` copy, so callers may not mutate the input
    through the result.
    """
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def _check_dim(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"port count must be an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"port count must be >= 1, got {n}")
    return int(n)


def _roots_of_unity(exponents: np.ndarray, n: int) -> np.ndarray:
    # w**r = 1j**q * exp(1j*phi) with q the nearest quarter turn and the
    # residual |phi| <= pi/4 formed from an exact integer numerator, so
    # quarter-turn multiples come out exact and the rest to about 1/2 ulp.
    r = np.asarray(exponents, dtype=np.int64) % n
    q = (4 * r + n // 2) // n
    phi = (2 * np.pi / (4 * n)) * (4 * r - q * n)
    return np.take(_QUARTER_ROOTS, q % 4) * np.exp(1j * phi)


def build_dft(n: int) -> np.ndarray:
    """Transition matrix of the symmetric N x N Bell multiport.

    ``U[j, i] = w**(j*i) / sqrt(n)`` with 0-based ``i, j`` and
    ``w = exp(2*pi*1j/n)`` (positive exponent convention).
    """
    n = _check_dim(n)
    k = np.arange(n)
    return math.sqrt(1.0 / n) * _roots_of_unity(np.outer(k, k), n)


def build_lambda(n: int) -> np.ndarray:
    """Diagonal phase matrix ``diag(1, w, w**2, ..., w**(n-1))``."""
    n = _check_dim(n)
    return np.diag(_roots_of_unity(np.arange(n), n))


def cycle_columns(m) -> np.ndarray:
    """Cyclically shift columns left: column ``i`` of the result is column ``i+1`` of ``m``.

    In 1-based terms the result's column ``i`` is column ``mod_n(i) + 1``.
    """
    return np.roll(as_complex_matrix(m), -1, axis=1)


def unitarity_deviation(m) -> float:
    """Max-norm of ``M^H M - I``."""
    a = as_complex_matrix(m)
    return float(np.max(np.abs(a.conj().T @ a - np.eye(a.shape[0]))))


def is_unitary(m, tol: float = EPS_UNITARY) -> bool:
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return unitarity_deviation(m) <= tol


def require_unitary(m, tol: float = EPS_UNITARY) -> np.ndarray:
    """Return ``m`` as a validated complex matrix, raising `NonUnitaryError` otherwise."""
    a = as_complex_matrix(m)
    dev = unitarity_deviation(a)
    if not dev <= tol:
        raise NonUnitaryError(dev, tol)
    return a


def random_unitary(n: int, rng: np.random.Generator | int | None = None) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a complex Gaussian matrix."""
    n = _check_dim(n)
    rng = np.random.default_rng(rng)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_phase_diagonal(n: int, rng: np.random.Generator | int | None = None) -> np.ndarray:
    rng = np.random.default_rng(rng)
    return np.diag(np.exp(2j * np.pi * rng.random(_check_dim(n))))


# --------------------------------------------------------------------------
# Beam splitter / phase plate networks
# --------------------------------------------------------------------------


class ElementKind(enum.Enum):
    BEAM_SPLITTER = "beam_splitter"
    PHASE_PLATE = "phase_plate"


@dataclass(frozen=True)
class NetworkElement:
    """One beam splitter or phase plate acting on ports of an N-port device.

    Ports are 1-based.  For a beam splitter on ports ``(p, q)`` the 2x2
    ``block`` maps inputs ``(p, q)`` to outputs ``(p, q)``; a phase plate
    multiplies the amplitude in port ``p`` by ``exp(1j * phase)``.

    Use the :meth:`beam_splitter` and :meth:`phase_plate` constructors.
    """

    kind: ElementKind
    ports: tuple[int, ...]
    block: tuple[tuple[complex, complex], tuple[complex, complex]] | None = None
    phase: float | None = None

    @classmethod
    def beam_splitter(cls, p: int, q: int, block=None) -> "NetworkElement":
        """Beam splitter between ports ``p`` and ``q``; defaults to the 50:50 Hadamard block."""
        if block is None:
            s = math.sqrt(0.5)
            block = ((s, s), (s, -s))
        b = np.asarray(block, dtype=np.complex128)
        if b.shape != (2, 2):
            raise ValueError(f"beam splitter block must be 2x2, got shape {b.shape}")
        frozen = tuple(tuple(complex(x) for x in row) for row in b)
        return cls(ElementKind.BEAM_SPLITTER, (int(p), int(q)), block=frozen)

    @classmethod
    def phase_plate(cls, p: int, phase: float) -> "NetworkElement":
        return cls(ElementKind.PHASE_PLATE, (int(p),), phase=float(phase))

    def validate(self, n: int, tol: float = EPS_UNITARY) -> None:
        for p in self.ports:
            if not 1 <= p <= n:
                raise ValueError(f"port {p} out of range [1, {n}]")
        if self.kind is ElementKind.BEAM_SPLITTER:
            p, q = self.ports
            if p == q:
                raise ValueError(f"beam splitter needs two distinct ports, got ({p}, {q})")
            require_unitary(np.array(self.block), tol)
        elif not math.isfinite(self.phase):
            raise ValueError("phase must be finite")

    def embed(self, n: int) -> np.ndarray:
        """This element as an n x n matrix (identity on untouched ports)."""
        self.validate(n)
        m = np.eye(n, dtype=np.complex128)
        if self.kind is ElementKind.BEAM_SPLITTER:
            idx = [p - 1 for p in self.ports]
            m[np.ix_(idx, idx)] = np.array(self.block)
        else:
            p = self.ports[0] - 1
            m[p, p] = cmath.exp(1j * self.phase)
        return m


def compose_network(n: int, elements: Iterable[NetworkElement]) -> np.ndarray:
    """Overall transition matrix of a network traversed in list order.

    The first element is the first stage a particle meets, so later elements
    multiply on the left: ``U = E_k @ ... @ E_2 @ E_1``.
    """
    n = _check_dim(n)
    u = np.eye(n, dtype=np.complex128)
    for el in elements:
        u = el.embed(n) @ u
    return u


# --------------------------------------------------------------------------
# Matrix text format
# --------------------------------------------------------------------------


def _format_real(x: float) -> str:
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_complex(z: complex) -> str:
    """Render ``z`` as ``re+imj`` with the shortest round-trip digits.

    >>> format_complex(1)
    '1+0j'
    >>> format_complex(0.5 - 0.25j)
    '0.5-0.25j'
    """
    z = complex(z)
    im = _format_real(z.imag)
    sign = "" if im.startswith("-") else "+"
    return f"{_format_real(z.real)}{sign}{im}j"


def parse_complex(token: str) -> complex:
    """Parse ``re``, ``re+imj``, ``re-imj`` or ``+-imj``; rejects non-finite values."""
    t = token.strip()
    if not t or "(" in t or ")" in t or "J" in t:
        raise ValueError(f"malformed complex entry {token!r}")
    try:
        z = complex(t)
    except ValueError:
        raise ValueError(f"malformed complex entry {token!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex entry {token!r}")
    return z


def dumps_matrix(m) -> str:
    a = as_complex_matrix(m)
    lines = [str(a.shape[0])]
    lines += [" ".join(format_complex(z) for z in row) for row in a]
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ValueError(f"first line must be the dimension, got {lines[0]!r}") from None
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise ValueError(f"expected {n} matrix rows, found {len(rows)}")
    out = np.empty((n, n), dtype=np.complex128)
    for j, row in enumerate(rows):
        tokens = row.split()
        if len(tokens) != n:
            raise ValueError(f"row {j + 1}: expected {n} entries, found {len(tokens)}")
        out[j] = [parse_complex(t) for t in tokens]
    return out


def write_matrix(m, dest: str | os.PathLike | TextIO) -> None:
    text = dumps_matrix(m)
    if isinstance(dest, io.TextIOBase) or hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="ascii") as fh:
            fh.write(text)


def read_matrix(src: str | os.PathLike | TextIO) -> np.ndarray:
    if hasattr(src, "read"):
        return loads_matrix(src.read())
    with open(src, encoding="ascii") as fh:
        return loads_matrix(fh.read())

