"""Output occupation configurations and scattering amplitudes.

The input state always has one particle in each of the N input ports.  An
output configuration is a tuple ``(n_1, ..., n_N)`` of occupation numbers
summing to N.

Bosonic amplitudes are permanents of the transition matrix with output row
``j`` repeated ``n_j`` times, divided by ``sqrt(prod n_j!)`` so that they are
amplitudes of normalised Fock states.  Fermionic amplitudes exist only for
the all-ones configuration and equal ``det U``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from homport.errors import CapExceededError
from homport.matrixfn import PERMANENT_MAX_DIM, SubmatrixSpec, determinant, permanent_of_spec
from homport.multiport import EPS_UNITARY, _check_dim, require_unitary

FockConfig = tuple[int, ...]

#: Default cap on N for full bosonic distributions (C(2N-1, N) configurations).
BOSON_DISTRIBUTION_MAX_DIM = 12
#: Default cap on N for a single bosonic coincidence probability.
BOSON_COINCIDENCE_MAX_DIM = 16

_CLAMP = 1e-12


class ParticleStatistics(enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"

    @classmethod
    def parse(cls, value) -> "ParticleStatistics":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown particle statistics {value!r}") from None


def _compositions(total: int, parts: int) -> Iterator[FockConfig]:
    # Weak compositions in lexicographically descending order.
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_configs(n: int, stats) -> list[FockConfig]:
    """All reachable output configurations for N particles in N ports.

    Bosons: every weak composition of N into N parts, lexicographically
    descending.  Fermions: only the all-ones configuration.
    """
    n = _check_dim(n)
    if ParticleStatistics.parse(stats) is ParticleStatistics.FERMION:
        return [(1,) * n]
    return list(_compositions(n, n))


def validate_config(config: Sequence[int], n: int, stats) -> FockConfig:
    cfg = tuple(int(k) for k in config)
    if len(cfg) != n:
        raise ValueError(f"configuration has {len(cfg)} ports, matrix has {n}")
    if any(k < 0 for k in cfg):
        raise ValueError(f"occupations must be nonnegative: {cfg}")
    if sum(cfg) != n:
        raise ValueError(f"occupations sum to {sum(cfg)}, expected {n} particles")
    if ParticleStatistics.parse(stats) is ParticleStatistics.FERMION and any(k > 1 for k in cfg):
        raise ValueError(f"fermionic configuration with a multiply occupied port: {cfg}")
    return cfg


def _amplitude(u, cfg, stats, perm_cap=PERMANENT_MAX_DIM) -> complex:
    if stats is ParticleStatistics.FERMION:
        return determinant(u)
    norm = math.prod(math.factorial(k) for k in cfg)
    value = permanent_of_spec(SubmatrixSpec(u, cfg), max_dim=perm_cap)
    return value / math.sqrt(norm)


def _probability(amp: complex) -> float:
    p = abs(amp) ** 2
    if 1.0 < p <= 1.0 + _CLAMP:
        return 1.0
    return p


def amplitude(u, config: Sequence[int], stats, *, tol: float = EPS_UNITARY) -> complex:
    """Amplitude of the normalised output Fock state ``config``."""
    stats = ParticleStatistics.parse(stats)
    a = require_unitary(u, tol)
    cfg = validate_config(config, a.shape[0], stats)
    return _amplitude(a, cfg, stats)


def coincidence_probability(
    u,
    stats,
    *,
    tol: float = EPS_UNITARY,
    max_dim: int | None = BOSON_COINCIDENCE_MAX_DIM,
) -> float:
    """Probability of exactly one particle in every output port.

    ``|perm U|**2`` for bosons, ``|det U|**2`` for fermions.
    """
    stats = ParticleStatistics.parse(stats)
    a = require_unitary(u, tol)
    n = a.shape[0]
    if stats is ParticleStatistics.BOSON and max_dim is not None and n > max_dim:
        raise CapExceededError("boson coincidence probability", n, max_dim)
    cap = PERMANENT_MAX_DIM if max_dim is not None else None
    return _probability(_amplitude(a, (1,) * n, stats, cap))


@dataclass(frozen=True)
class OutputDistribution:
    """Exact output statistics of one scattering run.

    ``configs`` follows :func:`enumerate_configs` order; ``amplitudes`` and
    ``probabilities`` are read-only arrays aligned with it.
    """

    n: int
    stats: ParticleStatistics
    configs: tuple[FockConfig, ...]
    amplitudes: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self):
        for name in ("amplitudes", "probabilities"):
            arr = np.array(getattr(self, name))
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.configs)})

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self):
        return iter(self.configs)

    def __getitem__(self, config: Sequence[int]) -> float:
        """Probability of ``config``; 0 for configurations outside the support."""
        i = self._index.get(tuple(config))
        return 0.0 if i is None else float(self.probabilities[i])

    def amplitude(self, config: Sequence[int]) -> complex:
        i = self._index.get(tuple(config))
        return 0j if i is None else complex(self.amplitudes[i])

    def items(self):
        return zip(self.configs, (float(p) for p in self.probabilities))

    def as_dict(self) -> dict[FockConfig, float]:
        return dict(self.items())

    def total(self) -> float:
        return math.fsum(self.probabilities)


def full_distribution(
    u,
    stats,
    *,
    tol: float = EPS_UNITARY,
    max_dim: int | None = BOSON_DISTRIBUTION_MAX_DIM,
) -> OutputDistribution:
    """Amplitude and probability of every output configuration."""
    stats = ParticleStatistics.parse(stats)
    a = require_unitary(u, tol)
    n = a.shape[0]
    if stats is ParticleStatistics.BOSON and max_dim is not None and n > max_dim:
        raise CapExceededError("boson output distribution", n, max_dim)
    configs = enumerate_configs(n, stats)
    cap = PERMANENT_MAX_DIM if max_dim is not None else None
    amps = np.array([_amplitude(a, cfg, stats, cap) for cfg in configs], dtype=np.complex128)
    probs = np.array([_probability(z) for z in amps])
    return OutputDistribution(n, stats, tuple(configs), amps, probs)
