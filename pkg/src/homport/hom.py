"""Generalised Hong-Ou-Mandel experiments on the DFT multiport.

Reports for parity sweeps over N, the cyclic-symmetry argument behind the
even-N boson dip, and a scalar test that decides from a measured
coincidence rate whether the particles behaved as bosons or fermions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from homport.errors import CapExceededError
from homport.fock import (
    BOSON_COINCIDENCE_MAX_DIM,
    ParticleStatistics,
    _amplitude,
    _probability,
)
from homport.matrixfn import (
    PERMANENT_MAX_DIM,
    is_vanishing,
    perm_lambda_closed_form,
    perm_lambda_parity,
    permanent,
    vanishing_tolerance,
)
from homport.multiport import (
    EPS_UNITARY,
    _check_dim,
    build_dft,
    build_lambda,
    cycle_columns,
    require_unitary,
)

CYCLIC_MAX_DIM = 12


@dataclass(frozen=True)
class DipReport:
    """Coincidence outcome for N particles in the N-port DFT multiport.

    ``value`` is perm U (bosons) or det U (fermions); ``is_dip`` is set when
    ``|value|`` is below the shared vanishing tolerance ``threshold``.
    """

    n: int
    stats: ParticleStatistics
    coincidence_probability: float
    value: complex
    is_dip: bool
    parity: str
    threshold: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "stats": self.stats.value,
            "parity": self.parity,
            "coincidence_probability": self.coincidence_probability,
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "abs_value": abs(self.value),
            "is_dip": self.is_dip,
            "threshold": self.threshold,
        }


def dip_report(
    u, stats, *, tol: float = EPS_UNITARY, max_dim: int | None = PERMANENT_MAX_DIM
) -> DipReport:
    """Coincidence report for an arbitrary unitary."""
    stats = ParticleStatistics.parse(stats)
    a = require_unitary(u, tol)
    n = a.shape[0]
    value = _amplitude(a, (1,) * n, stats, max_dim)
    is_dip = stats is ParticleStatistics.BOSON and is_vanishing(value, n)
    return DipReport(
        n=n,
        stats=stats,
        coincidence_probability=_probability(value),
        value=complex(value),
        is_dip=bool(is_dip),
        parity="even" if n % 2 == 0 else "odd",
        threshold=vanishing_tolerance(n),
    )


def parity_sweep(
    n_min: int, n_max: int, stats, *, max_n: int = BOSON_COINCIDENCE_MAX_DIM
) -> list[DipReport]:
    """One :class:`DipReport` per N in ``[n_min, n_max]`` for the DFT multiport."""
    stats = ParticleStatistics.parse(stats)
    n_min = _check_dim(n_min)
    n_max = _check_dim(n_max)
    if n_min > n_max:
        raise ValueError(f"empty range [{n_min}, {n_max}]")
    if n_max > max_n:
        raise CapExceededError("parity sweep", n_max, max_n)
    return [dip_report(build_dft(n), stats, max_dim=max_n) for n in range(n_min, n_max + 1)]


@dataclass(frozen=True)
class CyclicSymmetryCheck:
    n: int
    column_cycle_deviation: float
    multiplicativity_deviation: float
    perm_lambda: complex
    perm_lambda_closed_form: complex
    parity_deviation: float
    tol: float = 1e-12

    @property
    def passed(self) -> bool:
        return (
            self.column_cycle_deviation <= self.tol
            and self.multiplicativity_deviation <= self.tol
            and self.parity_deviation <= self.tol
        )


def verify_cyclic_symmetry(n: int, tol: float = 1e-12) -> CyclicSymmetryCheck:
    """Check the three links of the even-N vanishing argument numerically.

    (a) multiplying the DFT matrix by the phase diagonal on the left only
        cycles its columns;
    (b) perm(Lambda U) = perm(Lambda) * perm(U);
    (c) perm(Lambda) equals exp(i pi (n+1)).
    """
    n = _check_dim(n)
    if n > CYCLIC_MAX_DIM:
        raise CapExceededError("cyclic symmetry check", n, CYCLIC_MAX_DIM)
    u = build_dft(n)
    lam = build_lambda(n)
    lu = lam @ u
    col_dev = float(np.max(np.abs(lu - cycle_columns(u))))
    perm_lam = permanent(lam)
    mult_dev = abs(permanent(lu) - perm_lam * permanent(u))
    closed = perm_lambda_closed_form(n)
    parity_dev = max(abs(perm_lam - closed), abs(perm_lambda_parity(n) - closed))
    return CyclicSymmetryCheck(n, col_dev, mult_dev, perm_lam, closed, parity_dev, tol)


class Verdict(enum.Enum):
    CONSISTENT_WITH_BOSON = "ConsistentWithBoson"
    CONSISTENT_WITH_FERMION = "ConsistentWithFermion"
    INCONCLUSIVE = "Inconclusive"


def discriminate_statistics(u, observed_coincidence: float, tol: float) -> Verdict:
    """Classify a measured all-port coincidence rate as bosonic or fermionic.

    Bosons predict ``|perm U|**2``, fermions predict 1 for any unitary.  A
    verdict is returned only when exactly one prediction lies within ``tol``.
    """
    if not 0.0 <= observed_coincidence <= 1.0:
        raise ValueError(f"observed coincidence {observed_coincidence} is not a probability")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    a = require_unitary(u)
    boson = _probability(_amplitude(a, (1,) * a.shape[0], ParticleStatistics.BOSON))
    fits_boson = abs(observed_coincidence - boson) <= tol
    fits_fermion = abs(observed_coincidence - 1.0) <= tol
    if fits_boson and not fits_fermion:
        return Verdict.CONSISTENT_WITH_BOSON
    if fits_fermion and not fits_boson:
        return Verdict.CONSISTENT_WITH_FERMION
    return Verdict.INCONCLUSIVE
