"""Brute-force expansion of the scattered output state.

Each input particle ``i`` is redirected to output port ``j`` with amplitude
``U[j, i]``, so the output state is the product over inputs of
``sum_j U[j, i] b_j^dagger`` acting on the vacuum.  This module multiplies
that product out term by term (all N**N port choices), brings every
monomial of creation operators into ascending port order using only the
exchange rules of the particle type, and collects coefficients.  No
permanents or determinants are involved, which makes it an independent
check of :mod:`homport.fock`.

Exchange rules:

* bosons: creation operators commute, reordering is free;
* fermions: every adjacent transposition flips the sign, and a repeated
  operator annihilates the term since ``(b_j^dagger)**2 = 0``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

from homport.errors import CapExceededError
from homport.fock import FockConfig, ParticleStatistics, amplitude, enumerate_configs
from homport.multiport import as_complex_matrix

#: Hard cap: N**N monomials, 7**7 = 823543.
ORACLE_MAX_DIM = 7


def sort_with_swaps(seq: Sequence[int]) -> tuple[list[int], int]:
    """Stable bubble sort of ``seq``; returns the sorted list and the number of adjacent swaps.

    Equal neighbours are never swapped.
    """
    out = list(seq)
    swaps = 0
    n = len(out)
    for end in range(n - 1, 0, -1):
        swapped = False
        for k in range(end):
            if out[k] > out[k + 1]:
                out[k], out[k + 1] = out[k + 1], out[k]
                swaps += 1
                swapped = True
        if not swapped:
            break
    return out, swaps


def transposition_parity(seq: Sequence[int]) -> int:
    """+1 if ``seq`` sorts with an even number of adjacent swaps, else -1."""
    return -1 if sort_with_swaps(seq)[1] % 2 else 1


@dataclass(frozen=True)
class NormalForm:
    """Collected coefficients of normally ordered creation-operator monomials.

    ``raw`` maps an occupation configuration to the coefficient of
    ``b_1^dagger**n_1 ... b_N^dagger**n_N |0>`` (not normalised).  The Fock
    state amplitude is ``raw * sqrt(prod n_j!)``.
    """

    n: int
    stats: ParticleStatistics
    raw: dict[FockConfig, complex] = field(repr=False)
    monomial_count: int

    def coefficient(self, config: Sequence[int]) -> complex:
        return self.raw.get(tuple(config), 0j)

    def amplitude(self, config: Sequence[int]) -> complex:
        cfg = tuple(config)
        return self.coefficient(cfg) * math.sqrt(math.prod(math.factorial(k) for k in cfg))

    def amplitudes(self) -> dict[FockConfig, complex]:
        return {cfg: self.amplitude(cfg) for cfg in self.raw}

    def total_probability(self) -> float:
        return math.fsum(abs(a) ** 2 for a in self.amplitudes().values())


def _occupations(sorted_modes: Sequence[int], n: int) -> FockConfig:
    occ = [0] * n
    for j in sorted_modes:
        occ[j] += 1
    return tuple(occ)


def expand_output_state(u, stats) -> NormalForm:
    """Multiply out the output state and normal-order every monomial."""
    stats = ParticleStatistics.parse(stats)
    a = as_complex_matrix(u)
    n = a.shape[0]
    if n > ORACLE_MAX_DIM:
        raise CapExceededError("oracle expansion", n, ORACLE_MAX_DIM)
    fermion = stats is ParticleStatistics.FERMION
    rows = a.tolist()
    cols = range(n)
    raw: dict[FockConfig, complex] = {}
    count = 0
    # modes[i] is the output port chosen by the particle entering port i;
    # the monomial is b_{modes[0]}^dagger ... b_{modes[n-1]}^dagger.
    for modes in itertools.product(range(n), repeat=n):
        count += 1
        coeff = 1 + 0j
        for i in cols:
            coeff *= rows[modes[i]][i]
        ordered, swaps = sort_with_swaps(modes)
        cfg = _occupations(ordered, n)
        if fermion:
            if any(k > 1 for k in cfg):
                continue
            if swaps % 2:
                coeff = -coeff
        raw[cfg] = raw.get(cfg, 0j) + coeff
    raw = {cfg: complex(raw[cfg]) for cfg in sorted(raw, reverse=True)}
    return NormalForm(n, stats, raw, count)


def coincidence_from_expansion(u, stats) -> float:
    """Squared modulus of the one-particle-per-port coefficient."""
    nf = expand_output_state(u, stats)
    return abs(nf.coefficient((1,) * nf.n)) ** 2


def expansion_deviation(u, stats) -> float:
    """Max deviation between oracle amplitudes and :func:`homport.fock.amplitude`.

    Every boson configuration (or the fermion all-ones configuration) is
    compared, including those the oracle found with zero coefficient.
    """
    stats = ParticleStatistics.parse(stats)
    a = as_complex_matrix(u)
    nf = expand_output_state(a, stats)
    configs = enumerate_configs(a.shape[0], stats)
    return max(abs(nf.amplitude(c) - amplitude(a, c, stats)) for c in configs)
