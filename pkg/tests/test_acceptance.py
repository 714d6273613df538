"""Exit criteria.  Each test records one PASS/FAIL line shown in the pytest summary."""

import math
import time

import numpy as np

from homport.fock import ParticleStatistics, coincidence_probability, full_distribution
from homport.hom import verify_cyclic_symmetry
from homport.matrixfn import (
    determinant,
    determinant_naive,
    perm_lambda_parity,
    permanent,
    permanent_naive,
)
from homport.multiport import build_dft, random_phase_diagonal, random_unitary
from homport.oracle import coincidence_from_expansion, expand_output_state
from homport.fock import amplitude, enumerate_configs

B = ParticleStatistics.BOSON
F = ParticleStatistics.FERMION
SEED = 1987


def test_1_even_boson_dip(criterion):
    start = time.perf_counter()
    worst_perm = 0.0
    worst_prob = 0.0
    ok = True
    for n in range(2, 17, 2):
        u = build_dft(n)
        p = permanent(u)
        prob = coincidence_probability(u, B)
        ok &= abs(p) <= 1e-9 * n and prob <= 1e-15
        worst_perm = max(worst_perm, abs(p) / n)
        worst_prob = max(worst_prob, prob)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    criterion(
        1,
        ok,
        f"even n<=16: max|perm|/n={worst_perm:.2e} (<=1e-9), max P={worst_prob:.2e} (<=1e-15), "
        f"{elapsed:.2f}s (<5s)",
    )
    assert ok


def test_2_odd_boson_no_dip(criterion):
    u3 = build_dft(3)
    oracle = coincidence_from_expansion(u3, B)
    naive = abs(permanent_naive(u3)) ** 2
    p3 = coincidence_probability(u3, B)
    ok3 = abs(p3 - 1 / 3) <= 1e-9 and abs(p3 - oracle) <= 1e-9 and abs(naive - 1 / 3) <= 1e-9
    probs = {n: coincidence_probability(build_dft(n), B) for n in (5, 7, 9, 11, 13, 15)}
    below = {n: p for n, p in probs.items() if not p > 1e-4}
    ok = ok3 and not below
    detail = f"P(3)={p3:.12f} (1/3 +- 1e-9: {'ok' if ok3 else 'FAIL'}); "
    detail += ", ".join(f"P({n})={p:.3e}" for n, p in probs.items())
    if below:
        detail += f"; not > 1e-4 at n={sorted(below)}"
    criterion(2, ok, detail)
    assert ok3, "n=3 coincidence probability"
    assert not below, f"odd-n boson coincidence not above 1e-4 at n={sorted(below)}"


def test_3_fermion_perfect_coincidence(criterion):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for n in range(1, 13):
        worst = max(worst, abs(coincidence_probability(build_dft(n), F) - 1))
        for _ in range(10):
            worst = max(worst, abs(coincidence_probability(random_unitary(n, rng), F) - 1))
    ok = worst <= 1e-12
    criterion(3, ok, f"DFT and 10 Haar unitaries per n<=12: max|P-1|={worst:.2e} (<=1e-12)")
    assert ok


def test_4_two_particle_case(criterion):
    u = build_dft(2)
    boson = full_distribution(u, B)
    expected = {(2, 0): 0.5, (1, 1): 0.0, (0, 2): 0.5}
    dev_b = max(abs(boson[c] - p) for c, p in expected.items())
    ok_b = dev_b <= 1e-12 and set(boson.configs) == set(expected)
    fermion = full_distribution(u, F)
    dev_f = abs(fermion[(1, 1)] - 1)
    ok_f = fermion.configs == ((1, 1),) and dev_f <= 1e-12
    ok = ok_b and ok_f
    criterion(4, ok, f"boson max dev={dev_b:.2e}, fermion |P(1,1)-1|={dev_f:.2e} (<=1e-12)")
    assert ok


def test_5_cyclic_symmetry_chain(criterion):
    col = mult = par = 0.0
    branches_ok = True
    for n in range(1, 13):
        c = verify_cyclic_symmetry(n)
        col = max(col, c.column_cycle_deviation)
        mult = max(mult, c.multiplicativity_deviation)
        par = max(par, c.parity_deviation)
        branches_ok &= perm_lambda_parity(n) == (1 if n % 2 else -1)
    ok = col <= 1e-15 and mult <= 1e-12 and par <= 1e-12 and branches_ok
    criterion(
        5,
        ok,
        f"n<=12: column-cycle dev={col:.2e} (<=1e-15), multiplicativity dev={mult:.2e} (<=1e-12), "
        f"perm(Lambda) vs exp(i pi(n+1)) dev={par:.2e}, parity branches {'exact' if branches_ok else 'WRONG'}",
    )
    assert ok


def test_6_oracle_equivalence(criterion):
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    worst_amp = 0.0
    worst_total = 0.0
    for n in range(1, 6):
        for _ in range(20):
            u = random_unitary(n, rng)
            for stats in (B, F):
                nf = expand_output_state(u, stats)
                for cfg in enumerate_configs(n, stats):
                    worst_amp = max(worst_amp, abs(nf.amplitude(cfg) - amplitude(u, cfg, stats)))
                worst_total = max(
                    worst_total,
                    abs(nf.total_probability() - 1),
                    abs(full_distribution(u, stats).total() - 1),
                )
    elapsed = time.perf_counter() - start
    ok = worst_amp <= 1e-10 and worst_total <= 1e-10 and elapsed < 60
    criterion(
        6,
        ok,
        f"n<=5, 20 unitaries, both stats: max amp dev={worst_amp:.2e} (<=1e-10), "
        f"max |total-1|={worst_total:.2e} (<=1e-10), {elapsed:.1f}s (<60s)",
    )
    assert ok


def test_7_phase_robustness(criterion):
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for n in range(1, 9):
        for u in (build_dft(n), random_unitary(n, rng)):
            for stats in (B, F):
                base = full_distribution(u, stats).probabilities
                for v in (random_phase_diagonal(n, rng) @ u, u @ random_phase_diagonal(n, rng)):
                    worst = max(worst, float(np.max(np.abs(full_distribution(v, stats).probabilities - base))))
    ok = worst <= 1e-12
    criterion(7, ok, f"n<=8, left/right phases, both stats: max prob change={worst:.2e} (<=1e-12)")
    assert ok


def test_8_kernel_cross_validation(criterion):
    rng = np.random.default_rng(SEED)
    worst_perm = 0.0
    worst_det = 0.0
    for k in range(100):
        n = 1 + k % 6
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        p, pn = permanent(m), permanent_naive(m)
        d, dn = determinant(m), determinant_naive(m)
        worst_perm = max(worst_perm, abs(p - pn) / abs(pn))
        worst_det = max(worst_det, abs(d - dn) / abs(dn))
    ok = worst_perm <= 1e-12 and worst_det <= 1e-12
    criterion(
        8, ok, f"100 random complex n<=6: Ryser rel err={worst_perm:.2e}, LU det rel err={worst_det:.2e} (<=1e-12)"
    )
    assert ok


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
