import numpy as np
import pytest

from homport.errors import CapExceededError, NonUnitaryError
from homport.fock import ParticleStatistics
from homport.hom import (
    DipReport,
    Verdict,
    dip_report,
    discriminate_statistics,
    parity_sweep,
    verify_cyclic_symmetry,
)
from homport.multiport import build_dft, random_unitary

B = ParticleStatistics.BOSON
F = ParticleStatistics.FERMION


def test_sweep_boson_small():
    reports = parity_sweep(2, 6, B)
    assert [r.n for r in reports] == [2, 3, 4, 5, 6]
    assert [r.n for r in reports if r.is_dip] == [2, 4, 6]
    assert [r.parity for r in reports] == ["even", "odd", "even", "odd", "even"]
    odd = [r for r in reports if r.parity == "odd"]
    assert all(r.coincidence_probability > 1e-3 for r in odd)


def test_sweep_fermion_small():
    for r in parity_sweep(2, 6, F):
        assert abs(r.coincidence_probability - 1) <= 1e-12
        assert not r.is_dip


def test_sweep_single_port():
    (r,) = parity_sweep(1, 1, B)
    assert r.coincidence_probability == 1
    assert not r.is_dip


def test_sweep_boson_full_range():
    for r in parity_sweep(2, 16, B):
        assert r.is_dip == (r.n % 2 == 0)
        if r.is_dip:
            assert r.coincidence_probability <= r.threshold


def test_sweep_fermion_random_unitaries(rng):
    for r in parity_sweep(2, 12, F):
        assert abs(r.coincidence_probability - 1) <= 1e-12
    for n in range(2, 13):
        for _ in range(10):
            r = dip_report(random_unitary(n, rng), F)
            assert abs(r.coincidence_probability - 1) <= 1e-12
            assert not r.is_dip


@pytest.mark.parametrize("lo,hi", [(5, 2), (0, 3), (2, 17)])
def test_sweep_bad_range(lo, hi):
    with pytest.raises(ValueError):
        parity_sweep(lo, hi, B)


def test_sweep_cap_error_type():
    with pytest.raises(CapExceededError):
        parity_sweep(2, 17, B)


def test_report_dict_keys():
    d = dip_report(build_dft(3), B).as_dict()
    assert set(d) == {
        "n", "stats", "parity", "coincidence_probability", "value_re", "value_im",
        "abs_value", "is_dip", "threshold",
    }
    assert isinstance(dip_report(build_dft(3), B), DipReport)


@pytest.mark.parametrize("n,sign", [(4, -1), (5, 1), (1, 1)])
def test_cyclic_examples(n, sign):
    c = verify_cyclic_symmetry(n)
    assert c.passed
    assert c.perm_lambda == pytest.approx(sign, abs=1e-12)


@pytest.mark.parametrize("n", range(1, 13))
def test_cyclic_all(n):
    c = verify_cyclic_symmetry(n)
    assert c.passed
    assert c.column_cycle_deviation <= 1e-15


def test_cyclic_cap():
    with pytest.raises(CapExceededError):
        verify_cyclic_symmetry(13)


def test_discriminate_examples():
    h = build_dft(2)
    assert discriminate_statistics(h, 0.0, 0.05) is Verdict.CONSISTENT_WITH_BOSON
    assert discriminate_statistics(h, 1.0, 0.05) is Verdict.CONSISTENT_WITH_FERMION
    for n in (1, 3, 6):
        assert discriminate_statistics(np.eye(n), 1.0, 0.05) is Verdict.INCONCLUSIVE


def test_discriminate_neither():
    assert discriminate_statistics(build_dft(2), 0.5, 0.05) is Verdict.INCONCLUSIVE


@pytest.mark.parametrize("n", range(2, 13, 2))
def test_discriminate_even_dft_never_inconclusive(n):
    u = build_dft(n)
    assert discriminate_statistics(u, 0.0, 1e-6) is Verdict.CONSISTENT_WITH_BOSON
    assert discriminate_statistics(u, 1.0, 1e-6) is Verdict.CONSISTENT_WITH_FERMION


def test_discriminate_errors():
    with pytest.raises(ValueError):
        discriminate_statistics(build_dft(2), 1.5, 0.05)
    with pytest.raises(NonUnitaryError):
        discriminate_statistics(np.ones((2, 2)), 0.5, 0.05)
