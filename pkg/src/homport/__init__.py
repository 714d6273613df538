"""
homport - multiparticle interference in Bell multiport beam splitters
=====================================================================

Exact scattering of N identical bosons or fermions, one per input port,
through an N x N multiport.  Bosonic amplitudes are permanents of the
transition matrix, fermionic amplitudes are determinants.

Submodules
----------
multiport  transition matrices: DFT multiport, phase diagonal, networks, text I/O
matrixfn   Ryser permanent, determinant and their brute-force oracles
fock       occupation configurations, amplitudes, output distributions
oracle     term-by-term expansion of the output state in creation operators
hom        parity sweeps, cyclic-symmetry checks, statistics discrimination
cli        the ``homport`` command line tool
"""

__version__ = "0.1.0"

from homport.errors import CapExceededError, NonUnitaryError
from homport.multiport import (
    NetworkElement,
    build_dft,
    build_lambda,
    compose_network,
    is_unitary,
    random_unitary,
)
from homport.matrixfn import (
    SubmatrixSpec,
    determinant,
    perm_lambda_parity,
    permanent,
    permanent_of_spec,
)
from homport.fock import (
    OutputDistribution,
    ParticleStatistics,
    amplitude,
    coincidence_probability,
    enumerate_configs,
    full_distribution,
)
from homport.oracle import NormalForm, coincidence_from_expansion, expand_output_state
from homport.hom import (
    DipReport,
    Verdict,
    discriminate_statistics,
    parity_sweep,
    verify_cyclic_symmetry,
)

BOSON = ParticleStatistics.BOSON
FERMION = ParticleStatistics.FERMION
