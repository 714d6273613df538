"""
Two particles on a 50:50 beam splitter
======================================

The N=2 multiport is the Hadamard matrix.  Bosons entering both ports
always leave together; fermions always leave separately.
"""

# %%
# The transition matrix
import numpy as np

import homport as hp

u = hp.build_dft(2)
print(u)

# %%
# Bosons: half the time both particles exit port 1, half the time port 2,
# never one in each.
bosons = hp.full_distribution(u, hp.BOSON)
for config, p in bosons.items():
    print(config, round(p, 12), np.round(bosons.amplitude(config), 12))

# %%
# Fermions: the only reachable configuration is one particle per port.
fermions = hp.full_distribution(u, hp.FERMION)
print(fermions.as_dict())

# %%
# The same numbers from multiplying out the creation operators term by
# term, without any permanent or determinant.
print(hp.expand_output_state(u, hp.BOSON).amplitudes())
print(hp.expand_output_state(u, hp.FERMION).amplitudes())
