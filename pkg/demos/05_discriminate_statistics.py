"""
Telling bosons from fermions with one number
============================================

A measured rate of all-port coincidences is compared with the bosonic
prediction ``|perm U|**2`` and the fermionic prediction 1.
"""

# %%
import numpy as np

import homport as hp

u = hp.build_dft(4)
for observed in (0.0, 0.02, 0.5, 0.97, 1.0):
    print(observed, hp.discriminate_statistics(u, observed, tol=0.05).value)

# %%
# Without mixing, both particle types predict a full coincidence and no
# verdict is possible.
print(hp.discriminate_statistics(np.eye(4), 1.0, tol=0.05).value)
