"""
Building a multiport from beam splitters and phase plates
=========================================================

Networks are applied in list order: the first element is the first stage a
particle meets.  Two layers of 50:50 beam splitters with one quarter-wave
phase plate between them form a 4-port DFT with outputs in bit-reversed
order.
"""

# %%
import math

import numpy as np

import homport as hp
from homport import NetworkElement

network = [
    NetworkElement.beam_splitter(1, 3),
    NetworkElement.beam_splitter(2, 4),
    NetworkElement.phase_plate(4, math.pi / 2),
    NetworkElement.beam_splitter(1, 2),
    NetworkElement.beam_splitter(3, 4),
]
u = hp.compose_network(4, network)
print(np.round(2 * u, 12))
print("unitary:", hp.is_unitary(u, 1e-12))
print("equals DFT with outputs (1,3,2,4):", np.allclose(u, hp.build_dft(4)[[0, 2, 1, 3]]))

# %%
# Relabelling output ports does not change which events are coincidences,
# so four bosons still never leave one per port.
print("P_coinc bosons:", hp.coincidence_probability(u, hp.BOSON))

# %%
# A random network of many elements stays unitary; fermions still always
# leave separately, whatever the network.
rng = np.random.default_rng(7)
elements = []
for _ in range(30):
    p, q = rng.choice(np.arange(1, 6), size=2, replace=False)
    elements.append(NetworkElement.beam_splitter(p, q, hp.random_unitary(2, rng)))
v = hp.compose_network(5, elements)
print("random 5-port: P_boson =", hp.coincidence_probability(v, hp.BOSON),
      " P_fermion =", hp.coincidence_probability(v, hp.FERMION))
