"""
Permanent cost: Ryser versus the permutation sum
================================================

The permutation sum needs n! products of n factors; the Gray-code Ryser
kernel needs 2**n row-sum updates.  Both agree to rounding.
"""

# %%
import time

import numpy as np

import homport as hp
from homport.matrixfn import permanent_naive

rng = np.random.default_rng(0)
hp.permanent(np.eye(2))  # JIT warm-up

for n in range(2, 9):
    m = hp.random_unitary(n, rng)
    t0 = time.perf_counter()
    a = hp.permanent(m)
    t1 = time.perf_counter()
    b = permanent_naive(m)
    t2 = time.perf_counter()
    print(f"n={n}: ryser {1e6 * (t1 - t0):8.1f} us   naive {1e6 * (t2 - t1):10.1f} us   "
          f"|diff|={abs(a - b):.1e}")

# %%
for n in (16, 20, 22):
    m = hp.random_unitary(n, rng)
    t0 = time.perf_counter()
    hp.permanent(m)
    print(f"n={n}: {time.perf_counter() - t0:.3f} s")
