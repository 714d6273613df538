"""
Why the even-N permanent vanishes
=================================

Left-multiplying the DFT matrix by ``diag(1, w, ..., w**(n-1))`` only
cycles its columns, which leaves the permanent unchanged.  The same product
also multiplies the permanent by the product of the diagonal, which is -1
for even n.  So perm U = -perm U = 0.
"""

# %%
import numpy as np

import homport as hp
from homport.multiport import cycle_columns

n = 6
u = hp.build_dft(n)
lam = hp.build_lambda(n)
print("max |Lambda U - cycled U| =", np.max(np.abs(lam @ u - cycle_columns(u))))
print("perm(Lambda) =", hp.permanent(lam), " closed form:", hp.perm_lambda_parity(n))
print("perm(Lambda U) =", hp.permanent(lam @ u))
print("perm(U)        =", hp.permanent(u))

# %%
# The whole chain for n = 1 .. 12
for k in range(1, 13):
    c = hp.verify_cyclic_symmetry(k)
    print(k, c.passed, f"{c.column_cycle_deviation:.1e}", f"{c.multiplicativity_deviation:.1e}",
          int(round(c.perm_lambda.real)))
