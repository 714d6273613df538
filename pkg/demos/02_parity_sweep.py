"""
Coincidences versus particle number
===================================

For the N-port DFT multiport, N bosons never produce a click in every
detector when N is even.  Odd N gives a nonzero (sometimes tiny) rate;
fermions always give a full coincidence.
"""

# %%
import homport as hp

print(f"{'n':>3} {'parity':>6} {'P_boson':>12} {'dip':>5} {'P_fermion':>10}")
bosons = hp.parity_sweep(1, 16, hp.BOSON)
fermions = hp.parity_sweep(1, 16, hp.FERMION)
for b, f in zip(bosons, fermions):
    print(f"{b.n:>3} {b.parity:>6} {b.coincidence_probability:12.4e} {str(b.is_dip):>5} "
          f"{f.coincidence_probability:10.6f}")

# %%
# The odd-N rates vary a lot: n=9 and n=15 are small but clearly not zero
# compared with the even-N values, which sit at the rounding floor.
odd = {r.n: r.coincidence_probability for r in bosons if r.parity == "odd"}
even = max(r.coincidence_probability for r in bosons if r.parity == "even")
print("smallest odd-N rate:", min(odd.values()), "largest even-N rate:", even)
