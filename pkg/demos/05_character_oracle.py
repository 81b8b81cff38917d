"""The character-theoretic oracle: Freudenthal multiplicities and Klimyk tensor products."""
import numpy as np

import orthocompact.lattice as L
from orthocompact import charring as C

ctx = L.RankedContext(3)

for lam in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]:
    print(lam, "dim", C.weyl_dim(ctx, lam), "dominant mults", C.dominant_weight_mults(ctx, lam))

print()
t = C.tensor(ctx, (1, 0, 0), (0, 0, 1))
print("V(omega_1) x V(omega_3) =", t)

# how many distinct irreducibles occur in V(omega_1)^n
dims = []
for n in range(1, 5):
    cons = C.tensor_power_constituents(ctx, (1, 0, 0), n)
    dims.append(len(cons))
print("number of distinct constituents of V(omega_1)^n, n=1..4:", np.array(dims))
