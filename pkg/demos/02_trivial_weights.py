"""Which weights below lambda are trivial, compared against tensor powers."""
import orthocompact.lattice as L
from orthocompact.charring import oracle_trivial
from orthocompact.triviality import is_trivial, little_brother, trivial_trace

ctx = L.RankedContext(3)

for lam in [(0, 1, 0), (2, 0, 0), (1, 1, 0), (0, 1, 1)]:
    print(f"lambda = {lam}, little brother = {little_brother(ctx, lam)}")
    for mu in L.dominant_below(ctx, lam):
        tr = trivial_trace(ctx, lam, mu)
        w = oracle_trivial(ctx, lam, mu, 8)
        print(f"   mu = {mu}  a = {tr['a']}  trivial = {tr['trivial']!s:5}  oracle: {w}")
    print()

# the criterion only looks at the last coefficient of lambda - mu
lam, mu = (0, 1, 0), (1, 0, 0)
print("omega_2 vs omega_1:", is_trivial(ctx, lam, mu))
