"""Simple subsets: reduction, normality and morphisms between compactifications."""
import orthocompact.lattice as L
from orthocompact import compactify as K

ctx = L.RankedContext(3)
mk = lambda *ws: K.make_simple_subset(ctx, ws)

full = K.normalization(ctx, (0, 1, 0))      # all of Pi^+(omega_2)
bare = mk((0, 1, 0))                        # just omega_2
print("Pi^+(omega_2)       =", full.weights)
print("reduced             =", K.reduce(ctx, full).weights)
print("normal?  full/bare  =", K.is_normal(ctx, full), K.is_normal(ctx, bare))
print("full -> bare        =", K.morphism_exists(ctx, full, bare))
print("bare -> full        =", K.morphism_exists(ctx, bare, full))

# a bigger example: which subsets of Pi^+(2omega_1) give the same variety
lam = (2, 0, 0)
below = L.dominant_below(ctx, lam)
print()
print("Pi^+(2omega_1) =", below)
classes = {}
for mu in below[1:]:
    s = mk(lam, mu)
    classes.setdefault(K.reduce(ctx, s).weights, []).append(mu)
for red, mus in classes.items():
    print(f"  reduced {red} <- {mus}")
