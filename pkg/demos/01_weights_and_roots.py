"""Weights and roots of B_r in the two coordinate systems used throughout."""
import orthocompact.lattice as L

ctx = L.RankedContext(3)

# fundamental weights in simple-root coordinates; omega_3 is the spin weight
for i in range(1, 4):
    w = ctx.omega(i)
    print(f"omega_{i} = {L.omega_to_alpha(ctx, w)}")

print()
print("positive roots (canonical order):")
for rt in L.positive_roots(ctx):
    print(f"  {rt}  {rt.length:5s}  as weight {L.root_omega(ctx, rt)}")

# the adjoint representation: dominant weights below omega_2
print()
print("dominant weights below omega_2:", L.dominant_below(ctx, (0, 1, 0)))
print("dominant weights below omega_3:", L.dominant_below(ctx, (0, 0, 1)))

# roots that see omega_1
print("Phi+(omega_1):", [str(rt) for rt in L.phi_plus_of(ctx, (1, 0, 0))])
