"""Print the truncated posets T(I,2) for SO(7) and SO(9)."""
import orthocompact.lattice as L
from orthocompact.posets import T2_poset, enum_antichains, render

cases = [
    (3, [1, 2], 5), (3, [1], 4),
    (4, [1, 2, 3], 3), (4, [1, 3], 5), (4, [2, 3], 5),
    (4, [1, 2], 4), (4, [2], 5), (4, [1], 6),
]

for r, I, bound in cases:
    p = T2_poset(L.RankedContext(r), I, bound)
    print(render(p, "text"))

# antichains of the SO(7), I = {1} poset classify compactifications over X_I
ctx = L.RankedContext(3)
p = T2_poset(ctx, [1], 4)
ac = enum_antichains(ctx, p, 2)
print(f"{len(ac)} antichains of size <= 2, e.g.",
      [[p.vertices[i] for i in a] for a in ac if len(a) == 2][:3])
