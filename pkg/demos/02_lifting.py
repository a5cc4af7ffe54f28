"""
Lifting problems
================

Inner horns, inner fibrations and a map that does not lift against
itself.
"""

from ssetlab.hom import enumerate_maps
from ssetlab.lifting import has_rlp, is_inner_fibration, is_quasicategory
from ssetlab.limits import arrow_iso_search, pullback
from ssetlab.scenario import build_objects, horn_faces
from ssetlab.simplicial import horn_inclusion, identity_map

env = build_objects()
S, f, alpha = env["S"], env["f"], env["alpha"]

# Pulling f back along the triangle alpha gives the inclusion of the
# horn Lambda^2_0, a map between nerves of categories.
pb = pullback(f, alpha)
print("pullback census:", pb.object.census())
print("is Lambda^2_0 -> Delta^2:", arrow_iso_search(pb.proj_right, horn_inclusion(2, 0)) is not None)

# The direct check only looks at horns up to a bound.
res = is_inner_fibration(f, 4)
print("f lifts against inner horns up to n = 4:", res.holds)
for n, k, count in res.horns:
    print(f"  Lambda^{n}_{k}: {count} squares")

# f does not lift against itself: the square with identities on both
# sides has no diagonal, since S has only three maps to Delta^1.
rlp = has_rlp(f, f)
u, v = rlp.witness
print("self lift:", rlp.holds, "| witness is (id, id):", u == identity_map(env["Delta1"]) and v == identity_map(S))
print("|Hom(S, Delta^1)| =", len(enumerate_maps(S, env["Delta1"])))

# S itself is not a quasi-category.
q = is_quasicategory(S, 3, exhaustive=True)
for (n, k), sq in sorted(q.failures.items()):
    print(f"unfillable Lambda^{n}_{k}:", horn_faces(sq["u"], n))
