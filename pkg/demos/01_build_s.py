"""
Gluing a triangle along an edge
===============================

Collapse the edge 01 of the standard 2-simplex to a point and look at
what is left.
"""

from ssetlab.limits import pushout_along_mono
from ssetlab.simplicial import coface_map, compose_maps, nondeg, standard_simplex, terminal_map

# The face d2 : Delta^1 -> Delta^2 is a monomorphism, so it can be glued
# along.  The other leg sends Delta^1 to the point.
D1 = standard_simplex(1)
po = pushout_along_mono(
    coface_map(2, 2),
    terminal_map(D1),
    names={"0": "x", "2": "y", "02": "f", "12": "g", "012": "alpha"},
    name="S",
)
S = po.object
print(S)
print("census:", S.census())
print("faces of alpha:", [str(r) for r in S.faces["alpha"]])

# f and g are the images of the two remaining edges of the triangle.
alpha = po.from_mono_cod
f = compose_maps(alpha, coface_map(2, 1))
g = compose_maps(alpha, coface_map(2, 0))
print("f:", {k: str(v) for k, v in f.assignment.items()})
print("g:", {k: str(v) for k, v in g.assignment.items()})

# Degenerate simplices are a generator plus a surjection.  s0 g is
# written g@[0,0,1]; its faces come back through the simplicial identities.
s0g = S.degeneracy(nondeg("g", 1), 0)
print("s0 g =", s0g, " faces:", [str(S.face(s0g, i)) for i in range(3)])

# Every simplicial identity holds.
print("valid:", S.validate().ok)
