"""
Filling horns and the fundamental category
==========================================

Attach fillers for inner horns a few times, then compute the fundamental
category of S.
"""

from ssetlab.homotopy import ho_functor, is_cat_iso, tau1
from ssetlab.lifting import bijective_on_vertices, fill_inner_horns
from ssetlab.scenario import build_objects
from ssetlab.simplicial import compose_maps, is_monomorphism

env = build_objects()
S, f = env["S"], env["f"]

# Each step attaches one simplex per unfilled inner horn.  The process
# never stops for S, so only a bounded number of steps is run.
tr = fill_inner_horns(S, 3, 2)
print("attached per step:", tr.per_step)
print("census after filling:", tr.result.census())
print("all attachments inner:", tr.is_inner())
jf = compose_maps(tr.inclusion, f)
print("j o f mono:", is_monomorphism(jf), "| bijective on vertices:", bijective_on_vertices(jf))

# In the fundamental category the two edges become the same arrow.
t = tau1(S)
C = t.category
print("objects:", C.objects)
print("arrows:", C.all_arrows())
print("edge labels:", {str(k): v for k, v in t.labels.items() if not k.is_degenerate()})
print("ho(f) is an isomorphism:", is_cat_iso(ho_functor(f, tau1(f.domain), t)))
