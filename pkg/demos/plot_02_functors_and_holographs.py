"""
Classifying functors
====================

Every functor gets two squares of finite sets: one on stars, one on the
transitor.  Their shape decides whether the functor is an actor, an exactor,
an inductor and so on.  The holograph splits any functor into an exactor
and a split s-equivalence.
"""

from diptych import corpus
from diptych import functor as fn
from diptych import groupoid as gpd

fs = corpus.functors()
for name in ("z2_to_point", "point_to_z2", "swap_pr1", "banal3_to_point", "delta_z2"):
    c = fn.classify_functor(fs[name])
    kinds = [k for k in ("actor", "inactor", "exactor", "inductor") if getattr(c, k)]
    print(f"{name:16s} {', '.join(kinds) or '-':32s} s-equivalence={c.is_s_equivalence}")

# the square groupoid of Z/2: one object per arrow
z2 = corpus.groupoids()["z2"]
sq = fn.square_groupoid(z2)
print(sq.box, "isotropy", gpd.isotropy(sq.box, "e").order)

# holograph of the functor picking the unit of Z/2
hol = fn.holograph(fs["point_to_z2"])
print("K =", hol.k)
print("q split s-equivalence:", fn.classify_functor(hol.q).is_split)
print("p exactor:", fn.is_exactor(hol.p))

# kernels of s-equivalences are principal
k, _ = fn.kernel(fs["banal3_to_point"])
print("kernel", k, "principal:", gpd.classify(k).is_principal)
