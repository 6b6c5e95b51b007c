"""
Groupoids, orbits and nerves
============================

Build a few finite groupoids, read off their orbit structure and count
simplices of the nerve in its three descriptions.
"""

from diptych import constructions as cons
from diptych import groupoid as gpd

# a group acting on two points by swapping them
z2 = gpd.cyclic(2, labels=["e", "s"])
swap, pr1 = cons.action_groupoid(z2, ["0", "1"], {("e", "0"): "0", ("e", "1"): "1",
                                                  ("s", "0"): "1", ("s", "1"): "0"})
print(swap, gpd.classify(swap).flags())

# the Cech groupoid of a two-chart cover of {x, y, z}
cech, proj = cons.cech_groupoid([["x", "y"], ["y", "z"]])
for orb in gpd.orbits(cech):
    print("orbit", orb, "isotropy order", gpd.isotropy(cech, orb[0]).order)

# Z/2 acting trivially on two points keeps a full isotropy group at each
fix, _ = cons.action_groupoid(z2, ["p", "q"], {("e", "p"): "p", ("e", "q"): "q",
                                               ("s", "p"): "p", ("s", "q"): "q"})
print([gpd.isotropy(fix, o[0]).order for o in gpd.orbits(fix)])

# nerve sizes: paths, common-source wedges and commutative simplices agree
for g in (gpd.banal(3), z2, cech):
    sizes = [len(gpd.nerve(g, n).simplices) for n in range(5)]
    ok = all(gpd.check_nerve_bijections(g, n) for n in range(5))
    print(g.name or g, sizes, "descriptions agree:", ok)

# the nerve sends the generating squares of the cardinal site to good squares
report = gpd.check_nerve_exactness(cech, 3)
print("exact:", report.ok, report.squares_checked, "squares")
