"""
Morita equivalence and fractions
================================

Decide Morita equivalence through orbit and isotropy data, then build an
explicit span of s-equivalences and compute with fractions.
"""

from diptych import corpus, morita
from diptych import functor as fn

gs, fs = corpus.groupoids(), corpus.functors()

for a, b in (("banal3", "point"), ("z2", "z3"), ("fix2", "z2+z2"), ("swap", "cech_xx")):
    res = morita.morita_equivalent(gs[a], gs[b])
    print(f"{a} ~ {b}: {res.equivalent}  orders {res.invariant_h.orders} / {res.invariant_g.orders}")

span = morita.morita_witness(gs["banal3"], gs["point"])
print("witness through", span.k)

# fractions compose; the witness for point -> banal(2) after Z/2 -> point
# is the fraction of the functor Z/2 -> banal(2)
w = morita.morita_witness(gs["point"], gs["banal2"]).as_fraction()
composite = morita.compose(w, morita.fraction_of(fs["z2_to_point"]))
direct = morita.fraction_of(fs["z2_to_banal2"])
print("composite", composite.k, "direct", direct.k)
print("equivalent:", morita.equivalent_fractions(composite, direct))

# pulling a fraction back along the square groupoid enlarges it; reduce undoes that
sq = fn.square_groupoid(direct.k)
big = morita.make_fraction(fn.compose(direct.p, sq.pi1), fn.compose(direct.q, sq.pi1))
m = morita.reduce(big)
print(big.k, "->", m.representative.k, "in", len(m.chain), "steps")
print(m.representative.butterfly())
