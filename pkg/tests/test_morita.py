import itertools

import pytest

from diptych import constructions as cons
from diptych import corpus
from diptych import functor as fn
from diptych import groupoid as gpd
from diptych import morita
from diptych.errors import (NotComposable, NotCotransversal, NotExactor, NotSEquivalence,
                            SizeLimitExceeded)


def small_groups(max_order):
    z2 = gpd.cyclic(2)
    out = [gpd.cyclic(n) for n in range(1, max_order + 1)]
    if max_order >= 4:
        out.append(gpd.product(z2, z2, name="V4"))
    if max_order >= 6:
        out.append(gpd.symmetric3())
    return out


def groupoids_up_to(max_arrows):
    # every finite groupoid is a sum of pieces banal(n) x group, up to isomorphism
    pieces = [(n * n * len(grp.arrows), n, grp) for n in range(1, 3)
              for grp in small_groups(max_arrows) if n * n * len(grp.arrows) <= max_arrows]
    for k in range(1, max_arrows + 1):
        for combo in itertools.combinations_with_replacement(range(len(pieces)), k):
            if sum(pieces[i][0] for i in combo) > max_arrows:
                continue
            parts = [gpd.product(gpd.banal(pieces[i][1]), pieces[i][2]) for i in combo]
            yield parts[0] if len(parts) == 1 else gpd.disjoint_union(*parts)


def s_equivalences_into(k, g):
    return [f for f in fn.search_functors(k, g) if fn.is_s_equivalence(f)]


@pytest.fixture(scope="module")
def fractions(groupoids, functors):
    out = {name: morita.fraction_of(functors[name])
           for name in ("z2_to_point", "point_to_z2", "z2_to_banal2", "banal2_to_point",
                        "fold", "swap_pr1", "id_z2")}
    for name in ("point", "z2", "banal2"):
        out[f"one_{name}"] = morita.identity_fraction(groupoids[name])
    out["w_pt_b2"] = morita.morita_witness(groupoids["point"], groupoids["banal2"]).as_fraction()
    out["w_b2_pt"] = morita.morita_witness(groupoids["banal2"], groupoids["point"]).as_fraction()
    return out


def enlarge(fr):
    # an equivalent fraction: pull both legs back along pi1 of the square groupoid
    sq = fn.square_groupoid(fr.k)
    return morita.make_fraction(fn.compose(fr.p, sq.pi1), fn.compose(fr.q, sq.pi1))


# invariants

def test_invariant_examples(groupoids):
    assert morita.orbital_invariant(groupoids["banal3"]).orders == [1]
    inv = morita.orbital_invariant(groupoids["z2+z2"])
    assert inv.orders == [2, 2] and inv.tables[0] == inv.tables[1]
    assert morita.orbital_invariant(groupoids["fix2"]).orders == [1, 2]
    assert morita.orbital_invariant(groupoids["s3"]).orders == [6]


def test_canonical_tables_separate_groups_of_order_four():
    z4 = morita.orbital_invariant(gpd.cyclic(4))
    v4 = morita.orbital_invariant(gpd.product(gpd.cyclic(2), gpd.cyclic(2)))
    assert z4.orders == v4.orders == [4] and z4 != v4


def test_canonical_form_is_relabelling_invariant(groupoids):
    g = groupoids["s3"]
    names = {a: f"g{i}" for i, a in enumerate(reversed(g.arrows))}
    h = g.relabel({"*": "*"}, names)
    assert morita.orbital_invariant(h) == morita.orbital_invariant(g)


def test_canonical_form_size_limit():
    with pytest.raises(SizeLimitExceeded):
        morita.orbital_invariant(gpd.cyclic(9))


def test_invariant_preserved_by_s_equivalences():
    for name, q in corpus.s_equivalences().items():
        assert morita.orbital_invariant(q.source) == morita.orbital_invariant(q.target), name


# decisions and witnesses

@pytest.mark.parametrize("n", [2, 3, 4])
def test_banal_is_equivalent_to_point(groupoids, n):
    res = morita.morita_equivalent(groupoids[f"banal{n}"], groupoids["point"])
    assert res.equivalent
    span = res.span
    for leg in (span.left, span.right):
        leg.validate()
        assert fn.classify_functor(leg, split=False).is_s_equivalence
    assert span.left.target == groupoids[f"banal{n}"] and span.right.target == groupoids["point"]


def test_inequivalent_pairs(groupoids):
    assert not morita.morita_equivalent(groupoids["z2"], groupoids["z3"]).equivalent
    assert not morita.morita_equivalent(groupoids["null2"], groupoids["point"]).equivalent
    assert not morita.morita_equivalent(groupoids["fix2"], groupoids["z2+z2"]).equivalent
    assert morita.morita_equivalent(groupoids["swap"], groupoids["cech_xx"]).equivalent


@pytest.mark.parametrize("pair", [("z2", "z3"), ("point", "z2"), ("null2", "point"),
                                  ("z2", "z2+z2")])
def test_no_span_among_small_groupoids(groupoids, pair):
    h, g = groupoids[pair[0]], groupoids[pair[1]]
    bound = len(h.arrows) + len(g.arrows)
    checked = 0
    for k in groupoids_up_to(bound):
        checked += 1
        assert not (s_equivalences_into(k, h) and s_equivalences_into(k, g))
    assert checked > 1


def test_small_groupoid_enumeration_is_complete_at_four_arrows():
    found = list(groupoids_up_to(4))
    # sums of points (4), Z/2 pieces with points (1 + 2 + 1), Z/3 (2), order four (2), banal(2)
    assert len(found) == 4 + 4 + 2 + 2 + 1
    for a, b in itertools.combinations(found, 2):
        assert not fn.are_isomorphic(a, b)


def test_every_groupoid_is_equivalent_to_its_square(groupoids):
    for name, g in groupoids.items():
        box = fn.square_groupoid(g).box
        res = morita.morita_equivalent(g, box, witness=name != "s3")
        assert res.equivalent, name


def test_square_witness_for_s3(groupoids):
    g = groupoids["s3"]
    span = morita.morita_witness(g, fn.square_groupoid(g).box)
    for leg in (span.left, span.right):
        assert fn.classify_functor(leg, split=False).is_s_equivalence


# fractions

def test_identity_pair_is_not_cotransversal(groupoids):
    ident = fn.identity_functor(groupoids["z2"])
    with pytest.raises(NotCotransversal) as err:
        morita.make_fraction(ident, ident)
    assert err.value.witness["R"] == []
    null = fn.identity_functor(groupoids["null2"])
    assert morita.make_fraction(null, null).is_irreducible


def test_make_fraction_errors(groupoids, functors):
    with pytest.raises(NotExactor):
        morita.make_fraction(functors["point_to_z2"], fn.identity_functor(groupoids["point"]))
    with pytest.raises(NotSEquivalence):
        morita.make_fraction(fn.identity_functor(groupoids["z2"]), functors["z2_to_point"])
    with pytest.raises(NotComposable):
        morita.make_fraction(functors["z2_to_point"], functors["point_to_z2"])


def test_butterfly_of_holographs(functors):
    for name, f in functors.items():
        fr = morita.fraction_of(f)
        assert gpd.classify(fr.r[0]).is_principal, name
        b = fr.butterfly()
        assert b["u_class"] in ("actor", "exactor") and b["v_class"] in ("actor", "exactor")
        assert fn.compose(fr.p, fr.r[1]) == fr.u and fn.compose(fr.q, fr.s[1]) == fr.v


def test_witness_fraction_has_principal_wings(groupoids):
    fr = morita.morita_witness(groupoids["banal3"], groupoids["point"]).as_fraction()
    assert morita.is_morita_fraction(fr)
    assert gpd.classify(fr.r[0]).is_principal and gpd.classify(fr.s[0]).is_principal


def test_morita_fraction_examples(groupoids, functors):
    assert morita.is_morita_fraction(morita.identity_fraction(groupoids["z3"]))
    assert not morita.is_morita_fraction(morita.fraction_of(functors["z2_to_point"]))
    assert not morita.is_morita_fraction(morita.fraction_of(functors["point_to_z2"]))


def test_reduce_irreducible_is_unchanged(fractions):
    for fr in fractions.values():
        m = morita.reduce(fr)
        assert m.representative is fr and m.chain == []


def test_reduce_is_idempotent(fractions):
    for name, fr in fractions.items():
        first = morita.reduce(enlarge(fr))
        assert first.representative.is_irreducible, name
        again = morita.reduce(first.representative)
        assert again.representative is first.representative and again.chain == []


def test_reduction_maps_are_s_equivalences(fractions):
    m = morita.reduce(enlarge(fractions["z2_to_banal2"]))
    assert m.chain
    for proj in m.chain:
        assert fn.classify_functor(proj, split=False).is_s_equivalence


def test_equivalent_fractions_share_the_irreducible(fractions):
    for name, fr in fractions.items():
        big = enlarge(fr)
        assert len(big.k.arrows) >= len(fr.k.arrows)
        rep = morita.reduce(big).representative
        assert morita.fraction_isomorphism(rep, fr) is not None, name


def test_identity_fraction_is_irreducible_square(groupoids):
    g = groupoids["z2"]
    fr = morita.identity_fraction(g)
    assert fr.is_irreducible and len(fr.k.arrows) == len(fn.square_groupoid(g).box.arrows)


def test_identity_fractions_are_units(fractions):
    for name, fr in fractions.items():
        left = morita.compose(morita.identity_fraction(fr.target), fr)
        right = morita.compose(fr, morita.identity_fraction(fr.source))
        assert morita.equivalent_fractions(left, fr), name
        assert morita.equivalent_fractions(right, fr), name


def test_composition_is_associative(fractions):
    names = list(fractions)
    triples = [(a, b, c) for a in names for b in names for c in names
               if fractions[a].target == fractions[b].source
               and fractions[b].target == fractions[c].source]
    assert len(triples) > 50
    for a, b, c in triples:
        m1, m2, m3 = fractions[a], fractions[b], fractions[c]
        left = morita.compose(m3, morita.compose(m2, m1))
        right = morita.compose(morita.compose(m3, m2), m1)
        assert morita.equivalent_fractions(left, right), (a, b, c)


def test_composition_needs_matching_middle(fractions):
    with pytest.raises(NotComposable):
        morita.compose(fractions["z2_to_point"], fractions["z2_to_point"])


def test_morita_fractions_compose_to_morita_fractions(fractions):
    fr = morita.compose(fractions["w_pt_b2"], fractions["w_b2_pt"])
    assert morita.is_morita_fraction(fr)


def test_stacked_witnesses_match_direct_witness(groupoids):
    b2, pt, b3 = groupoids["banal2"], groupoids["point"], groupoids["banal3"]
    stacked = morita.compose(morita.morita_witness(pt, b3).as_fraction(),
                             morita.morita_witness(b2, pt).as_fraction())
    direct = morita.morita_witness(b2, b3).as_fraction()
    assert morita.equivalent_fractions(stacked, direct)


def test_extensor_after_witness(groupoids, functors):
    z2, b2 = groupoids["z2"], groupoids["banal2"]
    composite = morita.compose(morita.morita_witness(groupoids["point"], b2).as_fraction(),
                               morita.fraction_of(functors["z2_to_point"]))
    direct = morita.fraction_of(functors["z2_to_banal2"])
    assert composite.source == z2 and composite.target == b2
    assert morita.equivalent_fractions(composite, direct)


def test_fraction_of_s_equivalence_is_morita(groupoids):
    q, f = cons.quotient_by(groupoids["cech_xyz"], groupoids["cech_xyz"].arrows)
    assert morita.is_morita_fraction(morita.fraction_of(f))
    assert morita.morita_equivalent(groupoids["cech_xyz"], q).equivalent
