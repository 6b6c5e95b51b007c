import itertools

import hypothesis
import hypothesis.strategies as st
import pytest

from diptych import finmap as fm
from diptych import groupoid as gpd
from diptych.errors import (AxiomViolation, DivisionIllTyped, InputError, NotInjectiveUnit,
                            NotSurjective, NotSurjectiveSource, SizeLimitExceeded,
                            UnknownBaseElement)

NERVE_CORPUS = ["null2", "point", "banal2", "banal3", "banal4", "z2", "z3", "z2+z2",
                "cech_xyz", "cech_xx", "swap", "fix2", "translate3"]


def z2_sketch(**over):
    doc = dict(objects=["*"], arrows=["e", "s"], unit={"*": "e"}, source={"e": "*", "s": "*"},
               division=[["e", "e", "e"], ["s", "s", "e"], ["e", "s", "s"], ["s", "e", "s"]])
    doc.update(over)
    return doc


def path_face(g, path, j):
    # drop vertex j of a path by composing across it
    x, ps = path
    n = len(ps)
    if j == 0:
        return (g.tgt[ps[0]], ps[1:])
    if j == n:
        return (x, ps[:-1])
    return (x, ps[:j - 1] + (g.comp[(ps[j], ps[j - 1])],) + ps[j + 1:])


def path_degeneracy(g, path, j):
    x, ps = path
    xj = x if j == 0 else g.tgt[ps[j - 1]]
    return (x, ps[:j] + (g.unit[xj],) + ps[j:])


def equivalence_relations(n):
    out = set()
    for labels in itertools.product(range(n), repeat=n):
        out.add(frozenset((i, j) for i in range(n) for j in range(n) if labels[i] == labels[j]))
    return sorted(out, key=sorted)


def pull_relation(theta, e):
    return frozenset((i, j) for i in range(theta.source) for j in range(theta.source)
                     if (theta(i), theta(j)) in e)


# validation

def test_sketch_null_and_group():
    g = gpd.from_sketch(["a", "b"], ["ua", "ub"], {"a": "ua", "b": "ub"}, {"ua": "a", "ub": "b"},
                        [["ua", "ua", "ua"], ["ub", "ub", "ub"]])
    assert gpd.classify(g).is_null
    z2 = gpd.from_sketch(**z2_sketch())
    assert z2.inv["s"] == "s" and z2.comp[("s", "s")] == "e"


def test_sketch_errors():
    with pytest.raises(DivisionIllTyped):
        gpd.from_sketch(["a", "b"], ["ua", "ub"], {"a": "ua", "b": "ub"}, {"ua": "a", "ub": "b"},
                        [["ua", "ua", "ua"], ["ub", "ub", "ub"], ["ua", "ub", "ua"]])
    with pytest.raises(NotInjectiveUnit):
        gpd.from_sketch(["a", "b"], ["u"], {"a": "u", "b": "u"}, {"u": "a"}, [["u", "u", "u"]])
    with pytest.raises(NotSurjectiveSource):
        gpd.from_sketch(["a", "b"], ["ua", "ub"], {"a": "ua", "b": "ub"}, {"ua": "a", "ub": "a"},
                        [["ua", "ua", "ua"]])
    with pytest.raises(DivisionIllTyped):
        gpd.from_sketch(**z2_sketch(division=[["e", "e", "e"]]))


def test_compose_form_rejects_broken_law():
    comp = {("s", "s"): "s"}
    with pytest.raises(AxiomViolation) as err:
        gpd.FinGroupoid(["*"], {"e": ("*", "*"), "s": ("*", "*")}, comp, units={"*": "e"})
    assert err.value.witness is not None


def test_compose_form_rejects_bad_endpoints():
    with pytest.raises(InputError):
        gpd.FinGroupoid(["a"], {"f": ("a", "b")}, {})


@pytest.mark.parametrize("name", NERVE_CORPUS + ["s3"])
def test_groupoid_laws(groupoids, name):
    g = groupoids[name]
    for x in g.objects:
        u = g.unit[x]
        assert g.src[u] == g.tgt[u] == x
    for a in g.arrows:
        assert g.inv[g.inv[a]] == a
        assert g.comp[(a, g.inv[a])] == g.unit[g.tgt[a]]
        assert g.div(a, a) == g.unit[g.tgt[a]]
    for (a, b), ab in g.comp.items():
        assert g.src[a] == g.tgt[b] and g.src[ab] == g.src[b] and g.tgt[ab] == g.tgt[a]
    assert fm.compose(g.alpha, g.omega) == fm.identity(g.base)
    assert fm.compose(g.beta, g.omega) == fm.identity(g.base)
    assert fm.compose(g.alpha, g.iota) == g.beta


def test_sketch_roundtrip(groupoids):
    for name in ("z3", "cech_xyz", "fix2"):
        g = groupoids[name]
        sk = g.sketch()
        h = gpd.from_sketch(**sk)
        assert h.comp == g.comp and h.unit == g.unit


# nerve

@pytest.mark.parametrize("name", NERVE_CORPUS)
def test_nerve_bijections(groupoids, name):
    g = groupoids[name]
    for n in range(5):
        assert gpd.check_nerve_bijections(g, n)


@pytest.mark.parametrize("name", NERVE_CORPUS)
def test_nerve_faces_agree_with_path_oracle(groupoids, name):
    g = groupoids[name]
    for n in range(1, 4):
        lvl = gpd.nerve(g, n)
        below = gpd.nerve(g, n - 1)
        above = gpd.nerve(g, n + 1)
        for p, s in lvl.path_to_simplex.items():
            for j in range(n + 1):
                assert below.path_to_simplex[path_face(g, p, j)] == lvl.faces[j][s]
                assert above.path_to_simplex[path_degeneracy(g, p, j)] == lvl.degeneracies[j][s]


def test_nerve_closed_form_counts(groupoids):
    for n in range(5):
        assert len(gpd.nerve(groupoids["null2"], n)) == 2
        for m in (2, 3, 4):
            assert len(gpd.nerve(groupoids[f"banal{m}"], n)) == m ** (n + 1)
        assert len(gpd.nerve(groupoids["z2"], n)) == 2 ** n
        assert len(gpd.nerve(groupoids["z3"], n)) == 3 ** n


def test_nerve_low_levels(groupoids):
    for g in groupoids.values():
        assert len(gpd.nerve(g, 0)) == len(g.objects)
        assert len(gpd.nerve(g, 1)) == len(g.arrows)


def test_wedges_are_division_domain(groupoids):
    for g in groupoids.values():
        lvl = gpd.nerve(g, 2)
        pairs = {fm.pair_label(ws[1], ws[0]) for _, ws in lvl.wedges}
        assert pairs == set(g.wedge_set.elements) == set(g.division.source.elements)


def test_nerve_size_guard(groupoids):
    with pytest.raises(SizeLimitExceeded):
        gpd.nerve(groupoids["banal4"], 6, limit=1000)


@pytest.mark.parametrize("name", NERVE_CORPUS)
def test_nerve_exactness(groupoids, name):
    r = gpd.check_nerve_exactness(groupoids[name], 3)
    assert r.ok, r.witness
    assert r.squares_checked > 0


def test_exactness_needs_level_two(groupoids):
    with pytest.raises(InputError):
        gpd.check_nerve_exactness(groupoids["z2"], 1)


def test_equivalence_relations_are_not_exact():
    x = gpd.SimplicialData({k: equivalence_relations(k) for k in range(1, 5)}, pull_relation)
    r = gpd.check_exactness(x)
    assert not r.ok
    assert r.witness["reason"] == "not a pullback" and "square" in r.witness


def test_truncated_nerve_is_not_exact(groupoids):
    g = groupoids["banal2"]
    x = gpd.nerve_simplicial_data(g, 3)
    nondegenerate = [s for s in x.levels[3] if len(set(s.vertices)) == 2
                     and s.vertices[0] == s.vertices[2]]
    x = gpd.SimplicialData({k: [s for s in v if s != nondegenerate[0]] for k, v in x.levels.items()},
                           gpd.simplex_action)
    r = gpd.check_exactness(x)
    assert not r.ok and r.witness


# orbits and classification

def test_orbits_and_isotropy(groupoids):
    assert gpd.orbits(groupoids["banal3"]) == [("0", "1", "2")]
    assert gpd.isotropy(groupoids["banal3"], "0").order == 1
    assert gpd.orbits(groupoids["null2"]) == [("a",), ("b",)]
    assert gpd.orbits(groupoids["swap"]) == [("0", "1")]
    assert gpd.isotropy(groupoids["swap"], "1").order == 1
    iso = gpd.isotropy(groupoids["s3"], "*")
    assert iso.order == 6 and iso.elements[0] == "012"
    with pytest.raises(UnknownBaseElement):
        gpd.isotropy(groupoids["z2"], "nowhere")


def test_isotropy_tables_are_groups(groupoids):
    for g in groupoids.values():
        for orb in gpd.orbits(g):
            t = gpd.isotropy(g, orb[0]).table
            k = len(t)
            assert all(t[0][i] == t[i][0] == i for i in range(k))
            assert all(sorted(row) == list(range(k)) for row in t)
            assert all(t[t[a][b]][c] == t[a][t[b][c]]
                       for a in range(k) for b in range(k) for c in range(k))


def test_classification_examples(groupoids):
    b = gpd.classify(groupoids["banal3"])
    assert b.is_godement and b.is_principal and b.is_s_transitive
    assert len(b.orbit_map.target) == 1
    z = gpd.classify(groupoids["z2"])
    assert not z.is_godement and z.is_plurigroup and z.is_s_transitive
    assert len(z.regular_pi.target) == 1
    c = gpd.classify(groupoids["cech_xyz"])
    assert c.is_godement and c.is_principal and len(c.orbit_map.target) == 3


def test_classification_implications(groupoids):
    for g in groupoids.values():
        c = gpd.classify(g)
        assert not c.is_principal or c.is_godement
        assert not c.is_null or c.is_plurigroup
        assert fm.compose(c.regular_tau, c.regular_pi) == g.transitor
        assert c.regular_tau.is_injective() and c.regular_pi.is_surjective()


def test_godement_property(groupoids):
    for name, g in groupoids.items():
        if g.transitor.is_injective():
            amap = gpd.principal_isomorphism(g)
            assert amap is not None, name
            assert gpd.classify(g).is_principal
        else:
            assert not gpd.classify(g).is_godement


def test_principal_of_examples():
    q = fm.FiniteMap(fm.FiniteSet("012"), fm.FiniteSet("xy"), {"0": "x", "1": "x", "2": "y"})
    assert len(gpd.principal_of(q).arrows) == 5
    ident = gpd.principal_of(fm.identity(fm.FiniteSet("ab")))
    assert gpd.classify(ident).is_null
    to_point = gpd.principal_of(fm.unique_map(fm.FiniteSet("abc"), fm.FiniteSet("*")))
    assert gpd.classify(to_point).is_banal
    with pytest.raises(NotSurjective):
        gpd.principal_of(fm.FiniteMap(fm.FiniteSet("a"), fm.FiniteSet("xy"), {"a": "x"}))


@st.composite
def surjections(draw):
    n = draw(st.integers(1, 5))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    used = sorted(set(labels))
    return fm.FiniteMap(fm.cardinal(n), fm.FiniteSet([f"q{c}" for c in used]),
                        [f"q{c}" for c in labels])


@hypothesis.given(surjections())
def test_principal_of_recovers_its_quotient(q):
    r = gpd.principal_of(q)
    c = gpd.classify(r)
    assert c.is_principal
    assert len(r.arrows) == sum(len(q.fibre(y)) ** 2 for y in q.target)
    # the recovered orbit map has the same fibres as q
    assert {frozenset(c.orbit_map.fibre(y)) for y in c.orbit_map.target} == \
        {frozenset(q.fibre(y)) for y in q.target}
    # (alpha, beta, q, q) is a perfect square and a pushout
    sq = fm.SquareData(r.beta, r.alpha, q, q)
    assert fm.is_pullback(sq) and fm.is_pushout(sq)


def test_product_and_union_counts(groupoids):
    p = gpd.product(groupoids["z2"], groupoids["banal2"])
    assert len(p.arrows) == 8 and len(p.objects) == 2
    u = gpd.disjoint_union(groupoids["z2"], groupoids["z3"])
    assert len(u.arrows) == 5 and len(gpd.orbits(u)) == 2


def test_subgroupoid_units(groupoids):
    g = groupoids["banal3"]
    sub = gpd.subgroupoid(g, list(g.unit.values()))
    assert gpd.classify(sub).is_null
