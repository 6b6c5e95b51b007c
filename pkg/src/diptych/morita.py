"""Orbital structures: Morita equivalence of finite groupoids and fractions ``p/q``.

A fraction from H to G is a span ``H <-q- K -p-> G`` of exactors with q an
s-equivalence.  Its kernels ``R = Ker q`` and ``S = Ker p`` restrict p and q to
the wings ``u: R -> G`` and ``v: S -> H``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import constructions, functor as fn, groupoid as gpd
from .errors import (NotComposable, NotCotransversal, NotExactor, NotSEquivalence,
                     ReductionDiverged, SizeLimitExceeded)
from .finmap import pair_label
from .functor import GroupoidFunctor
from .groupoid import FinGroupoid

MAX_CANONICAL_ORDER = 8


# isotropy invariants

@lru_cache(maxsize=None)
def _canonical(table: tuple) -> tuple:
    """Least relabelled table over orderings fixing the identity, with the relabelling."""
    k = len(table)
    if k > MAX_CANONICAL_ORDER:
        raise SizeLimitExceeded(f"canonical form of a group of order {k} is not computed")
    best, best_perm = None, None
    for rest in itertools.permutations(range(1, k)):
        perm = (0,) + rest            # new index of old element i
        inv = [0] * k
        for old, new in enumerate(perm):
            inv[new] = old
        cand = tuple(tuple(perm[table[inv[i]][inv[j]]] for j in range(k)) for i in range(k))
        if best is None or cand < best:
            best, best_perm = cand, perm
    return best, best_perm


def canonical_group(grp: gpd.IsotropyGroup) -> tuple:
    """``(table, relabel)`` with ``relabel[element] = canonical index``."""
    table, perm = _canonical(grp.table)
    return table, {e: perm[i] for i, e in enumerate(grp.elements)}


@dataclass(frozen=True)
class OrbitalInvariant:
    tables: tuple

    @property
    def orders(self) -> list:
        return [len(t) for t in self.tables]

    def to_json(self) -> list:
        return [[list(r) for r in t] for t in self.tables]


def orbital_invariant(g: FinGroupoid) -> OrbitalInvariant:
    tabs = [canonical_group(gpd.isotropy(g, orb[0]))[0] for orb in gpd.orbits(g)]
    return OrbitalInvariant(tuple(sorted(tabs)))


# skeleton and Morita witnesses

def skeleton(inv: OrbitalInvariant, name: str = "Sk") -> FinGroupoid:
    objects, arrows, comp, units = [], {}, {}, {}
    for i, t in enumerate(inv.tables):
        o = str(i)
        objects.append(o)
        units[o] = pair_label(i, 0)
        for m in range(len(t)):
            arrows[pair_label(i, m)] = (o, o)
            for n in range(len(t)):
                comp[(pair_label(i, m), pair_label(i, n))] = pair_label(i, t[m][n])
    return FinGroupoid(objects, arrows, comp, units=units, name=name, check=False)


def cleavage(g: FinGroupoid, inv: OrbitalInvariant, sk: FinGroupoid) -> GroupoidFunctor:
    """Fully faithful functor onto the skeleton; orbits fill equal slots by least object."""
    slots = {}
    for i, t in enumerate(inv.tables):
        slots.setdefault(t, []).append(i)
    fobj, farr = {}, {}
    for orb in gpd.orbits(g):
        r = orb[0]
        table, relabel = canonical_group(gpd.isotropy(g, r))
        slot = slots[table].pop(0)
        tree = gpd.spanning_tree(g, r)
        for e in orb:
            fobj[e] = str(slot)
            for a in g.out[e]:
                core = g.compose_path(g.inv[tree[g.tgt[a]]], a, tree[e])
                farr[a] = pair_label(slot, relabel[core])
    return GroupoidFunctor(g, sk, fobj, farr, name="cleavage", check=False)


@dataclass
class MoritaSpan:
    k: FinGroupoid
    left: GroupoidFunctor
    right: GroupoidFunctor

    def as_fraction(self) -> "Fraction":
        return make_fraction(self.right, self.left)


@dataclass
class MoritaResult:
    equivalent: bool
    invariant_h: OrbitalInvariant
    invariant_g: OrbitalInvariant
    span: MoritaSpan | None = None


def morita_witness(h: FinGroupoid, g: FinGroupoid, verify: bool = True) -> MoritaSpan:
    inv = orbital_invariant(h)
    sk = skeleton(inv)
    fh, fg = cleavage(h, inv, sk), cleavage(g, inv, sk)
    hg = gpd.product(h, g)
    f = fn.product_functor(fh, fg)
    f = GroupoidFunctor(hg, gpd.product(sk, sk), f.fobj, f.farr, check=False)
    box = fn.square_groupoid(sk)
    ends = fn.pairing_functor(box.pi1, box.pi2, f.target)
    k, to_hg, _ = fn.fibre_product(f, ends, name="K")
    split_obj = {pair_label(x, y): (x, y) for x in h.objects for y in g.objects}
    split_arr = {pair_label(a, b): (a, b) for a in h.arrows for b in g.arrows}
    left = GroupoidFunctor(k, h, {o: split_obj[v][0] for o, v in to_hg.fobj.items()},
                           {a: split_arr[v][0] for a, v in to_hg.farr.items()},
                           name="left", check=False)
    right = GroupoidFunctor(k, g, {o: split_obj[v][1] for o, v in to_hg.fobj.items()},
                            {a: split_arr[v][1] for a, v in to_hg.farr.items()},
                            name="right", check=False)
    if verify:
        for leg in (left, right):
            leg.validate()
            if not fn.is_s_equivalence(leg):
                raise AssertionError("witness leg is not an s-equivalence")
    return MoritaSpan(k, left, right)


def morita_equivalent(h: FinGroupoid, g: FinGroupoid, witness: bool = True) -> MoritaResult:
    ih, ig = orbital_invariant(h), orbital_invariant(g)
    if ih != ig:
        return MoritaResult(False, ih, ig)
    span = morita_witness(h, g) if witness else None
    return MoritaResult(True, ih, ig, span)


# fractions

@dataclass
class Fraction:
    k: FinGroupoid
    p: GroupoidFunctor
    q: GroupoidFunctor

    @property
    def source(self) -> FinGroupoid:
        return self.q.target

    @property
    def target(self) -> FinGroupoid:
        return self.p.target

    @cached_property
    def r(self):
        return fn.kernel(self.q, check=False)

    @cached_property
    def s(self):
        return fn.kernel(self.p, check=False)

    @cached_property
    def u(self) -> GroupoidFunctor:
        return fn.compose(self.p, self.r[1])

    @cached_property
    def v(self) -> GroupoidFunctor:
        return fn.compose(self.q, self.s[1])

    @property
    def is_irreducible(self) -> bool:
        return fn.is_actor(self.u) and fn.is_actor(self.v)

    def butterfly(self) -> dict:
        def cls(w):
            return "actor" if fn.is_actor(w) else "exactor" if fn.is_exactor(w) else "neither"
        return {"R_size": len(self.r[0].arrows), "S_size": len(self.s[0].arrows),
                "u_class": cls(self.u), "v_class": cls(self.v)}


def make_fraction(p: GroupoidFunctor, q: GroupoidFunctor) -> Fraction:
    if p.source != q.source:
        raise NotComposable("p and q need a common source")
    if not fn.is_exactor(p):
        raise NotExactor("p is not an exactor")
    if not fn.is_exactor(q):
        raise NotExactor("q is not an exactor")
    if not fn.is_s_equivalence(q):
        raise NotSEquivalence("q is not an s-equivalence")
    fr = Fraction(p.source, p, q)
    if not gpd.classify(fr.r[0]).is_principal:
        raise AssertionError("kernel of an s-equivalence is not principal")
    if not fn.is_exactor(fr.u):
        bad = [a for a in fr.r[0].arrows if not fr.r[0].is_unit(a)]
        raise NotCotransversal("the wing u is not an exactor", {"R": bad[:5]})
    if not fn.is_exactor(fr.v):
        raise AssertionError("u is an exactor but v is not")
    return fr


def fraction_of(f: GroupoidFunctor) -> Fraction:
    """The fraction ``p(f) / q(f)`` of the holograph."""
    hol = fn.holograph(f)
    return make_fraction(hol.p, hol.q)


def identity_fraction(g: FinGroupoid) -> Fraction:
    return fraction_of(fn.identity_functor(g))


def is_morita_fraction(fr: Fraction) -> bool:
    return fn.is_s_equivalence(fr.p)


@dataclass
class MeromorphismClass:
    representative: Fraction
    chain: list = field(default_factory=list)


def _induced(f: GroupoidFunctor, proj: GroupoidFunctor) -> GroupoidFunctor:
    """The functor through the quotient ``proj`` agreeing with f."""
    fobj, farr = {}, {}
    for x, y in proj.fobj.items():
        if fobj.setdefault(y, f.fobj[x]) != f.fobj[x]:
            raise AssertionError("functor is not constant on quotient objects")
    for a, c in proj.farr.items():
        if farr.setdefault(c, f.farr[a]) != f.farr[a]:
            raise AssertionError("functor is not constant on double cosets")
    return GroupoidFunctor(proj.target, f.target, fobj, farr, name=f.name)


def reduce(fr: Fraction, max_rounds: int = 64) -> MeromorphismClass:
    """Quotient by ``R n S`` until both wings are actors."""
    chain = []
    for _ in range(max_rounds):
        both = [a for a in fr.k.arrows if fr.p.target.is_unit(fr.p.farr[a])
                and fr.q.target.is_unit(fr.q.farr[a]) and not fr.k.is_unit(a)]
        if not both:
            return MeromorphismClass(fr, chain)
        k2, proj = constructions.quotient_by(fr.k, both, name=f"{fr.k.name}'")
        if len(k2.arrows) >= len(fr.k.arrows):
            raise ReductionDiverged("quotient did not shrink the fraction")
        fr = make_fraction(_induced(fr.p, proj), _induced(fr.q, proj))
        chain.append(proj)
    raise ReductionDiverged("reduction did not terminate")


def compose(m2: Fraction, m1: Fraction) -> Fraction:
    """``m2 after m1``: pull ``q2`` back along ``p1`` and compose the outer legs."""
    if m2.q.target != m1.p.target:
        raise NotComposable("the middle groupoids differ")
    l, pr2, pr1 = fn.fibre_product(m2.q, m1.p, name="L")
    return make_fraction(fn.compose(m2.p, pr2), fn.compose(m1.q, pr1))


def fraction_isomorphism(a: Fraction, b: Fraction) -> GroupoidFunctor | None:
    """An iso ``k: a.K -> b.K`` over both legs."""
    if a.p.target != b.p.target or a.q.target != b.q.target:
        return None
    return fn.find_isomorphism(a.k, b.k, over=[(a.p, b.p), (a.q, b.q)])


def equivalent_fractions(a: Fraction, b: Fraction) -> bool:
    """Equal meromorphisms: the irreducible representatives are isomorphic."""
    return fraction_isomorphism(reduce(a).representative, reduce(b).representative) is not None
