"""Functors between finite groupoids and the A(f) / T(f) classification.

Searches for functors (sections, isomorphisms, natural transformations) share
one technique: on each connected component of the source pick the least object
as root, choose its image and a homomorphism of vertex groups, then choose
images of the spanning-tree arrows.  Every other arrow is then forced, since
``h = t_e' (t_e'^-1 h t_e) t_e^-1`` with the middle factor in the root group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

from . import engine, finmap, groupoid as gpd
from .errors import NotAFunctor, NotAnExactor, SizeLimitExceeded
from .finmap import FiniteMap, pair_label
from .groupoid import FinGroupoid

FINSET = engine.FinSet()


class GroupoidFunctor:
    """Object map ``fobj: E -> B`` and arrow map ``farr: H -> G``."""

    def __init__(self, source: FinGroupoid, target: FinGroupoid, object_map: dict,
                 arrow_map: dict, name: str = "", check: bool = True):
        self.source, self.target, self.name = source, target, name
        self.fobj = {str(k): str(v) for k, v in object_map.items()}
        self.farr = {str(k): str(v) for k, v in arrow_map.items()}
        if check:
            self.validate()

    def validate(self):
        h, g = self.source, self.target
        if set(self.fobj) != set(h.objects) or set(self.farr) != set(h.arrows):
            raise NotAFunctor("maps are not total on the source", None)
        if not set(self.fobj.values()) <= set(g.objects):
            raise NotAFunctor("object image outside the target", None)
        if not set(self.farr.values()) <= set(g.arrows):
            raise NotAFunctor("arrow image outside the target", None)
        for x, u in h.unit.items():
            if self.farr[u] != g.unit[self.fobj[x]]:
                raise NotAFunctor("units are not preserved", {"object": x})
        for a in h.arrows:
            fa = self.farr[a]
            if g.src[fa] != self.fobj[h.src[a]] or g.tgt[fa] != self.fobj[h.tgt[a]]:
                raise NotAFunctor("sources or targets are not preserved", {"arrow": a})
        for (a, b), ab in h.comp.items():
            if g.comp[(self.farr[a], self.farr[b])] != self.farr[ab]:
                raise NotAFunctor("composition is not preserved", {"pair": [a, b]})
        return self

    def __call__(self, a):
        return self.farr[a]

    def __eq__(self, other):
        return (isinstance(other, GroupoidFunctor) and self.source == other.source
                and self.target == other.target and self.fobj == other.fobj
                and self.farr == other.farr)

    def __hash__(self):
        return hash(tuple(sorted(self.farr.items())))

    def __repr__(self):
        return f"<functor {self.name or '?'}: {self.source!r} -> {self.target!r}>"

    @cached_property
    def object_finmap(self) -> FiniteMap:
        return FiniteMap(self.source.base, self.target.base, self.fobj)

    @cached_property
    def arrow_finmap(self) -> FiniteMap:
        return FiniteMap(self.source.arrow_set, self.target.arrow_set, self.farr)


def identity_functor(g: FinGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(g, g, {x: x for x in g.objects}, {a: a for a in g.arrows},
                           name="id", check=False)


def compose(g: GroupoidFunctor, f: GroupoidFunctor, check: bool = False) -> GroupoidFunctor:
    """g after f."""
    if f.target != g.source:
        raise NotAFunctor("functors are not composable", None)
    return GroupoidFunctor(f.source, g.target, {x: g.fobj[y] for x, y in f.fobj.items()},
                           {a: g.farr[b] for a, b in f.farr.items()},
                           name=f"{g.name}.{f.name}", check=check)


# classification

@dataclass(frozen=True)
class FunctorClass:
    is_i_functor: bool
    is_s_functor: bool
    actor: bool
    inactor: bool
    exactor: bool
    inductor: bool
    i_faithful: bool
    s_full: bool
    is_essentially_surjective: bool
    is_s_equivalence: bool
    is_s_extensor: bool
    is_split: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def a_square(f: GroupoidFunctor) -> engine.Square:
    return engine.Square(f.arrow_finmap, f.source.alpha, f.object_finmap, f.target.alpha)


def t_square(f: GroupoidFunctor) -> engine.Square:
    f0 = f.object_finmap
    return engine.Square(f.arrow_finmap, f.source.transitor, finmap.product_map(f0, f0),
                         f.target.transitor)


def is_essentially_surjective(f: GroupoidFunctor) -> bool:
    hit = set(f.fobj.values())
    return all(any(x in hit for x in orb) for orb in gpd.orbits(f.target))


def classify_functor(f: GroupoidFunctor, split: bool = True) -> FunctorClass:
    a = engine.classify_square(a_square(f), FINSET)
    t = engine.classify_square(t_square(f), FINSET)
    onto = f.object_finmap.is_surjective()
    return FunctorClass(
        is_i_functor=f.arrow_finmap.is_injective(),
        is_s_functor=f.arrow_finmap.is_surjective(),
        actor=a.good_pullback, inactor=a.i_faithful, exactor=a.s_full,
        inductor=t.good_pullback, i_faithful=t.i_faithful, s_full=t.s_full,
        is_essentially_surjective=is_essentially_surjective(f),
        is_s_equivalence=t.good_pullback and onto,
        is_s_extensor=t.s_full and onto,
        is_split=find_section(f) is not None if split else False,
    )


def is_exactor(f: GroupoidFunctor) -> bool:
    return engine.classify_square(a_square(f), FINSET).s_full


def is_actor(f: GroupoidFunctor) -> bool:
    return engine.classify_square(a_square(f), FINSET).good_pullback


def is_s_equivalence(f: GroupoidFunctor) -> bool:
    return (f.object_finmap.is_surjective()
            and engine.classify_square(t_square(f), FINSET).good_pullback)


def kernel(f: GroupoidFunctor, check: bool = True):
    """Wide subgroupoid of arrows sent to units, with its inclusion."""
    if check and not is_exactor(f):
        raise NotAnExactor("kernel is only taken for exactors")
    g = f.target
    keep = [a for a in f.source.arrows if g.is_unit(f.farr[a])]
    k = gpd.subgroupoid(f.source, keep, name=f"Ker {f.name}".strip(), check=False)
    incl = GroupoidFunctor(k, f.source, {x: x for x in k.objects}, {a: a for a in k.arrows},
                           name="incl", check=False)
    return k, incl


def restrict(f: GroupoidFunctor, incl: GroupoidFunctor) -> GroupoidFunctor:
    return compose(f, incl)


# square groupoid and the canonical actor

@dataclass
class SquareGroupoid:
    box: FinGroupoid
    omega: GroupoidFunctor
    pi1: GroupoidFunctor
    pi2: GroupoidFunctor


def square_label(a, b, u) -> str:
    return pair_label(a, b, u)


def square_groupoid(g: FinGroupoid, limit: int = 100_000) -> SquareGroupoid:
    """Objects are the arrows of g; ``(a, b, u): u -> b u a^-1``."""
    size = sum(len(g.out[g.src[u]]) * len(g.out[g.tgt[u]]) for u in g.arrows)
    if size > limit:
        raise SizeLimitExceeded(f"square groupoid would have {size} arrows")
    arrows, parts = {}, {}
    for u in g.arrows:
        for a in g.out[g.src[u]]:
            for b in g.out[g.tgt[u]]:
                lab = square_label(a, b, u)
                arrows[lab] = (u, g.compose_path(b, u, g.inv[a]))
                parts[lab] = (a, b, u)
    comp = {}
    for lab, (a, b, u) in parts.items():
        v = arrows[lab][1]
        for a2 in g.out[g.src[v]]:
            for b2 in g.out[g.tgt[v]]:
                comp[(square_label(a2, b2, v), lab)] = square_label(g.comp[(a2, a)],
                                                                   g.comp[(b2, b)], u)
    units = {u: square_label(g.unit[g.src[u]], g.unit[g.tgt[u]], u) for u in g.arrows}
    box = FinGroupoid(g.arrows, arrows, comp, units=units, name=f"Sq({g.name})", check=False)
    pi1 = GroupoidFunctor(box, g, dict(g.src), {k: p[0] for k, p in parts.items()},
                          name="pi1", check=False)
    pi2 = GroupoidFunctor(box, g, dict(g.tgt), {k: p[1] for k, p in parts.items()},
                          name="pi2", check=False)
    omega = GroupoidFunctor(g, box, dict(g.unit),
                            {a: square_label(a, a, g.unit[g.src[a]]) for a in g.arrows},
                            name="omega", check=False)
    return SquareGroupoid(box, omega, pi1, pi2)


def delta_functor(g: FinGroupoid) -> GroupoidFunctor:
    """The division functor from the principal groupoid of the source map onto g."""
    tri = gpd.principal_of(g.alpha, name=f"Tri({g.name})")
    arrow_map = {}
    for lab in tri.arrows:
        x, y = tri.src[lab], tri.tgt[lab]
        arrow_map[lab] = g.div(y, x)
    return GroupoidFunctor(tri, g, dict(g.tgt), arrow_map, name="delta", check=False)


# fibre products

def fibre_product(f: GroupoidFunctor, g: GroupoidFunctor, name: str = ""):
    """Levelwise pullback ``A x_C B`` of ``f: A -> C`` and ``g: B -> C`` with projections."""
    if f.target != g.target:
        raise NotAFunctor("fibre product needs a common target", None)
    a, b = f.source, g.source
    by_obj, by_arr = {}, {}
    for y, c in g.fobj.items():
        by_obj.setdefault(c, []).append(y)
    for k, c in g.farr.items():
        by_arr.setdefault(c, []).append(k)
    objects = {pair_label(x, y): (x, y) for x, c in f.fobj.items() for y in by_obj.get(c, ())}
    parts = {pair_label(h, k): (h, k) for h, c in f.farr.items() for k in by_arr.get(c, ())}
    arrows = {lab: (pair_label(a.src[h], b.src[k]), pair_label(a.tgt[h], b.tgt[k]))
              for lab, (h, k) in parts.items()}
    label = {hk: lab for lab, hk in parts.items()}
    comp = {}
    for lab, (h, k) in parts.items():
        for h2 in a.out[a.tgt[h]]:
            for k2 in by_arr.get(f.farr[h2], ()):
                if b.src[k2] == b.tgt[k]:
                    comp[(label[(h2, k2)], lab)] = label[(a.comp[(h2, h)], b.comp[(k2, k)])]
    units = {lab: pair_label(a.unit[x], b.unit[y]) for lab, (x, y) in objects.items()}
    p = FinGroupoid(objects, arrows, comp, units=units, name=name or "pullback", check=False)
    p1 = GroupoidFunctor(p, a, {k: v[0] for k, v in objects.items()},
                         {k: v[0] for k, v in parts.items()}, name="pr1", check=False)
    p2 = GroupoidFunctor(p, b, {k: v[1] for k, v in objects.items()},
                         {k: v[1] for k, v in parts.items()}, name="pr2", check=False)
    return p, p1, p2


def product_functor(f: GroupoidFunctor, g: GroupoidFunctor) -> GroupoidFunctor:
    src, tgt = gpd.product(f.source, g.source), gpd.product(f.target, g.target)
    return GroupoidFunctor(
        src, tgt,
        {pair_label(x, y): pair_label(f.fobj[x], g.fobj[y]) for x in f.source.objects
         for y in g.source.objects},
        {pair_label(a, b): pair_label(f.farr[a], g.farr[b]) for a in f.source.arrows
         for b in g.source.arrows}, check=False)


def pairing_functor(f: GroupoidFunctor, g: GroupoidFunctor, tgt: FinGroupoid) -> GroupoidFunctor:
    """``(f, g)`` into the product groupoid ``tgt`` of the two targets."""
    return GroupoidFunctor(f.source, tgt,
                           {x: pair_label(f.fobj[x], g.fobj[x]) for x in f.source.objects},
                           {a: pair_label(f.farr[a], g.farr[a]) for a in f.source.arrows},
                           check=False)


@dataclass
class Holograph:
    k: FinGroupoid
    q: GroupoidFunctor
    p: GroupoidFunctor
    square: SquareGroupoid


def holograph(f: GroupoidFunctor) -> Holograph:
    """Pullback of ``pi1: Sq G -> G`` along f, with ``q`` to H and ``p = pi2`` to G."""
    sq = square_groupoid(f.target)
    k, pr_h, pr_sq = fibre_product(f, sq.pi1, name=f"Hol({f.name})")
    q = GroupoidFunctor(k, f.source, pr_h.fobj, pr_h.farr, name="q", check=False)
    p = compose(sq.pi2, pr_sq)
    p.name = "p"
    return Holograph(k, q, p, sq)


# functor search

def _vertex_homs(h, r, g, b, arrow_ok, injective):
    """Homomorphisms ``Aut_h(r) -> Aut_g(b)`` respecting ``arrow_ok``, in order."""
    els = gpd.isotropy(h, r).elements
    targets = gpd.isotropy(g, b).elements
    assigned = {}

    def consistent(x):
        fx = assigned[x]
        for y, fy in assigned.items():
            for p, q in ((x, y), (y, x)):
                pq = h.comp[(p, q)]
                if pq in assigned and assigned[pq] != g.comp[(assigned[p], assigned[q])]:
                    return False
        return not injective or list(assigned.values()).count(fx) == 1

    def rec(i):
        if i == len(els):
            yield dict(assigned)
            return
        x = els[i]
        cands = [g.unit[b]] if i == 0 else targets
        for c in cands:
            if not arrow_ok(x, c):
                continue
            assigned[x] = c
            if consistent(x):
                yield from rec(i + 1)
            del assigned[x]

    yield from rec(0)


def search_functors(h: FinGroupoid, g: FinGroupoid, obj_ok: Callable = None,
                    arrow_ok: Callable = None, injective: bool = False,
                    budget: int = 2_000_000) -> Iterator[GroupoidFunctor]:
    """Every functor ``h -> g`` with ``obj_ok(e, b)`` and ``arrow_ok(a, c)`` on all cells.

    With ``injective`` the object map and the vertex homomorphisms are injective,
    so the functor is injective on arrows.
    """
    obj_ok = obj_ok or (lambda e, b: True)
    arrow_ok = arrow_ok or (lambda a, c: True)
    comps = []
    for orb in gpd.orbits(h):
        r = orb[0]
        tree = gpd.spanning_tree(h, r)
        order = list(tree)
        # arrows of the component grouped by the later of their two endpoints in BFS order
        pos = {e: i for i, e in enumerate(order)}
        by_last = {e: [] for e in order}
        for e in order:
            for a in h.out[e]:
                by_last[order[max(pos[e], pos[h.tgt[a]])]].append(a)
        comps.append((r, tree, order, by_last))
    fobj, farr, used = {}, {}, set()
    steps = [0]

    def image(a, tree, phi):
        s, t = h.src[a], h.tgt[a]
        core = h.compose_path(h.inv[tree[t]], a, tree[s])
        return g.compose_path(farr[tree[t]], phi[core], g.inv[farr[tree[s]]])

    def place(ci):
        if ci == len(comps):
            yield GroupoidFunctor(h, g, dict(fobj), dict(farr), check=False)
            return
        r, tree, order, by_last = comps[ci]
        for b in g.objects:
            if (injective and b in used) or not obj_ok(r, b):
                continue
            for phi in _vertex_homs(h, r, g, b, arrow_ok, injective):
                fobj[r] = b
                used.add(b)
                farr[tree[r]] = g.unit[b]
                if all(arrow_ok(a, image(a, tree, phi)) for a in by_last[r]):
                    for a in by_last[r]:
                        farr[a] = image(a, tree, phi)
                    yield from extend(ci, 1, phi)
                used.discard(b)
                for a in by_last[r]:
                    farr.pop(a, None)
                del fobj[r]

    def extend(ci, i, phi):
        r, tree, order, by_last = comps[ci]
        if i == len(order):
            yield from place(ci + 1)
            return
        e = order[i]
        b = fobj[r]
        for c in g.out[b]:
            steps[0] += 1
            if steps[0] > budget:
                raise SizeLimitExceeded("functor search exceeded its budget")
            x = g.tgt[c]
            if (injective and x in used) or not obj_ok(e, x) or not arrow_ok(tree[e], c):
                continue
            fobj[e] = x
            farr[tree[e]] = c
            used.add(x)
            ok = True
            for a in by_last[e]:
                fa = image(a, tree, phi)
                if not arrow_ok(a, fa):
                    ok = False
                    break
                farr[a] = fa
            if ok:
                yield from extend(ci, i + 1, phi)
            used.discard(x)
            for a in by_last[e]:
                farr.pop(a, None)
            del fobj[e]

    yield from place(0)


def find_section(f: GroupoidFunctor) -> GroupoidFunctor | None:
    """A functor ``s`` with ``f s = id``, or None."""
    if not f.arrow_finmap.is_surjective():
        return None
    h, g = f.source, f.target
    found = next(search_functors(g, h, obj_ok=lambda b, e: f.fobj[e] == b,
                                 arrow_ok=lambda a, c: f.farr[c] == a), None)
    if found is not None:
        found.name = "section"
    return found


def find_isomorphism(a: FinGroupoid, b: FinGroupoid, over: list = ()) -> GroupoidFunctor | None:
    """An isomorphism ``k: a -> b`` with ``g k = f`` for every pair ``(f, g)`` in ``over``."""
    if len(a.objects) != len(b.objects) or len(a.arrows) != len(b.arrows):
        return None
    over = list(over)
    obj_ok = lambda e, x: all(g.fobj[x] == f.fobj[e] for f, g in over)
    arrow_ok = lambda s, t: all(g.farr[t] == f.farr[s] for f, g in over)
    return next(search_functors(a, b, obj_ok=obj_ok, arrow_ok=arrow_ok, injective=True), None)


def are_isomorphic(a: FinGroupoid, b: FinGroupoid) -> bool:
    return find_isomorphism(a, b) is not None


# natural transformations

@dataclass
class NaturalTransformation:
    components: dict
    functor: GroupoidFunctor


def _transformation(f, g, comps, box) -> NaturalTransformation:
    h = f.source
    t = GroupoidFunctor(h, box.box, dict(comps),
                        {a: square_label(f.farr[a], g.farr[a], comps[h.src[a]]) for a in h.arrows},
                        name="t", check=False)
    return NaturalTransformation(dict(comps), t)


def natural_transformations(f: GroupoidFunctor, g: GroupoidFunctor) -> Iterator[dict]:
    """Component assignments ``e -> (f e -> g e)`` that are natural, lexicographically."""
    if f.source != g.source or f.target != g.target:
        raise NotAFunctor("natural transformations need parallel functors", None)
    h, tg = f.source, f.target
    per_comp = []
    for orb in gpd.orbits(h):
        r = orb[0]
        tree = gpd.spanning_tree(h, r)
        options = []
        for c in tg.hom.get((f.fobj[r], g.fobj[r]), []):
            comps = {e: tg.compose_path(g.farr[t], c, tg.inv[f.farr[t]]) for e, t in tree.items()}
            if all(tg.comp[(g.farr[a], comps[h.src[a]])] == tg.comp[(comps[h.tgt[a]], f.farr[a])]
                   for e in orb for a in h.out[e]):
                options.append(comps)
        per_comp.append(options)

    def rec(i, acc):
        if i == len(per_comp):
            yield dict(acc)
            return
        for opt in per_comp[i]:
            yield from rec(i + 1, {**acc, **opt})

    yield from rec(0, {})


def find_natural_transformation(f: GroupoidFunctor, g: GroupoidFunctor) -> NaturalTransformation | None:
    comps = next(natural_transformations(f, g), None)
    if comps is None:
        return None
    return _transformation(f, g, comps, square_groupoid(f.target))


def are_holomorphic(f: GroupoidFunctor, g: GroupoidFunctor) -> bool:
    """Isomorphic under a natural transformation."""
    return next(natural_transformations(f, g), None) is not None
