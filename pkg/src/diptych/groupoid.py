"""Finite groupoids, their nerves and the set-level classification.

Composition is written ``comp(g, h)`` for "g after h" and is defined when
``src[g] == tgt[h]``.  Division is ``div(y, x) = y x^-1`` on pairs with a
common source.  Everything is keyed by string labels so that tables serialize
verbatim.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from . import engine, finmap, simplicial as sx
from .errors import (AxiomViolation, DivisionIllTyped, GroupoidError, InputError,
                     NotInjectiveUnit, NotSurjective, NotSurjectiveSource,
                     SizeLimitExceeded, UnknownBaseElement)
from .finmap import FiniteMap, FiniteSet, pair_label, tag_label

NERVE_LIMIT = 200_000


def unit_label(obj) -> str:
    return f"id:{obj}"


class FinGroupoid:
    """A validated finite groupoid.

    ``arrows`` maps every arrow id to its ``(src, tgt)`` pair, ``compose`` maps
    composable pairs ``(g, h)`` to ``g h``.  Unit arrows are listed in ``units``;
    when absent they are created as ``id:<obj>`` and every composition involving
    them is filled in.  ``check=False`` skips the exhaustive axiom sweep and is
    meant for constructions whose correctness is already known.
    """

    def __init__(self, objects, arrows: dict, compose: dict, units: dict | None = None,
                 name: str = "", check: bool = True):
        self.name = name
        self.objects = tuple(sorted(str(x) for x in objects))
        if len(set(self.objects)) != len(self.objects):
            raise InputError("duplicate object labels")
        objset = set(self.objects)
        arrows = {str(g): (str(s), str(t)) for g, (s, t) in arrows.items()}
        if units is None:
            units = {}
            for x in self.objects:
                u = unit_label(x)
                if u in arrows and arrows[u] != (x, x):
                    raise InputError(f"arrow {u!r} is reserved for the unit of {x!r}")
                units[x] = u
                arrows[u] = (x, x)
        else:
            units = {str(x): str(u) for x, u in units.items()}
        if set(units) != objset:
            raise InputError("units must be given for exactly the objects")
        for g, (s, t) in arrows.items():
            if s not in objset or t not in objset:
                raise InputError(f"arrow {g!r} has an endpoint outside the objects")
        for x, u in units.items():
            if arrows.get(u) != (x, x):
                raise InputError(f"unit {u!r} of {x!r} is not a loop at {x!r}")
        if len(set(units.values())) != len(units):
            raise NotInjectiveUnit("two objects share a unit arrow")
        self.arrows = tuple(sorted(arrows))
        self.src = {g: s for g, (s, _) in arrows.items()}
        self.tgt = {g: t for g, (_, t) in arrows.items()}
        self.unit = units
        comp = {}
        for (g, h), gh in compose.items():
            g, h, gh = str(g), str(h), str(gh)
            if g not in arrows or h not in arrows or gh not in arrows:
                raise InputError(f"composition entry ({g}, {h}) names an unknown arrow")
            if self.src[g] != self.tgt[h]:
                raise InputError(f"composition entry ({g}, {h}) is not composable")
            comp[(g, h)] = gh
        for g in self.arrows:
            for key, val in (((self.unit[self.tgt[g]], g), g), ((g, self.unit[self.src[g]]), g)):
                if comp.setdefault(key, val) != val:
                    raise AxiomViolation("unit law fails", {"pair": list(key)})
        self.comp = comp
        self.out = {x: [] for x in self.objects}
        self.inn = {x: [] for x in self.objects}
        self.hom = {}
        for g in self.arrows:
            self.out[self.src[g]].append(g)
            self.inn[self.tgt[g]].append(g)
            self.hom.setdefault((self.src[g], self.tgt[g]), []).append(g)
        missing = check and next(((g, h) for g in self.arrows for h in self.inn[self.src[g]]
                                  if (g, h) not in comp), None)
        if missing:
            raise InputError(f"composition missing for the pair {missing}")
        inv = {}
        for g in self.arrows:
            back = [h for h in self.hom.get((self.tgt[g], self.src[g]), [])
                    if comp[(h, g)] == self.unit[self.src[g]]]
            if not back:
                raise AxiomViolation(f"arrow {g!r} has no inverse", {"arrow": g})
            inv[g] = back[0]
        self.inv = inv
        if check:
            self.validate()

    # validation

    def validate(self):
        comp, inv = self.comp, self.inv
        for g in self.arrows:
            if comp[(g, inv[g])] != self.unit[self.tgt[g]]:
                raise AxiomViolation(f"inverse of {g!r} fails on the other side", {"arrow": g})
            for h in self.inn[self.src[g]]:
                gh = comp[(g, h)]
                if (self.src[gh], self.tgt[gh]) != (self.src[h], self.tgt[g]):
                    raise AxiomViolation("composite has the wrong endpoints", {"pair": [g, h]})
                for k in self.inn[self.src[h]]:
                    if comp[(gh, k)] != comp[(g, comp[(h, k)])]:
                        raise AxiomViolation("composition is not associative",
                                             {"triple": [g, h, k]})
        return self

    # derived structure

    def __repr__(self):
        label = self.name or "FinGroupoid"
        return f"<{label}: {len(self.objects)} objects, {len(self.arrows)} arrows>"

    def __eq__(self, other):
        return (isinstance(other, FinGroupoid) and self.objects == other.objects
                and self.arrows == other.arrows and self.src == other.src
                and self.tgt == other.tgt and self.unit == other.unit and self.comp == other.comp)

    def __hash__(self):
        return hash((self.objects, self.arrows))

    def div(self, y, x):
        if self.src[y] != self.src[x]:
            raise DivisionIllTyped(f"division ({y}, {x}) needs a common source")
        return self.comp[(y, self.inv[x])]

    def compose_path(self, *arrows):
        """Composite of ``g1 after g2 after ...``."""
        out = arrows[-1]
        for g in reversed(arrows[:-1]):
            out = self.comp[(g, out)]
        return out

    def is_unit(self, g) -> bool:
        return self.unit[self.src[g]] == g

    @cached_property
    def arrow_set(self) -> FiniteSet:
        return FiniteSet(self.arrows, id="G")

    @cached_property
    def base(self) -> FiniteSet:
        return FiniteSet(self.objects, id="B")

    @cached_property
    def omega(self) -> FiniteMap:
        return FiniteMap(self.base, self.arrow_set, self.unit)

    @cached_property
    def alpha(self) -> FiniteMap:
        return FiniteMap(self.arrow_set, self.base, self.src)

    @cached_property
    def beta(self) -> FiniteMap:
        return FiniteMap(self.arrow_set, self.base, self.tgt)

    @cached_property
    def iota(self) -> FiniteMap:
        return FiniteMap(self.arrow_set, self.arrow_set, self.inv)

    @cached_property
    def transitor(self) -> FiniteMap:
        return finmap.pairing(self.beta, self.alpha)

    @cached_property
    def wedge_set(self) -> FiniteSet:
        return FiniteSet((pair_label(y, x) for x in self.arrows for y in self.out[self.src[x]]),
                         id="wedge")

    @cached_property
    def division(self) -> FiniteMap:
        return FiniteMap(self.wedge_set, self.arrow_set,
                         {pair_label(y, x): self.div(y, x)
                          for x in self.arrows for y in self.out[self.src[x]]})

    @cached_property
    def composition(self) -> FiniteMap:
        dom = FiniteSet(pair_label(g, h) for (g, h) in self.comp)
        return FiniteMap(dom, self.arrow_set,
                         {pair_label(g, h): gh for (g, h), gh in self.comp.items()})

    def sketch(self) -> dict:
        """Raw ``(G, B, unit, source, division)`` tables."""
        return {"objects": list(self.objects), "arrows": list(self.arrows),
                "unit": dict(self.unit), "source": dict(self.src),
                "division": [[y, x, self.div(y, x)]
                             for x in self.arrows for y in self.out[self.src[x]]]}

    def relabel(self, obj_map: dict, arrow_map: dict, name: str = "") -> "FinGroupoid":
        return FinGroupoid(
            [obj_map[x] for x in self.objects],
            {arrow_map[g]: (obj_map[self.src[g]], obj_map[self.tgt[g]]) for g in self.arrows},
            {(arrow_map[g], arrow_map[h]): arrow_map[gh] for (g, h), gh in self.comp.items()},
            units={obj_map[x]: arrow_map[u] for x, u in self.unit.items()},
            name=name or self.name, check=False)


def from_sketch(objects, arrows, unit: dict, source: dict, division, name: str = "",
                check: bool = True) -> FinGroupoid:
    """Groupoid from ``(G, B, unit, source, division)``; ``division`` holds ``[y, x, y/x]`` rows."""
    base = FiniteSet(objects, id="B")
    g = FiniteSet(arrows, id="G")
    try:
        omega = FiniteMap(base, g, unit)
        alpha = FiniteMap(g, base, source)
    except InputError as exc:
        raise GroupoidError(f"unit/source tables are malformed: {exc}") from exc
    if not omega.is_injective():
        raise NotInjectiveUnit("the unit map is not injective")
    if not alpha.is_surjective():
        raise NotSurjectiveSource("the source map is not surjective")
    if finmap.compose(alpha, omega) != finmap.identity(base):
        raise GroupoidError("source of a unit differs from its object")
    div = {}
    for y, x, yx in division:
        if alpha(y) != alpha(x):
            raise DivisionIllTyped(f"division defined on ({y}, {x}) with different sources")
        if yx not in g:
            raise InputError(f"division result {yx!r} is not an arrow")
        div[(y, x)] = yx
    wedge = {(y, x) for x in g for y in g if alpha(y) == alpha(x)}
    if set(div) != wedge:
        missing = sorted(wedge - set(div))
        raise DivisionIllTyped(f"division missing on {missing[0]}")
    inv = {x: div[(unit[source[x]], x)] for x in g}
    tgt = {x: source[inv[x]] for x in g}
    for (y, x), yx in div.items():
        if source[yx] != tgt[x] or tgt[yx] != tgt[y]:
            raise DivisionIllTyped(f"division ({y}, {x}) has the wrong endpoints")
    comp = {}
    for gg in g:
        for h in g:
            if source[gg] == tgt[h]:
                comp[(gg, h)] = div[(gg, inv[h])]
    return FinGroupoid(objects, {a: (source[a], tgt[a]) for a in g}, comp,
                       units=unit, name=name, check=check)


# constructors

def null(objects, name: str = "null") -> FinGroupoid:
    return FinGroupoid(objects, {}, {}, name=name)


def point(name: str = "point") -> FinGroupoid:
    return null(["*"], name=name)


def banal(m, name: str = "") -> FinGroupoid:
    """All pairs ``(y,x): x -> y`` over ``m`` points (or over the given labels)."""
    objs = [str(i) for i in range(m)] if isinstance(m, int) else [str(x) for x in m]
    return principal_of(finmap.unique_map(FiniteSet(objs), FiniteSet(["*"])),
                        name=name or f"banal({len(objs)})")


def group(elements, mul, unit, name: str = "", obj: str = "*") -> FinGroupoid:
    """One-object groupoid from a multiplication ``mul[(a, b)] = a b``."""
    elements = [str(e) for e in elements]
    comp = {(str(a), str(b)): str(c) for (a, b), c in dict(mul).items()}
    return FinGroupoid([obj], {e: (obj, obj) for e in elements}, comp,
                       units={obj: str(unit)}, name=name)


def cyclic(n: int, labels=None, name: str = "") -> FinGroupoid:
    labels = list(labels) if labels else [str(i) for i in range(n)]
    mul = {(labels[a], labels[b]): labels[(a + b) % n] for a in range(n) for b in range(n)}
    return group(labels, mul, labels[0], name=name or f"Z/{n}")


def symmetric3(name: str = "S3") -> FinGroupoid:
    perms = sorted(itertools.permutations(range(3)))
    label = {p: "".join(map(str, p)) for p in perms}
    mul = {(label[a], label[b]): label[tuple(a[b[i]] for i in range(3))]
           for a in perms for b in perms}
    return group(label.values(), mul, label[(0, 1, 2)], name=name)


def principal_of(q: FiniteMap, name: str = "") -> FinGroupoid:
    """Kernel-pair groupoid ``B x_Q B`` of a surjection, arrows ``(y,x): x -> y``."""
    if not q.is_surjective():
        raise NotSurjective("the principal groupoid needs a surjection")
    fibres = {}
    for x, c in q.items():
        fibres.setdefault(c, []).append(x)
    arrows, comp, units = {}, {}, {}
    for fib in fibres.values():
        for x in fib:
            units[x] = pair_label(x, x)
            for y in fib:
                arrows[pair_label(y, x)] = (x, y)
                for z in fib:
                    comp[(pair_label(z, y), pair_label(y, x))] = pair_label(z, x)
    return FinGroupoid(q.source.elements, arrows, comp, units=units,
                       name=name or "principal", check=False)


def disjoint_union(*parts: FinGroupoid, name: str = "") -> FinGroupoid:
    objects, arrows, comp, units = [], {}, {}, {}
    for i, g in enumerate(parts):
        t = lambda v, i=i: tag_label(i, v)
        objects += [t(x) for x in g.objects]
        arrows.update({t(a): (t(g.src[a]), t(g.tgt[a])) for a in g.arrows})
        comp.update({(t(a), t(b)): t(c) for (a, b), c in g.comp.items()})
        units.update({t(x): t(u) for x, u in g.unit.items()})
    return FinGroupoid(objects, arrows, comp, units=units,
                       name=name or "+".join(g.name for g in parts), check=False)


def product(g1: FinGroupoid, g2: FinGroupoid, name: str = "") -> FinGroupoid:
    objects = [pair_label(x, y) for x in g1.objects for y in g2.objects]
    arrows = {pair_label(a, b): (pair_label(g1.src[a], g2.src[b]), pair_label(g1.tgt[a], g2.tgt[b]))
              for a in g1.arrows for b in g2.arrows}
    label = {(a, b): pair_label(a, b) for a in g1.arrows for b in g2.arrows}
    comp = {(label[(a, b)], label[(c, d)]): label[(g1.comp[(a, c)], g2.comp[(b, d)])]
            for a in g1.arrows for c in g1.inn[g1.src[a]]
            for b in g2.arrows for d in g2.inn[g2.src[b]]}
    units = {pair_label(x, y): pair_label(g1.unit[x], g2.unit[y])
             for x in g1.objects for y in g2.objects}
    return FinGroupoid(objects, arrows, comp, units=units,
                       name=name or f"{g1.name}x{g2.name}", check=False)


def subgroupoid(g: FinGroupoid, arrows, name: str = "", check: bool = True) -> FinGroupoid:
    """Wide subgroupoid on the given arrows (units are added)."""
    keep = set(arrows) | set(g.unit.values())
    if check:
        for a in keep:
            if g.inv[a] not in keep:
                raise InputError(f"subgroupoid is not closed under inverses at {a!r}")
            for b in g.inn[g.src[a]]:
                if b in keep and g.comp[(a, b)] not in keep:
                    raise InputError(f"subgroupoid is not closed under composition at ({a}, {b})")
    return FinGroupoid(g.objects, {a: (g.src[a], g.tgt[a]) for a in keep},
                       {(a, b): c for (a, b), c in g.comp.items() if a in keep and b in keep},
                       units=g.unit, name=name, check=False)


# orbits and isotropy

def orbits(g: FinGroupoid) -> list[tuple]:
    """Connected components of the base, each sorted, listed by least element."""
    seen, out = set(), []
    for x in g.objects:
        if x in seen:
            continue
        comp = sorted({g.tgt[a] for a in g.out[x]})
        seen.update(comp)
        out.append(tuple(comp))
    return out


def orbit_map(g: FinGroupoid) -> FiniteMap:
    """Base -> orbit space, each orbit labelled by its least object."""
    table = {x: orb[0] for orb in orbits(g) for x in orb}
    return FiniteMap(g.base, FiniteSet(orb[0] for orb in orbits(g)), table)


def isotropy_arrows(g: FinGroupoid, b) -> list:
    if b not in g.unit:
        raise UnknownBaseElement(f"{b!r} is not an object")
    return list(g.hom.get((b, b), []))


@dataclass(frozen=True)
class IsotropyGroup:
    """Vertex group at an object: ``table[i][j]`` is the index of ``elements[i] elements[j]``."""

    obj: str
    elements: tuple
    table: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a, b):
        i, j = self.elements.index(a), self.elements.index(b)
        return self.elements[self.table[i][j]]


def isotropy(g: FinGroupoid, b) -> IsotropyGroup:
    els = isotropy_arrows(g, b)
    u = g.unit[b]
    els = [u] + sorted(e for e in els if e != u)
    idx = {e: i for i, e in enumerate(els)}
    table = tuple(tuple(idx[g.comp[(x, y)]] for y in els) for x in els)
    return IsotropyGroup(b, tuple(els), table)


def spanning_tree(g: FinGroupoid, root) -> dict:
    """For every object of the root's orbit the least-label BFS arrow ``root -> x``."""
    tree = {root: g.unit[root]}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for a in sorted(g.out[x]):
            y = g.tgt[a]
            if y not in tree:
                tree[y] = g.comp[(a, tree[x])]
                queue.append(y)
    return tree


# classification

@dataclass
class GroupoidClass:
    is_null: bool
    is_banal: bool
    is_godement: bool
    is_principal: bool
    is_regular: bool
    is_plurigroup: bool
    is_s_transitive: bool
    regular_pi: FiniteMap = field(repr=False)
    regular_tau: FiniteMap = field(repr=False)
    orbit_map: FiniteMap | None = field(default=None, repr=False)

    def flags(self) -> dict:
        return {"null": self.is_null, "banal": self.is_banal, "godement": self.is_godement,
                "principal": self.is_principal, "regular": self.is_regular,
                "plurigroup": self.is_plurigroup, "s_transitive": self.is_s_transitive}


def principal_isomorphism(g: FinGroupoid) -> dict | None:
    """Arrow map ``a -> (tgt a, src a)`` onto ``principal_of(orbit map)`` when it is an iso."""
    target = principal_of(orbit_map(g))
    amap = {a: pair_label(g.tgt[a], g.src[a]) for a in g.arrows}
    if len(set(amap.values())) != len(amap) or set(amap.values()) != set(target.arrows):
        return None
    for (a, b), ab in g.comp.items():
        if target.comp[(amap[a], amap[b])] != amap[ab]:
            return None
    return amap


def classify(g: FinGroupoid) -> GroupoidClass:
    tau = g.transitor
    godement = tau.is_injective()
    principal = godement and principal_isomorphism(g) is not None
    if godement and not principal:
        raise AssertionError("Godement groupoid that is not principal in finite sets")
    image = tau.image()
    pi = FiniteMap(tau.source, image, tau.images)
    incl = FiniteMap(image, tau.target, image.elements)
    return GroupoidClass(
        is_null=len(g.arrows) == len(g.objects),
        is_banal=godement and tau.is_surjective(),
        is_godement=godement,
        is_principal=principal,
        is_regular=True,
        is_plurigroup=g.src == g.tgt,
        is_s_transitive=tau.is_surjective(),
        regular_pi=pi,
        regular_tau=incl,
        orbit_map=orbit_map(g) if principal else None,
    )


# nerve

@dataclass(frozen=True)
class Simplex:
    """Commutative diagram on numbered vertices; ``arrows[i][j]`` goes from vertex j to vertex i."""

    vertices: tuple
    arrows: tuple


@dataclass
class NerveLevel:
    level: int
    paths: list
    wedges: list
    simplices: list
    path_to_simplex: dict
    wedge_to_simplex: dict
    faces: list = field(default_factory=list)
    degeneracies: list = field(default_factory=list)

    def __len__(self):
        return len(self.simplices)


def _simplex_from_wedge(g, x, ws) -> Simplex:
    legs = (g.unit[x],) + tuple(ws)
    verts = tuple(g.tgt[w] for w in legs)
    arrows = tuple(tuple(g.div(legs[i], legs[j]) for j in range(len(legs)))
                   for i in range(len(legs)))
    return Simplex(verts, arrows)


def _simplex_from_path(g, x, ps) -> Simplex:
    legs = [g.unit[x]]
    for p in ps:
        legs.append(g.comp[(p, legs[-1])])
    return _simplex_from_wedge(g, x, legs[1:])


def paths(g: FinGroupoid, n: int) -> list:
    """``(x0, (g1, ..., gn))`` with ``g_i: x_(i-1) -> x_i``."""
    out = [(x, ()) for x in g.objects]
    for _ in range(n):
        out = [(x, ps + (a,)) for x, ps in out
               for a in g.out[g.tgt[ps[-1]] if ps else x]]
    return out


def wedges(g: FinGroupoid, n: int) -> list:
    """``(x, (w1, ..., wn))`` with every ``w_i`` leaving x."""
    return [(x, ws) for x in g.objects for ws in itertools.product(g.out[x], repeat=n)]


def simplex_action(theta: sx.CardinalArrow, s: Simplex) -> Simplex:
    """Right action of a map of cardinals ``k -> l`` on an ``l``-vertex simplex."""
    t = theta.table
    return Simplex(tuple(s.vertices[i] for i in t),
                   tuple(tuple(s.arrows[i][j] for j in t) for i in t))


def simplex_is_commutative(g: FinGroupoid, s: Simplex) -> bool:
    k = len(s.vertices)
    for i in range(k):
        if s.arrows[i][i] != g.unit[s.vertices[i]]:
            return False
        for j in range(k):
            a = s.arrows[i][j]
            if (g.src[a], g.tgt[a]) != (s.vertices[j], s.vertices[i]):
                return False
            for m in range(k):
                if g.comp[(a, s.arrows[j][m])] != s.arrows[i][m]:
                    return False
    return True


def _guard(g, n, limit):
    est = len(g.objects) * max(1, max((len(v) for v in g.out.values()), default=1)) ** n
    if est > limit:
        raise SizeLimitExceeded(f"nerve level {n} may hold {est} elements (limit {limit})")


def nerve(g: FinGroupoid, n: int, limit: int = NERVE_LIMIT) -> NerveLevel:
    """Level ``n`` in the path, wedge and simplex descriptions, with faces and degeneracies."""
    if n < 0:
        raise InputError("nerve level must be >= 0")
    _guard(g, n, limit)
    ps, ws = paths(g, n), wedges(g, n)
    p2s = {p: _simplex_from_path(g, *p) for p in ps}
    w2s = {w: _simplex_from_wedge(g, *w) for w in ws}
    simplices = sorted(set(w2s.values()), key=lambda s: (s.vertices, s.arrows))
    faces = [{s: simplex_action(sx.delta(n, j), s) for s in simplices}
             for j in range(n + 1)] if n > 0 else []
    degs = [{s: simplex_action(sx.sigma(n + 1, j), s) for s in simplices} for j in range(n + 1)]
    return NerveLevel(n, ps, ws, simplices, p2s, w2s, faces, degs)


def path_of_simplex(s: Simplex) -> tuple:
    return (s.vertices[0], tuple(s.arrows[i + 1][i] for i in range(len(s.vertices) - 1)))


def wedge_of_simplex(s: Simplex) -> tuple:
    return (s.vertices[0], tuple(s.arrows[i][0] for i in range(1, len(s.vertices))))


def check_nerve_bijections(g: FinGroupoid, n: int) -> bool:
    """The three descriptions of level n are in bijection and the maps invert each other."""
    lvl = nerve(g, n)
    sset = set(lvl.simplices)
    if len(lvl.paths) != len(sset) or len(lvl.wedges) != len(sset):
        return False
    if set(lvl.path_to_simplex.values()) != sset or set(lvl.wedge_to_simplex.values()) != sset:
        return False
    return (all(path_of_simplex(s) == p for p, s in lvl.path_to_simplex.items())
            and all(wedge_of_simplex(s) == w for w, s in lvl.wedge_to_simplex.items())
            and all(simplex_is_commutative(g, s) for s in sset))


# exactness of a simplicial object

class SimplicialData:
    """Contravariant functor on nonzero cardinals ``1..top`` into finite sets.

    ``levels[k]`` lists the elements with ``k`` vertices; ``act(theta, x)``
    applies a map of cardinals ``k -> l`` to an element with ``l`` vertices.
    """

    def __init__(self, levels: dict, act):
        self.levels = {k: list(v) for k, v in levels.items()}
        self.act = act
        self._labels = {k: {x: str(i) for i, x in enumerate(v)} for k, v in self.levels.items()}
        self._sets = {k: FiniteSet(lab.values(), id=f"X{k}") for k, lab in self._labels.items()}

    @property
    def top(self) -> int:
        return max(self.levels)

    def image(self, theta: sx.CardinalArrow) -> FiniteMap | None:
        """``X(theta)`` as a finite map, or None when it leaves the listed elements."""
        src, tgt = self._labels[theta.target], self._labels[theta.source]
        table = {}
        for x, lab in src.items():
            y = self.act(theta, x)
            if y not in tgt:
                return None
            table[lab] = tgt[y]
        return FiniteMap(self._sets[theta.target], self._sets[theta.source], table)


@dataclass
class ExactnessReport:
    ok: bool
    squares_checked: int
    arrows_checked: int
    witness: dict | None = None


def check_exactness(x: SimplicialData, top: int | None = None) -> ExactnessReport:
    """Images of every relation square are good pullbacks; generators keep their class."""
    top = top or x.top
    fin = engine.FinSet()
    n_arrows = 0
    gens = [sx.delta(n, j) for n in range(1, top) for j in range(n + 1)]
    gens += [sx.sigma(n, j) for n in range(1, top) for j in range(n)]
    gens += [sx.transposition(n, j) for n in range(2, top + 1) for j in range(n - 1)]
    for theta in gens:
        img = x.image(theta)
        n_arrows += 1
        if img is None:
            return ExactnessReport(False, 0, n_arrows, {"arrow": repr(theta), "reason": "not a map"})
        want = ((theta.is_injective(), img.is_surjective()), (theta.is_surjective(), img.is_injective()))
        if any(flag and not good for flag, good in want):
            return ExactnessReport(False, 0, n_arrows, {"arrow": repr(theta), "reason": "class"})
    n_squares = 0
    for kind in sx.SQUARE_KINDS:
        for rs in sx.relation_squares(kind, top, min_cardinal=1):
            if max(rs.cardinals) > top:
                continue
            imgs = [x.image(a) for a in (rs.right, rs.bottom, rs.left, rs.top)]
            n_squares += 1
            if any(i is None for i in imgs):
                return ExactnessReport(False, n_squares, n_arrows,
                                       {"square": [kind, list(rs.indices)], "reason": "not a map"})
            cls = engine.classify_square(engine.Square(*imgs), fin)
            if not cls.good_pullback:
                return ExactnessReport(False, n_squares, n_arrows,
                                       {"square": [kind, list(rs.indices)], "reason": "not a pullback"})
    return ExactnessReport(True, n_squares, n_arrows)


def nerve_simplicial_data(g: FinGroupoid, n_max: int) -> SimplicialData:
    levels = {k: nerve(g, k - 1).simplices for k in range(1, n_max + 2)}
    return SimplicialData(levels, simplex_action)


def check_nerve_exactness(g: FinGroupoid, n_max: int) -> ExactnessReport:
    if n_max < 2:
        raise InputError("exactness needs n_max >= 2")
    return check_exactness(nerve_simplicial_data(g, n_max))
