"""Finite sets and total maps: the concrete substrate of every diptych instance.

Sets carry string labels kept in lexicographic order, so two sets built from
the same labels compare equal whatever the insertion order.  Products and
fibred products label their elements ``"(x,y)"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import InputError, NotCommuting, ShapeMismatch, TargetMismatch


def pair_label(*parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def tag_label(tag, x) -> str:
    return f"{tag}:{x}"


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple
    id: str = field(default="", compare=False)

    def __init__(self, elements: Iterable = (), id: str = ""):
        elems = tuple(str(e) for e in elements)
        ordered = tuple(sorted(set(elems)))
        if len(ordered) != len(elems):
            raise InputError(f"duplicate labels in set {id or '?'}")
        object.__setattr__(self, "elements", ordered)
        object.__setattr__(self, "id", id)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, x) -> int:
        return self._index[x]

    def __repr__(self):
        name = f"{self.id}=" if self.id else ""
        return f"{name}{{{', '.join(self.elements)}}}"


def cardinal(n: int) -> FiniteSet:
    """The canonical set {"0", ..., "n-1"}."""
    return FiniteSet((str(i) for i in range(n)), id=str(n))


@dataclass(frozen=True)
class FiniteMap:
    source: FiniteSet
    target: FiniteSet
    images: tuple

    def __init__(self, source: FiniteSet, target: FiniteSet, table):
        if isinstance(table, Mapping):
            missing = [x for x in source if x not in table]
            if missing:
                raise InputError(f"map not total: no image for {missing[0]!r}")
            extra = [x for x in table if x not in source]
            if extra:
                raise InputError(f"map defined outside its source: {extra[0]!r}")
            images = tuple(str(table[x]) for x in source.elements)
        else:
            images = tuple(str(y) for y in table)
            if len(images) != len(source):
                raise InputError("image tuple does not match the source size")
        for y in images:
            if y not in target:
                raise InputError(f"image {y!r} not in target")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", images)

    def __call__(self, x):
        return self.images[self.source.index(x)]

    def items(self):
        return zip(self.source.elements, self.images)

    def as_dict(self) -> dict:
        return dict(self.items())

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_surjective(self) -> bool:
        return len(set(self.images)) == len(self.target)

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image(self) -> FiniteSet:
        return FiniteSet(set(self.images))

    def fibre(self, y) -> list:
        return [x for x, fx in self.items() if fx == y]

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.items())
        return f"FiniteMap({body})"


def identity(a: FiniteSet) -> FiniteMap:
    return FiniteMap(a, a, a.elements)


def compose(g: FiniteMap, f: FiniteMap) -> FiniteMap:
    """g after f."""
    if f.target != g.source:
        raise ShapeMismatch("maps are not composable")
    return FiniteMap(f.source, g.target, tuple(g(y) for y in f.images))


def inverse(f: FiniteMap) -> FiniteMap:
    if not f.is_bijective():
        raise InputError("map is not invertible")
    return FiniteMap(f.target, f.source, {y: x for x, y in f.items()})


def all_maps(a: FiniteSet, b: FiniteSet) -> Iterator[FiniteMap]:
    """Every map a -> b, in lexicographic order of image tuples."""
    for images in itertools.product(b.elements, repeat=len(a)):
        yield FiniteMap(a, b, images)


def unique_map(a: FiniteSet, b: FiniteSet) -> FiniteMap:
    maps = list(itertools.islice(all_maps(a, b), 2))
    if len(maps) != 1:
        raise InputError("there is no unique map")
    return maps[0]


# limits and colimits

def product(a: FiniteSet, b: FiniteSet) -> FiniteSet:
    return FiniteSet((pair_label(x, y) for x in a for y in b), id=f"{a.id}x{b.id}")


def projections(a: FiniteSet, b: FiniteSet) -> tuple[FiniteMap, FiniteMap]:
    p = product(a, b)
    pairs = {pair_label(x, y): (x, y) for x in a for y in b}
    pr1 = FiniteMap(p, a, {k: v[0] for k, v in pairs.items()})
    pr2 = FiniteMap(p, b, {k: v[1] for k, v in pairs.items()})
    return pr1, pr2


def pairing(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """The map x -> (f x, g x) into the product of the two targets."""
    if f.source != g.source:
        raise ShapeMismatch("pairing needs a common source")
    p = product(f.target, g.target)
    return FiniteMap(f.source, p, {x: pair_label(f(x), g(x)) for x in f.source})


def product_map(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    src = product(f.source, g.source)
    tgt = product(f.target, g.target)
    return FiniteMap(src, tgt, {pair_label(x, y): pair_label(f(x), g(y))
                                for x in f.source for y in g.source})


def pullback(f: FiniteMap, v: FiniteMap) -> tuple[FiniteSet, FiniteMap, FiniteMap]:
    """Fibred product A x_B B' of f: A -> B and v: B' -> B with its projections."""
    if f.target != v.target:
        raise TargetMismatch("pullback needs a common target")
    by_value: dict = {}
    for y, z in v.items():
        by_value.setdefault(z, []).append(y)
    pairs = {}
    for x, z in f.items():
        for y in by_value.get(z, ()):
            pairs[pair_label(x, y)] = (x, y)
    p = FiniteSet(pairs, id=f"{f.source.id}x_{f.target.id}{v.source.id}")
    p1 = FiniteMap(p, f.source, {k: xy[0] for k, xy in pairs.items()})
    p2 = FiniteMap(p, v.source, {k: xy[1] for k, xy in pairs.items()})
    return p, p1, p2


def coproduct(a: FiniteSet, b: FiniteSet) -> tuple[FiniteSet, FiniteMap, FiniteMap]:
    s = FiniteSet([tag_label(0, x) for x in a] + [tag_label(1, y) for y in b])
    i1 = FiniteMap(a, s, {x: tag_label(0, x) for x in a})
    i2 = FiniteMap(b, s, {y: tag_label(1, y) for y in b})
    return s, i1, i2


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            lo, hi = sorted((rx, ry))
            self.parent[hi] = lo

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def pushout(u: FiniteMap, fp: FiniteMap) -> tuple[FiniteSet, FiniteMap, FiniteMap]:
    """Pushout of the span A <-u- A' -fp-> B', classes labelled by least member."""
    if u.source != fp.source:
        raise ShapeMismatch("pushout needs a common source")
    s, i1, i2 = coproduct(u.target, fp.target)
    uf = _UnionFind(s.elements)
    for x in u.source:
        uf.union(i1(u(x)), i2(fp(x)))
    rep = {x: min(cls) for cls in uf.classes().values() for x in cls}
    p = FiniteSet(set(rep.values()))
    j1 = FiniteMap(u.target, p, {a: rep[i1(a)] for a in u.target})
    j2 = FiniteMap(fp.target, p, {b: rep[i2(b)] for b in fp.target})
    return p, j1, j2


def coequalizer(f: FiniteMap, g: FiniteMap) -> FiniteMap:
    """Quotient map of the target by the relation generated by f(x) ~ g(x)."""
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("coequalizer needs a parallel pair")
    uf = _UnionFind(f.target.elements)
    for x in f.source:
        uf.union(f(x), g(x))
    rep = {y: uf.find(y) for y in f.target}
    q = FiniteSet(set(rep.values()))
    return FiniteMap(f.target, q, rep)


# squares

@dataclass(frozen=True)
class SquareData:
    """Commutative square top f': A'->B', left u: A'->A, bottom f: A->B, right v: B'->B."""

    top: FiniteMap
    left: FiniteMap
    bottom: FiniteMap
    right: FiniteMap

    def __post_init__(self):
        if (self.top.source != self.left.source or self.left.target != self.bottom.source
                or self.top.target != self.right.source or self.bottom.target != self.right.target):
            raise ShapeMismatch("square corners do not agree")

    def commutes(self) -> bool:
        return compose(self.bottom, self.left) == compose(self.right, self.top)

    def comparison(self) -> FiniteMap:
        """Canonical arrow A' -> A x_B B'."""
        p, _, _ = pullback(self.bottom, self.right)
        return FiniteMap(self.top.source, p,
                         {x: pair_label(self.left(x), self.top(x)) for x in self.top.source})


def _require_commuting(sq: SquareData):
    if not sq.commutes():
        raise NotCommuting("square does not commute")


def is_pullback(sq: SquareData) -> bool:
    _require_commuting(sq)
    return sq.comparison().is_bijective()


def _cardinal_sets(bound: int):
    for k in range(bound + 1):
        yield cardinal(k)


def is_pushout(sq: SquareData, method: str = "colimit") -> bool:
    """Whether the commuting square is a pushout of the span A <- A' -> B'.

    ``method="colimit"`` compares B with the quotient of A + B'; ``"bruteforce"``
    tests every cocone into sets of size at most max(|A| + |B'|, 2): existence
    fails already on the quotient of A + B', uniqueness on a two-point set.
    """
    _require_commuting(sq)
    if method == "colimit":
        p, j1, j2 = pushout(sq.left, sq.top)
        back = {}
        for a in sq.bottom.source:
            back.setdefault(j1(a), set()).add(sq.bottom(a))
        for b in sq.right.source:
            back.setdefault(j2(b), set()).add(sq.right(b))
        images = [next(iter(v)) for v in back.values()]
        return (all(len(v) == 1 for v in back.values())
                and len(set(images)) == len(images) == len(sq.bottom.target))
    if method != "bruteforce":
        raise ValueError(method)
    left, top, bottom, right = (_indices(m) for m in (sq.left, sq.top, sq.bottom, sq.right))
    na, nbp, nb = len(sq.bottom.source), len(sq.right.source), len(sq.bottom.target)
    for x in range(max(na + nbp, 2) + 1):
        for g in itertools.product(range(x), repeat=na):
            gu = tuple(g[i] for i in left)
            for h in itertools.product(range(x), repeat=nbp):
                if tuple(h[i] for i in top) != gu:
                    continue
                mediators = sum(1 for m in itertools.product(range(x), repeat=nb)
                                if all(m[j] == g[i] for i, j in enumerate(bottom))
                                and all(m[j] == h[i] for i, j in enumerate(right)))
                if mediators != 1:
                    return False
    return True


def _indices(f: FiniteMap) -> tuple:
    """Table of f as positions in its target."""
    return tuple(f.target.index(y) for y in f.images)


def is_pullback_bruteforce(sq: SquareData, bound: int = 4) -> bool:
    """Universal property of a pullback, tested on every cone with apex size <= bound."""
    _require_commuting(sq)
    left, top, bottom, right = (_indices(m) for m in (sq.left, sq.top, sq.bottom, sq.right))
    na, nbp, napex = len(sq.bottom.source), len(sq.right.source), len(sq.top.source)
    for x in range(bound + 1):
        for g in itertools.product(range(na), repeat=x):
            fg = tuple(bottom[i] for i in g)
            for h in itertools.product(range(nbp), repeat=x):
                if tuple(right[i] for i in h) != fg:
                    continue
                mediators = sum(1 for m in itertools.product(range(napex), repeat=x)
                                if all(left[m[k]] == g[k] and top[m[k]] == h[k] for k in range(x)))
                if mediators != 1:
                    return False
    return True


def coequalizer_check(pair: tuple[FiniteMap, FiniteMap], q: FiniteMap,
                      method: str = "colimit") -> bool:
    """Whether q: Y -> Z is a coequalizer of the parallel pair X => Y."""
    f, g = pair
    if f.source != g.source or f.target != g.target or q.source != f.target:
        raise ShapeMismatch("coequalizer_check: shapes do not match")
    if compose(q, f) != compose(q, g):
        return False
    if method == "colimit":
        c = coequalizer(f, g)
        induced = {}
        for y in q.source:
            induced.setdefault(c(y), set()).add(q(y))
        images = [next(iter(v)) for v in induced.values()]
        return (all(len(v) == 1 for v in induced.values())
                and len(set(images)) == len(images) == len(q.target))
    if method != "bruteforce":
        raise ValueError(method)
    fi, gi, qi = _indices(f), _indices(g), _indices(q)
    ny, nz = len(q.source), len(q.target)
    for w in range(max(ny, 2) + 1):
        for h in itertools.product(range(w), repeat=ny):
            if any(h[i] != h[j] for i, j in zip(fi, gi)):
                continue
            mediators = sum(1 for m in itertools.product(range(w), repeat=nz)
                            if all(m[qi[y]] == h[y] for y in range(ny)))
            if mediators != 1:
                return False
    return True


def is_equalizer(i: FiniteMap, pair: tuple[FiniteMap, FiniteMap]) -> bool:
    """Whether i: E -> X is an equalizer of the parallel pair X => Y."""
    f, g = pair
    if f.source != g.source or f.target != g.target or i.target != f.source:
        raise ShapeMismatch("is_equalizer: shapes do not match")
    agree = {x for x in f.source if f(x) == g(x)}
    return i.is_injective() and set(i.images) == agree


def kernel_pair(q: FiniteMap) -> tuple[FiniteSet, FiniteMap, FiniteMap]:
    return pullback(q, q)
