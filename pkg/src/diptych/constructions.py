"""Standard groupoids: atlases, actions, two-sided quotients and the dual."""

from __future__ import annotations

from . import groupoid as gpd
from .errors import InputError, NotACover, NotAFunctor, NotAnAction, NotNormal, NotPrincipal
from .finmap import FiniteMap, FiniteSet, pair_label
from .functor import GroupoidFunctor, is_actor
from .groupoid import FinGroupoid


def cech_groupoid(cover, space=None, name: str = "cech"):
    """Chart-change groupoid of a cover; returns the groupoid and its map onto the space.

    Objects are ``(i,x)`` for x in chart i; the arrow ``(i,j,x)`` goes from
    ``(j,x)`` to ``(i,x)``.
    """
    charts = [sorted({str(x) for x in c}) for c in cover]
    union = sorted({x for c in charts for x in c})
    space = sorted({str(x) for x in space}) if space is not None else union
    if union != space:
        raise NotACover("the charts do not cover the space")
    objects = [pair_label(i, x) for i, c in enumerate(charts) for x in c]
    members = [set(c) for c in charts]
    arrows, comp, units = {}, {}, {}
    n = len(charts)
    for i in range(n):
        for j in range(n):
            for x in sorted(members[i] & members[j]):
                arrows[pair_label(i, j, x)] = (pair_label(j, x), pair_label(i, x))
    for i in range(n):
        for x in charts[i]:
            units[pair_label(i, x)] = pair_label(i, i, x)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for x in sorted(members[i] & members[j] & members[k]):
                    comp[(pair_label(i, j, x), pair_label(j, k, x))] = pair_label(i, k, x)
    g = FinGroupoid(objects, arrows, comp, units=units, name=name)
    proj = FiniteMap(g.base, FiniteSet(space), {pair_label(i, x): x
                                                for i, c in enumerate(charts) for x in c})
    return g, proj


def action_groupoid(grp: FinGroupoid, space, act: dict, name: str = ""):
    """Translation groupoid of a group action ``act[(g, x)] = g.x`` and its projection.

    Arrows are ``(g,x): x -> g.x``; the returned functor sends them to g.
    """
    if len(grp.objects) != 1:
        raise InputError("actions are taken by one-object groupoids")
    (star,) = grp.objects
    space = [str(x) for x in space]
    act = {(str(g), str(x)): str(y) for (g, x), y in dict(act).items()}
    if set(act) != {(g, x) for g in grp.arrows for x in space}:
        raise NotAnAction("the action table is not total")
    if not set(act.values()) <= set(space):
        raise NotAnAction("the action leaves the set")
    e = grp.unit[star]
    for x in space:
        if act[(e, x)] != x:
            raise NotAnAction(f"the unit moves {x!r}")
    for (g, h), gh in grp.comp.items():
        for x in space:
            if act[(gh, x)] != act[(g, act[(h, x)])]:
                raise NotAnAction(f"compatibility fails at ({g}, {h}, {x})")
    arrows = {pair_label(g, x): (x, act[(g, x)]) for g in grp.arrows for x in space}
    comp = {(pair_label(g, act[(h, x)]), pair_label(h, x)): pair_label(grp.comp[(g, h)], x)
            for g in grp.arrows for h in grp.arrows for x in space}
    units = {x: pair_label(e, x) for x in space}
    hgrp = FinGroupoid(space, arrows, comp, units=units, name=name or f"{grp.name}.E")
    f = GroupoidFunctor(hgrp, grp, {x: star for x in space},
                        {pair_label(g, x): g for g in grp.arrows for x in space}, name="pr1")
    return hgrp, f


def action_from_actor(f: GroupoidFunctor) -> dict:
    """The action ``g.x`` carried by an actor onto a one-object groupoid."""
    if len(f.target.objects) != 1:
        raise InputError("expected a functor onto a one-object groupoid")
    if not is_actor(f):
        raise NotAFunctor("the functor is not an actor", None)
    h = f.source
    return {(f.farr[a], h.src[a]): h.tgt[a] for a in h.arrows}


def quotient_by(g: FinGroupoid, normal, name: str = ""):
    """Two-sided quotient by a wide principal normal subgroupoid, with its projection.

    Objects are the orbits of the subgroupoid and arrows the double cosets
    ``N a N``, each labelled by its least member.
    """
    keep = set(normal) | set(g.unit.values())
    if not keep <= set(g.arrows):
        raise InputError("the subgroupoid names unknown arrows")
    n = gpd.subgroupoid(g, keep, check=True)
    for a in g.arrows:
        x, y = g.src[a], g.tgt[a]
        for m in n.hom.get((x, x), []):
            if g.compose_path(a, m, g.inv[a]) not in keep:
                raise NotNormal(f"conjugating {m!r} by {a!r} leaves the subgroupoid")
    if not gpd.classify(n).is_godement:
        raise NotPrincipal("the subgroupoid has nontrivial vertex groups")
    orb = gpd.orbit_map(n)
    cls = {}
    for a in g.arrows:
        if a in cls:
            continue
        coset = {g.compose_path(m2, a, m1)
                 for m1 in n.inn[g.src[a]] for m2 in n.out[g.tgt[a]]}
        label = min(coset)
        for b in coset:
            cls[b] = label
    labels = sorted(set(cls.values()))
    arrows = {c: (orb(g.src[c]), orb(g.tgt[c])) for c in labels}
    comp = {}
    for c in labels:
        for d in labels:
            if arrows[c][0] != arrows[d][1]:
                continue
            bridge = n.hom[(g.tgt[d], g.src[c])][0]
            comp[(c, d)] = cls[g.compose_path(c, bridge, d)]
    units = {orb(x): cls[g.unit[x]] for x in g.objects}
    q = FinGroupoid(orb.target.elements, arrows, comp, units=units,
                    name=name or f"{g.name}//N")
    proj = GroupoidFunctor(g, q, orb.as_dict(), cls, name="quotient")
    return q, proj


def dual_groupoid(g: FinGroupoid, name: str = ""):
    """Same arrows with source and target exchanged; the inverse law is an iso onto it."""
    arrows = {a: (g.tgt[a], g.src[a]) for a in g.arrows}
    comp = {(h, a): c for (a, h), c in g.comp.items()}
    d = FinGroupoid(g.objects, arrows, comp, units=g.unit, name=name or f"{g.name}*",
                    check=False)
    varsigma = GroupoidFunctor(g, d, {x: x for x in g.objects}, dict(g.inv), name="varsigma")
    return d, varsigma
