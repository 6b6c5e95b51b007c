"""A fixed collection of small groupoids and functors used by demos, tests and the CLI."""

from __future__ import annotations

import sys
from pathlib import Path

from . import constructions as cons, functor as fn, groupoid as gpd, io, morita


def z2():
    return gpd.cyclic(2, ["e", "s"], name="Z/2")


def swap_action():
    return cons.action_groupoid(z2(), ["0", "1"], {("e", "0"): "0", ("e", "1"): "1",
                                                  ("s", "0"): "1", ("s", "1"): "0"},
                                name="Z/2.swap")


def fix_action():
    act = {("e", x): x for x in "012"}
    act.update({("s", "0"): "1", ("s", "1"): "0", ("s", "2"): "2"})
    return cons.action_groupoid(z2(), ["0", "1", "2"], act, name="Z/2.fix2")


def translation_action():
    z3 = gpd.cyclic(3)
    return cons.action_groupoid(z3, z3.arrows,
                                {(g, x): z3.comp[(g, x)] for g in z3.arrows for x in z3.arrows},
                                name="Z/3.translate")


def groupoids() -> dict:
    """Name -> groupoid, in a fixed order."""
    out = {
        "null2": gpd.null(["a", "b"], name="null2"),
        "point": gpd.point(),
        "banal2": gpd.banal(2),
        "banal3": gpd.banal(3),
        "banal4": gpd.banal(4),
        "z2": z2(),
        "z3": gpd.cyclic(3),
        "z2+z2": gpd.disjoint_union(z2(), z2(), name="Z/2+Z/2"),
        "cech_xyz": cons.cech_groupoid([["x", "y"], ["y", "z"]], name="cech_xyz")[0],
        "cech_xx": cons.cech_groupoid([["x"], ["x"]], name="cech_xx")[0],
        "swap": swap_action()[0],
        "fix2": fix_action()[0],
        "translate3": translation_action()[0],
        "s3": gpd.symmetric3(),
    }
    for name, g in out.items():
        g.name = name
    return out


def functors() -> dict:
    """Name -> functor between corpus groupoids (or constructions on them)."""
    g = groupoids()
    pt = g["point"]
    out = {}
    for name in ("z2", "banal3", "cech_xyz"):
        out[f"id_{name}"] = fn.identity_functor(g[name])
    out["z2_to_point"] = fn.GroupoidFunctor(g["z2"], pt, {"*": "*"},
                                            {a: "id:*" for a in g["z2"].arrows}, name="z2_to_point")
    out["point_to_z2"] = fn.GroupoidFunctor(pt, g["z2"], {"*": "*"}, {"id:*": "e"},
                                            name="point_to_z2")
    out["z2_to_banal2"] = fn.GroupoidFunctor(g["z2"], g["banal2"], {"*": "0"},
                                             {"e": "(0,0)", "s": "(0,0)"}, name="z2_to_banal2")
    for n in ("banal2", "banal3", "banal4", "cech_xx"):
        out[f"{n}_to_point"] = fn.GroupoidFunctor(
            g[n], pt, {x: "*" for x in g[n].objects}, {a: "id:*" for a in g[n].arrows},
            name=f"{n}_to_point")
    fold = g["z2+z2"]
    out["fold"] = fn.GroupoidFunctor(fold, g["z2"], {x: "*" for x in fold.objects},
                                     {a: a.split(":", 1)[1] for a in fold.arrows}, name="fold")
    for key, build in (("swap", swap_action), ("fix2", fix_action)):
        h, f = build()
        f.source.name = key
        f.name = f"{key}_pr1"
        out[f.name] = f
    for name in ("z2", "banal2", "cech_xyz"):
        out[f"delta_{name}"] = fn.delta_functor(g[name])
    return out


def s_equivalences() -> dict:
    """Functors in the corpus known to be s-equivalences."""
    g = groupoids()
    out = {}
    for name, grp in g.items():
        if name == "s3":
            continue
        sq = fn.square_groupoid(grp)
        out[f"pi1_{name}"] = sq.pi1
        out[f"pi2_{name}"] = sq.pi2
    for name, f in functors().items():
        if name.startswith("id_") or name.startswith("banal") or name == "cech_xx_to_point":
            out[name] = f
    return out


def dump(directory) -> list:
    """Write the corpus as JSON files; returns the written paths."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    gs = groupoids()
    for name, g in gs.items():
        path = d / f"{name.replace('+', '_')}.json"
        path.write_text(io.dumps(io.groupoid_to_json(g)), encoding="utf-8")
        written.append(path)
    for name, f in functors().items():
        path = d / f"functor_{name}.json"
        path.write_text(io.dumps(io.functor_to_json(f)), encoding="utf-8")
        written.append(path)
    fractions = {
        "z2_to_point": morita.fraction_of(functors()["z2_to_point"]),
        "identity_z2": morita.identity_fraction(gs["z2"]),
        "banal2_point": morita.morita_witness(gs["banal2"], gs["point"]).as_fraction(),
        "point_banal2": morita.morita_witness(gs["point"], gs["banal2"]).as_fraction(),
    }
    for name, fr in fractions.items():
        path = d / f"fraction_{name}.json"
        path.write_text(io.dumps(io.fraction_to_json(fr)), encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    for p in dump(sys.argv[1] if len(sys.argv) > 1 else "data"):
        print(p)
