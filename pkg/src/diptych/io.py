"""JSON interchange for groupoids, functors and fractions.

Groupoids are written in compose form: sorted objects, arrows with endpoints,
the unit map and the composition table without the unit rows (those are
implied).  A functor may point at its groupoids by file name, relative to the
file that mentions them.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .functor import GroupoidFunctor
from .groupoid import FinGroupoid, from_sketch
from .morita import Fraction, make_fraction


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def _require(doc, key, kind):
    if not isinstance(doc, dict) or key not in doc:
        raise InputError(f"{kind} description lacks the field {key!r}")
    return doc[key]


# groupoids

def groupoid_to_json(g: FinGroupoid) -> dict:
    comp = sorted([a, b, c] for (a, b), c in g.comp.items()
                  if not g.is_unit(a) and not g.is_unit(b))
    return {
        "name": g.name,
        "objects": list(g.objects),
        "arrows": [{"id": a, "src": g.src[a], "tgt": g.tgt[a]} for a in g.arrows],
        "units": dict(sorted(g.unit.items())),
        "compose": comp,
    }


def groupoid_from_json(doc, base_dir=None) -> FinGroupoid:
    if isinstance(doc, str):
        return groupoid_from_json(load_json(_resolve(doc, base_dir)), _resolve(doc, base_dir).parent)
    if isinstance(doc, dict) and "groupoid" in doc and "objects" not in doc:
        doc = doc["groupoid"]
    if not isinstance(doc, dict):
        raise InputError("groupoid description must be an object")
    name = str(doc.get("name", ""))
    if "sketch" in doc:
        sk = doc["sketch"]
        objects = sk.get("objects", doc.get("objects"))
        arrows = sk.get("arrows", doc.get("arrows"))
        if objects is None or arrows is None:
            raise InputError("sketch needs objects and arrows")
        arrows = [a["id"] if isinstance(a, dict) else a for a in arrows]
        try:
            return from_sketch(objects, arrows, _require(sk, "unit", "sketch"),
                               _require(sk, "source", "sketch"),
                               _require(sk, "division", "sketch"), name=name)
        except (TypeError, ValueError) as exc:
            raise InputError(f"malformed sketch: {exc}") from exc
    objects = _require(doc, "objects", "groupoid")
    try:
        arrows = {str(a["id"]): (str(a["src"]), str(a["tgt"]))
                  for a in _require(doc, "arrows", "groupoid")}
        if len(arrows) != len(doc["arrows"]):
            raise InputError("duplicate arrow ids")
        comp = {}
        for row in doc.get("compose", []):
            g, h, gh = row
            if comp.setdefault((str(g), str(h)), str(gh)) != str(gh):
                raise InputError(f"conflicting composition entries for ({g}, {h})")
    except (TypeError, KeyError, ValueError) as exc:
        raise InputError(f"malformed groupoid description: {exc}") from exc
    return FinGroupoid(objects, arrows, comp, units=doc.get("units"), name=name)


def _resolve(ref, base_dir) -> Path:
    p = Path(ref)
    if not p.is_absolute() and base_dir is not None:
        p = Path(base_dir) / p
    return p


# functors

def functor_to_json(f: GroupoidFunctor, refs: dict | None = None) -> dict:
    """``refs`` maps groupoids (by identity) to names written instead of the full data."""
    refs = refs or {}

    def ref(g):
        for name, h in refs.items():
            if h is g:
                return name
        return groupoid_to_json(g)

    return {"name": f.name, "source": ref(f.source), "target": ref(f.target),
            "object_map": dict(sorted(f.fobj.items())),
            "arrow_map": dict(sorted(f.farr.items()))}


def functor_from_json(doc, base_dir=None, refs: dict | None = None) -> GroupoidFunctor:
    refs = refs or {}
    if isinstance(doc, str):
        path = _resolve(doc, base_dir)
        return functor_from_json(load_json(path), path.parent, refs)

    def grp(x):
        if isinstance(x, str) and x in refs:
            return refs[x]
        return groupoid_from_json(x, base_dir)

    src = grp(_require(doc, "source", "functor"))
    tgt = grp(_require(doc, "target", "functor"))
    om, am = _require(doc, "object_map", "functor"), _require(doc, "arrow_map", "functor")
    if not isinstance(om, dict) or not isinstance(am, dict):
        raise InputError("functor maps must be objects")
    return GroupoidFunctor(src, tgt, om, am, name=str(doc.get("name", "")))


# fractions

def fraction_to_json(fr: Fraction) -> dict:
    refs = {"K": fr.k}
    return {"K": groupoid_to_json(fr.k), "p": functor_to_json(fr.p, refs),
            "q": functor_to_json(fr.q, refs)}


def fraction_from_json(doc, base_dir=None) -> Fraction:
    if isinstance(doc, str):
        path = _resolve(doc, base_dir)
        return fraction_from_json(load_json(path), path.parent)
    k = groupoid_from_json(_require(doc, "K", "fraction"), base_dir)
    refs = {"K": k}
    p = functor_from_json(_require(doc, "p", "fraction"), base_dir, refs)
    q = functor_from_json(_require(doc, "q", "fraction"), base_dir, refs)
    if p.source != k or q.source != k:
        raise InputError("p and q must start at K")
    return make_fraction(p, q)
