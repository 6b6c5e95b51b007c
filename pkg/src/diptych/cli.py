"""Command-line front end.

Exit codes: 0 success or a true decision, 1 a false decision, 2 bad input,
3 internal error.  ``--json`` anywhere on the line switches to JSON reports.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import engine, functor as fn, groupoid as gpd, io, morita
from .errors import DiptychError, InputError, OutOfUniverse, SizeLimitExceeded

OK, FALSE, BAD_INPUT, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Report:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines = []
        self.doc = None

    def text(self, line=""):
        self.lines.append(str(line))

    def render(self) -> str:
        if self.as_json:
            return io.dumps(self.doc)
        return "\n".join(self.lines) + "\n"


def _groupoid(path):
    return io.groupoid_from_json(io.load_json(path), Path(path).parent)


def _functor(path):
    return io.functor_from_json(io.load_json(path), Path(path).parent)


def _fraction(path):
    return io.fraction_from_json(io.load_json(path), Path(path).parent)


def _flags(d: dict) -> str:
    return ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in d.items())


# verbs

def cmd_validate(args, rep):
    g = _groupoid(args.groupoid)
    rep.doc = {"valid": True, "objects": len(g.objects), "arrows": len(g.arrows),
               "groupoid": io.groupoid_to_json(g)}
    rep.text(f"valid groupoid {g.name or args.groupoid}: {len(g.objects)} objects, "
             f"{len(g.arrows)} arrows")
    return OK


def cmd_classify(args, rep):
    g = _groupoid(args.groupoid)
    cls = gpd.classify(g)
    rep.doc = {"flags": cls.flags(),
               "regular_image": list(cls.regular_tau.source.elements)}
    rep.text(f"{g.name or args.groupoid}: {_flags(cls.flags())}")
    return OK


def cmd_orbits(args, rep):
    g = _groupoid(args.groupoid)
    out = []
    for orb in gpd.orbits(g):
        iso = gpd.isotropy(g, orb[0])
        out.append({"orbit": list(orb), "isotropy_order": iso.order,
                    "isotropy": {"elements": list(iso.elements),
                                 "table": [list(r) for r in iso.table]}})
        rep.text(f"orbit {{{', '.join(orb)}}}: isotropy of order {iso.order}")
    rep.doc = {"orbits": out}
    return OK


def cmd_nerve(args, rep):
    g = _groupoid(args.groupoid)
    lvl = gpd.nerve(g, args.level)
    ok = gpd.check_nerve_bijections(g, args.level)
    rep.doc = {"level": args.level, "paths": len(lvl.paths), "wedges": len(lvl.wedges),
               "simplices": len(lvl.simplices), "bijective": ok}
    rep.text(f"level {args.level}: {len(lvl.paths)} paths, {len(lvl.wedges)} wedges, "
             f"{len(lvl.simplices)} simplices; descriptions in bijection: {'yes' if ok else 'no'}")
    return OK if ok else FALSE


def cmd_exactness(args, rep):
    g = _groupoid(args.groupoid)
    r = gpd.check_nerve_exactness(g, args.max)
    rep.doc = {"exact": r.ok, "squares_checked": r.squares_checked,
               "arrows_checked": r.arrows_checked, "witness": r.witness}
    rep.text(f"exact up to level {args.max}: {'yes' if r.ok else 'no'} "
             f"({r.squares_checked} squares, {r.arrows_checked} arrows)")
    if r.witness:
        rep.text(f"witness: {r.witness}")
    return OK if r.ok else FALSE


def cmd_classify_functor(args, rep):
    f = _functor(args.functor)
    cls = fn.classify_functor(f)
    rep.doc = {"class": cls.to_json()}
    rep.text(f"{f.name or args.functor}: {_flags(cls.to_json())}")
    return OK


def cmd_square_groupoid(args, rep):
    g = _groupoid(args.groupoid)
    sq = fn.square_groupoid(g)
    c1, c2 = fn.classify_functor(sq.pi1), fn.classify_functor(sq.pi2)
    rep.doc = {"groupoid": io.groupoid_to_json(sq.box),
               "pi1": {"s_equivalence": c1.is_s_equivalence, "split": c1.is_split},
               "pi2": {"s_equivalence": c2.is_s_equivalence, "split": c2.is_split}}
    rep.text(f"square groupoid: {len(sq.box.objects)} objects, {len(sq.box.arrows)} arrows")
    for name, c in (("pi1", c1), ("pi2", c2)):
        rep.text(f"{name}: s-equivalence={'yes' if c.is_s_equivalence else 'no'}, "
                 f"split={'yes' if c.is_split else 'no'}")
    return OK


def cmd_holograph(args, rep):
    f = _functor(args.functor)
    hol = fn.holograph(f)
    cq = fn.classify_functor(hol.q)
    p_exactor = fn.is_exactor(hol.p)
    fr = morita.make_fraction(hol.p, hol.q)
    rep.doc = {"fraction": io.fraction_to_json(fr),
               "q": {"s_equivalence": cq.is_s_equivalence, "split": cq.is_split},
               "p": {"exactor": p_exactor}, "butterfly": fr.butterfly()}
    rep.text(f"holograph: {len(hol.k.objects)} objects, {len(hol.k.arrows)} arrows")
    rep.text(f"q: s-equivalence={'yes' if cq.is_s_equivalence else 'no'}, "
             f"split={'yes' if cq.is_split else 'no'}; p: exactor={'yes' if p_exactor else 'no'}")
    if args.out:
        Path(args.out).write_text(io.dumps(io.fraction_to_json(fr)), encoding="utf-8")
    return OK


def cmd_morita(args, rep):
    h, g = _groupoid(args.h), _groupoid(args.g)
    res = morita.morita_equivalent(h, g, witness=True)
    rep.doc = {"equivalent": res.equivalent,
               "invariant_h": res.invariant_h.to_json(), "invariant_g": res.invariant_g.to_json()}
    if res.equivalent:
        rep.text("Morita equivalent")
        fr = res.span.as_fraction()
        rep.doc["witness"] = {"objects": len(fr.k.objects), "arrows": len(fr.k.arrows)}
        rep.text(f"witness span through {len(fr.k.objects)} objects, {len(fr.k.arrows)} arrows")
        if args.witness:
            Path(args.witness).write_text(io.dumps(io.fraction_to_json(fr)), encoding="utf-8")
        return OK
    rep.text("not Morita equivalent")
    rep.text(f"isotropy orders: {res.invariant_h.orders} vs {res.invariant_g.orders}")
    return FALSE


def cmd_fraction(args, rep):
    if args.action == "validate":
        if len(args.files) != 1:
            raise UsageError("fraction validate takes one file")
        fr = _fraction(args.files[0])
        b = fr.butterfly()
        rep.doc = {"valid": True, "irreducible": fr.is_irreducible,
                   "morita": morita.is_morita_fraction(fr), "butterfly": b}
        rep.text(f"valid fraction; irreducible={'yes' if fr.is_irreducible else 'no'}, "
                 f"morita={'yes' if rep.doc['morita'] else 'no'}")
        rep.text(f"butterfly: |R|={b['R_size']}, |S|={b['S_size']}, "
                 f"u {b['u_class']}, v {b['v_class']}")
        return OK
    if args.action == "reduce":
        if len(args.files) != 1:
            raise UsageError("fraction reduce takes one file")
        m = morita.reduce(_fraction(args.files[0]))
        rep.doc = {"fraction": io.fraction_to_json(m.representative), "steps": len(m.chain)}
        rep.text(f"irreducible after {len(m.chain)} steps: "
                 f"{len(m.representative.k.objects)} objects, {len(m.representative.k.arrows)} arrows")
        if args.out:
            Path(args.out).write_text(io.dumps(io.fraction_to_json(m.representative)),
                                      encoding="utf-8")
        return OK
    if len(args.files) != 2:
        raise UsageError("fraction compose takes two files: the outer then the inner fraction")
    m2, m1 = _fraction(args.files[0]), _fraction(args.files[1])
    c = morita.compose(m2, m1)
    rep.doc = {"fraction": io.fraction_to_json(c), "butterfly": c.butterfly()}
    rep.text(f"composite: {len(c.k.objects)} objects, {len(c.k.arrows)} arrows")
    if args.out:
        Path(args.out).write_text(io.dumps(io.fraction_to_json(c)), encoding="utf-8")
    return OK


def cmd_diptych_check(args, rep):
    if args.cap < 0:
        raise UsageError("--cap must be non-negative")
    d = engine.instance(args.instance, args.cap)
    report = engine.check_axioms(d, args.cap)
    rep.doc = {"instance": args.instance, "cap": args.cap, "axioms": report.to_json(),
               "failures": len(report.failures)}
    for s in report.statuses.values():
        extra = f" (skipped {s.skipped_count})" if s.skipped_count else ""
        rep.text(f"{s.axiom}: {s.status}{extra}")
        if s.counterexample:
            rep.text(f"  counterexample: {s.counterexample}")
    rep.text(f"{len(report.failures)} failures")
    return OK if not report.failures else FALSE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diptych", description="Finite groupoids, diptych axioms and fractions.")
    p.add_argument("--json", action="store_true", help="emit JSON reports")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(func=func)
        return s

    for name, func, help_ in (("validate", cmd_validate, "validate a groupoid"),
                              ("classify", cmd_classify, "classification flags"),
                              ("orbits", cmd_orbits, "orbits and isotropy groups"),
                              ("square-groupoid", cmd_square_groupoid, "the square groupoid")):
        verb(name, func, help_).add_argument("groupoid")
    verb("nerve", cmd_nerve, "nerve level in three descriptions").add_argument("groupoid")
    sub.choices["nerve"].add_argument("--level", type=int, required=True)
    verb("exactness", cmd_exactness, "exactness of the nerve").add_argument("groupoid")
    sub.choices["exactness"].add_argument("--max", type=int, default=3)
    verb("classify-functor", cmd_classify_functor, "A/T square classification").add_argument("functor")
    s = verb("holograph", cmd_holograph, "holograph of a functor")
    s.add_argument("functor")
    s.add_argument("--out")
    s = verb("morita", cmd_morita, "Morita equivalence decision")
    s.add_argument("h")
    s.add_argument("g")
    s.add_argument("--witness")
    s = verb("fraction", cmd_fraction, "fraction calculus")
    s.add_argument("action", choices=["validate", "reduce", "compose"])
    s.add_argument("files", nargs="+")
    s.add_argument("--out")
    s = verb("diptych-check", cmd_diptych_check, "diptych axiom suite")
    s.add_argument("--instance", choices=sorted(engine.INSTANCES), required=True)
    s.add_argument("--cap", type=int, default=3)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = build_parser().parse_args(argv)
        rep = Report(as_json)
        code = args.func(args, rep)
        stdout.write(rep.render())
        return code
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return BAD_INPUT
    except (InputError, OutOfUniverse, SizeLimitExceeded) as exc:
        stderr.write(f"error: {type(exc).__name__}: {' '.join(str(exc).split())}\n")
        return BAD_INPUT
    except (DiptychError, AssertionError) as exc:
        stderr.write(f"internal error: {type(exc).__name__}: {' '.join(str(exc).split())}\n")
        return INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
