"""
Checking the diptych axioms
===========================

Run the axiom suite on finite sets, its opposite, the cardinal site and a
deliberately broken instance where every map counts as a good epi.
"""

from diptych import engine

for name in ("finset", "finset-op", "nc", "nc-star", "finset-broken"):
    report = engine.check_axioms(engine.instance(name), 3)
    skipped = sum(s.skipped_count for s in report.statuses.values())
    print(f"{name:14s} failures={len(report.failures)} skipped={skipped}")
    for axiom in report.failures:
        print("   ", axiom, report[axiom].counterexample)
