"""Certifying the boundary correction: c(graph, Y) >= 0 for every
enumerated boundary divisor.

Writing X = a lambda - b delta - Y, the correction Y is supported on the
boundary.  Each boundary graph is probed by a partial pencil living inside
it; intersecting the pencil with X yields an inequality relating the
graph's Y-coefficient to those of the graphs its degenerations hit, plus a
slack rederived from the pencil record.  Chains of inequalities ground out
at rational-vertex pencils and at the irreducible-node divisor.
"""

import json

from hurwitzcalc.directrix import maroni_intersection_pentagonal
from hurwitzcalc.family_calc import partial_pencil_record
from hurwitzcalc.yeff import build_rules, certify, multivertex_margin

print("=== the records the rules come from (degree 3, genus 6) ===")
for kind in ("trigonal_unramified_3pts", "trigonal_ramified_21",
             "trigonal_triple"):
    rec = partial_pencil_record(kind, gr=2)
    hits = {k: str(v) for k, v in rec.boundary_hits.items()}
    print(f"{kind}: lambda = {rec.lam}, delta = {rec.delta}, hits = {hits}")

print()
print("=== rules for (d, g) = (3, 6) ===")
rules = build_rules(3, 6)
for label in sorted(rules)[:6]:
    rule = rules[label]
    targets = ", ".join(f"{c} x [{t[:34]}...]" for t, c in rule.targets) or "none"
    print(f"slack {str(rule.slack).rjust(4)}  targets: {targets}")
print(f"... {len(rules)} rules in total")

print()
print("=== the degree-five Maroni rotation count ===")
for genus in (6, 16, 36):
    print(f"genus {genus}: M . p = {maroni_intersection_pentagonal(genus)}")

print()
print("=== certification runs ===")
for d, g in ((3, 6), (4, 9), (5, 16)):
    cert = certify(d, g)
    worst = min(res.lower_bound for res in cert.per_graph.values())
    print(f"(d, g) = ({d}, {g}): {cert.status}, {len(cert.per_graph)} graphs, "
          f"smallest lower bound {worst}, "
          f"multi-vertex margin {multivertex_margin(d, g)}")

print()
print("=== a replayable certificate ===")
cert = certify(3, 4)
payload = cert.to_json()
label, entry = sorted(payload["graphs"].items())[0]
print(f"graph {label}")
print(json.dumps(entry, indent=2)[:400])
