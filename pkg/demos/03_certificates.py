"""
Checking certificates
=====================

Claims that need infinitely many simplices are checked as proof trees
over a closed list of trusted rules.  Every side condition is recomputed.
"""

from dataclasses import replace

from ssetlab.certificates import RULES, check_certificate
from ssetlab.scenario import build_objects, paper_certificates

env = build_objects()
for code, rule in RULES.items():
    print(f"{code:3s} {rule.name}: concludes {rule.concludes}")
print()

for name, cert in paper_certificates().items():
    v = check_certificate(cert, env)
    print(f"{name}: {v.status}")
    for r in v.nodes:
        print(f"  {r.id:14s} {r.rule:3s} {r.detail}")

# Change one parameter and the checker names the node that broke.
cert = paper_certificates()["f_weak_equivalence"]
n = cert.node("g_anodyne")
bad = cert.replace_node(replace(n, params=(("n", "2"), ("k", "0"), ("along", "h"))))
v = check_certificate(bad, env)
print()
print("tampered:", v.status, "at", v.failing_node, "-", v.reason)
