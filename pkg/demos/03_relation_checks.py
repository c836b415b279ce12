"""
Verifying the defining relations with witnesses
===============================================

Run the core relation checks and the Q-polynomial certificate, then break
one matrix entry on purpose to see how a failure is reported.
"""

import copy
from fractions import Fraction

import lnq
from lnq.relcheck import check_qpoly, check_uq_relations, run_core

ops = lnq.build(3, 2, phi=2)

for result in run_core(ops):
    print(f"{result.status:4}  {result.id:<24} {result.assertions} assertions")

qpoly = check_qpoly(ops)
print("Q-polynomial:", qpoly.status)
for line in qpoly.certificates[:3]:
    print("   ", line)

# Add 1/7 to an entry of A linking the bottom vertex to a plane and rerun one check.
broken = copy.copy(ops)
broken.adjacency = ops.adjacency + lnq.ExactMatrix.from_entries(ops.size, ops.size, [(0, 9, Fraction(1, 7))])
result = check_uq_relations(broken)
print("after tampering:", result.status)
print("witness:", result.witness)
