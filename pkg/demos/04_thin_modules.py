"""
Thin irreducible modules and their Leonard systems
==================================================

Split the standard module of L_4(2) into irreducible pieces generated from
kernels of the lowering matrix, and read off each Leonard parameter array.
"""

import lnq
from lnq import tmod
from lnq.report import to_json_value
from lnq.qscalar import multiplicity

ops = lnq.build(4, 2)
dec = tmod.decompose(ops)
for r, modules in sorted(dec.modules.items()):
    print(f"endpoint {r}: {len(modules)} modules (expected {multiplicity(r, 4, 2)}), dimension {modules[0].dim}")
print("total dimension:", sum(dec.dims()), "of", ops.size)

# On a module the adjacency matrix is tridiagonal in the raising basis.
module = dec.modules[1][0]
rep = tmod.representation(ops, module, ops.adjacency)
for row in rep.tolist():
    print("   ", [str(x) for x in row])

records, result = tmod.leonard_report(dec)
print("Leonard systems:", result.status)
for record in records:
    print(to_json_value(record.as_dict()))
