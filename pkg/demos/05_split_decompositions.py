"""
q-exponentials and the four split decompositions
================================================

Each split basis is obtained by applying a truncated q-exponential of a
nilpotent operator to the standard basis.  The resulting pieces are
eigenspaces of four variants of the adjacency matrix.
"""

import lnq
from lnq import splitdec

ops = lnq.build(2, 3, phi=1)
ctx = splitdec.SplitContext(ops)

# The series form is checked against a closed form for every vertex.
line = ops.poset.dim_blocks[1][0]
vector = splitdec.split_vector(ctx, line, "DD")
print("down-down vector of a line:", [str(x) for x in vector if x])

decs, results = splitdec.run_splits(ops)
for result in results:
    print(f"{result.status:4}  {result.id}")
for variant, dec in decs.items():
    print(variant, "piece dimensions:", [len(piece) for piece in dec.pieces])
