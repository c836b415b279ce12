"""
The lattice of subspaces of GF(q)^N
===================================

Enumerate every subspace of GF(2)^3 in reduced row echelon form, then check
the level sizes against Gaussian binomials and the cover counts against
q-integers.
"""

from lnq import enumerate_poset, field_for_order
from lnq.qscalar import q_binomial, q_int

# A field context fixes the arithmetic; GF(4) would use x^2 + x + 1.
field = field_for_order(2)
poset = enumerate_poset(3, field)
print(poset)

# Vertices come sorted by dimension, so each level is a contiguous block.
for k, block in enumerate(poset.dim_blocks):
    print(f"dimension {k}: {len(block):2d} subspaces, Gaussian binomial {q_binomial(3, k, 2)}")

# A vertex is a tuple of RREF rows.
line = poset.dim_blocks[1][0]
print("first line:", poset.vertices[line].rows)

# A k-dimensional subspace covers [k]_q subspaces and is covered by [N-k]_q.
for y in range(len(poset)):
    k = poset.dims[y]
    assert len(poset.covers_down[y]) == q_int(k, 2)
    assert len(poset.covers_up[y]) == q_int(3 - k, 2)
print("cover counts agree with q-integers at every vertex")
