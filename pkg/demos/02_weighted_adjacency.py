"""
Raising, lowering and the weighted adjacency matrix
===================================================

Build the exact operators on L_3(2) with weight phi = 3/2 and look at the
spectrum of the adjacency matrix.
"""

from fractions import Fraction

import numpy as np

import lnq
from lnq.exactla import rank

ops = lnq.build(3, 2, phi=Fraction(3, 2))
params = ops.params
print(ops)

# R moves one level up, L one level down, and L is the transpose of R.
assert ops.lowering == ops.raising.transpose()
print("nonzeros in R:", ops.raising.nnz())

# The dual adjacency matrix is diagonal with entries q^(-dim).
print("diagonal of A*:", [str(x) for x in ops.dual_adjacency.diagonal_entries()[:5]], "...")

# The eigenvalues of A are known in closed form.
thetas = params.eigenvalues()
print("eigenvalues:", [str(t) for t in thetas])

# The Lagrange products give the primitive idempotents exactly.
for i, theta in enumerate(thetas):
    e = ops.idempotent(i)
    print(f"E_{i}: rank {rank(e)}, trace {e.trace()}, A E_{i} = {theta} E_{i}:", ops.adjacency @ e == e * theta)

# Floating point agrees, but only approximately; the package never relies on it.
dense = np.array(ops.adjacency.dense_rows(), dtype=float)
print("numpy eigenvalues:", np.round(np.sort(np.linalg.eigvals(dense).real)[::-1], 6))
