"""Every matrix attached to the weighted structure on L_N(q), indexed by vertices."""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactla import ExactMatrix
from .geometry import SubspacePoset
from .qscalar import Params, dual_eigenvalue, eigenvalue


class OperatorSet:
    """Operators on the standard module of one poset at fixed ``phi``.

    Attribute names follow what the operator does:

    ===========================  ========================================
    ``dual_idempotents[i]``      projection onto the dimension-i vertices
    ``dual_adjacency``           diagonal, q^{-dim y}
    ``raising`` / ``lowering``   cover matrices (``lowering`` = transpose)
    ``adjacency``                phi-weighted adjacency matrix
    ``raising_equitable``        (A*)^{-1}/(q-1) - R
    ``lowering_equitable``       (A*)^{-1}/(q-1) + (A*)^{-1} L
    ``raising_equitable_alt``    (A*)^{-1}/(q-1) + phi^{-1} R
    ``lowering_equitable_alt``   (A*)^{-1}/(q-1) - phi (A*)^{-1} L
    ``symmetrizer_sq``           diagonal D^2 with A^t = D^2 A D^{-2}
    ``idempotent(i)``            primitive idempotent of the adjacency
                                 matrix for its i-th eigenvalue (lazy)
    ===========================  ========================================
    """

    def __init__(self, poset: SubspacePoset, params: Params):
        if poset.n != params.n or poset.q != params.q:
            raise ValueError(f"poset L_{poset.n}({poset.q}) does not match {params}")
        self.poset = poset
        self.params = params
        self.size = len(poset)
        q, phi = Fraction(params.q), params.phi

        self.dual_idempotents = [self.build_dual_idempotent(i) for i in range(params.n + 1)]
        self.dual_adjacency = ExactMatrix.diagonal([q**-d for d in poset.dims])
        self.dual_adjacency_inv = ExactMatrix.diagonal([q**d for d in poset.dims])
        self.raising = self.build_raising()
        self.lowering = self.build_lowering()
        self.adjacency = self.build_adjacency()

        inv_scaled = self.dual_adjacency_inv / (q - 1)
        inv_lower = self.dual_adjacency_inv @ self.lowering
        self.raising_equitable = inv_scaled - self.raising
        self.lowering_equitable = inv_scaled + inv_lower
        self.raising_equitable_alt = inv_scaled + self.raising / phi
        self.lowering_equitable_alt = inv_scaled - inv_lower * phi

        assert self.adjacency == self.lowering_equitable * phi - self.raising_equitable
        assert self.adjacency == self.raising_equitable_alt * phi - self.lowering_equitable_alt

        self.symmetrizer_sq = ExactMatrix.diagonal([self.symmetrizer_entry(d) for d in poset.dims])
        self._idempotents = None
        self._lock = threading.Lock()

    def __repr__(self):
        p = self.params
        return f"OperatorSet(N={p.n}, q={p.q}, phi={p.phi}, |X|={self.size})"

    def identity(self) -> ExactMatrix:
        return ExactMatrix.identity(self.size)

    def zero(self) -> ExactMatrix:
        return ExactMatrix.zeros(self.size)

    # builders ------------------------------------------------------------------

    def build_dual_idempotent(self, i: int) -> ExactMatrix:
        """0/1 diagonal selecting dimension-i vertices; zero outside 0..N."""
        return ExactMatrix.diagonal([1 if d == i else 0 for d in self.poset.dims])

    def dual_idempotent(self, i: int) -> ExactMatrix:
        if 0 <= i <= self.params.n:
            return self.dual_idempotents[i]
        return self.zero()

    def build_raising(self) -> ExactMatrix:
        # entry (y, z) is 1 iff y covers z
        entries = [(y, z, 1) for z, ups in enumerate(self.poset.covers_up) for y in ups]
        return ExactMatrix.from_entries(self.size, self.size, entries)

    def build_lowering(self) -> ExactMatrix:
        # entry (y, z) is 1 iff z covers y
        entries = [(y, z, 1) for y, ups in enumerate(self.poset.covers_up) for z in ups]
        low = ExactMatrix.from_entries(self.size, self.size, entries)
        assert low == self.raising.transpose()
        return low

    def build_adjacency(self) -> ExactMatrix:
        """Entrywise construction, cross-checked against R + phi (A*)^{-1} L + diagonal."""
        q, phi = Fraction(self.params.q), self.params.phi
        dims = self.poset.dims
        entries = []
        for y in range(self.size):
            for z in self.poset.covers_down[y]:
                entries.append((y, z, 1))
            for z in self.poset.covers_up[y]:
                entries.append((y, z, phi * q ** dims[y]))
            entries.append((y, y, (phi - 1) / (q - 1) * q ** dims[y]))
        adj = ExactMatrix.from_entries(self.size, self.size, entries)
        via_formula = (
            self.raising
            + (self.dual_adjacency_inv @ self.lowering) * phi
            + self.dual_adjacency_inv * ((phi - 1) / (q - 1))
        )
        assert adj == via_formula, "entrywise adjacency disagrees with its operator form"
        return adj

    def symmetrizer_entry(self, i: int) -> Fraction:
        """s_i^2 with s_0^2 = 1 and s_{i+1}^2 = s_i^2 q^i phi."""
        out = Fraction(1)
        for j in range(i):
            out *= self.params.q**j * self.params.phi
        return out

    # primitive idempotents ---------------------------------------------------

    def lagrange_numerator(self, i: int) -> ExactMatrix:
        """prod_{j != i} (A - theta_j I)."""
        out = self.identity()
        for j in range(self.params.n + 1):
            if j != i:
                out = out @ self.adjacency.shift(-eigenvalue(j, self.params))
        return out

    def build_idempotent(self, i: int) -> ExactMatrix:
        theta_i = eigenvalue(i, self.params)
        denom = Fraction(1)
        for j in range(self.params.n + 1):
            if j != i:
                denom *= theta_i - eigenvalue(j, self.params)
        return self.lagrange_numerator(i) / denom

    @property
    def idempotents(self) -> list[ExactMatrix]:
        if self._idempotents is None:
            with self._lock:
                if self._idempotents is None:
                    self._idempotents = [self.build_idempotent(i) for i in range(self.params.n + 1)]
        return self._idempotents

    def idempotent(self, i: int) -> ExactMatrix:
        if 0 <= i <= self.params.n:
            return self.idempotents[i]
        return self.zero()

    def dual_lagrange(self, i: int) -> ExactMatrix:
        """prod_{j != i} (A* - theta*_j I)/(theta*_i - theta*_j)."""
        out = self.identity()
        ti = dual_eigenvalue(i, self.params)
        for j in range(self.params.n + 1):
            if j != i:
                tj = dual_eigenvalue(j, self.params)
                out = out @ (self.dual_adjacency.shift(-tj) / (ti - tj))
        return out
