"""The subspace lattice L_N(q): enumeration, canonical order, covers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .gfq import FieldCtx
from .qscalar import q_binomial

DEFAULT_MAX_VERTICES = 100_000

Row = tuple  # tuple[int, ...] of field elements


class VertexCapExceeded(RuntimeError):
    pass


def rref(rows: Sequence[Sequence[int]], field: FieldCtx) -> tuple[Row, ...]:
    """Reduced row echelon form over GF(q), zero rows dropped."""
    m = [list(r) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    out_rows = 0
    for c in range(ncols):
        p = next((i for i in range(out_rows, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[out_rows], m[p] = m[p], m[out_rows]
        pr = m[out_rows]
        inv = field.inv(pr[c])
        if inv != 1:
            pr[:] = [field.mul(inv, x) for x in pr]
        for i in range(len(m)):
            if i != out_rows and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], pr)]
        out_rows += 1
        if out_rows == len(m):
            break
    return tuple(tuple(r) for r in m[:out_rows])


def _pivots(rows: Sequence[Row]) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in rows]


def reduce_vector(v: Sequence[int], rows: Sequence[Row], field: FieldCtx) -> list[int]:
    """Remainder of v after eliminating against RREF rows; zero iff v lies in their span."""
    v = list(v)
    for r, p in zip(rows, _pivots(rows)):
        c = v[p]
        if c:
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, r)]
    return v


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^N given by its RREF basis."""

    dim: int
    rows: tuple[Row, ...]

    @property
    def encoding(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    @property
    def sort_key(self):
        return (self.dim, self.encoding)


def count_vertices(n: int, q: int) -> int:
    return sum(int(q_binomial(n, i, q)) for i in range(n + 1))


def _subspaces_of_dim(n: int, k: int, field: FieldCtx):
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivot_set]
        for values in itertools.product(field.elements(), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            yield Subspace(k, tuple(tuple(r) for r in rows))


class SubspacePoset:
    """All subspaces of GF(q)^N in canonical order (dimension, then RREF encoding).

    ``covers_up[v]`` lists the vertices covering ``v``; ``covers_down[v]`` the
    vertices that ``v`` covers.  Both are sorted tuples of vertex indices.
    """

    def __init__(self, n: int, field: FieldCtx, vertices: Sequence[Subspace]):
        self.n = n
        self.field = field
        self.q = field.q
        self.vertices = tuple(vertices)
        keys = [v.sort_key for v in self.vertices]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("vertices are not in strictly increasing canonical order")
        self.index = {v.rows: i for i, v in enumerate(self.vertices)}
        self.dims = tuple(v.dim for v in self.vertices)
        blocks = []
        for i in range(n + 1):
            members = [j for j, d in enumerate(self.dims) if d == i]
            blocks.append(range(members[0], members[-1] + 1) if members else range(0))
        self.dim_blocks = tuple(blocks)
        self.covers_up, self.covers_down = self._compute_covers()

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"SubspacePoset(N={self.n}, q={self.q}, |X|={len(self)})"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.vertices) - 1

    def label(self, i: int) -> str:
        v = self.vertices[i]
        return f"#{i} dim {v.dim} {[list(r) for r in v.rows]}"

    def lookup(self, rows: Sequence[Sequence[int]]) -> int:
        return self.index[rref(rows, self.field)]

    def _compute_covers(self):
        points = [v.rows[0] for v in self.vertices if v.dim == 1]
        up = []
        for v in self.vertices:
            above = set()
            if v.dim < self.n:
                for pt in points:
                    if any(reduce_vector(pt, v.rows, self.field)):
                        above.add(self.index[rref(v.rows + (pt,), self.field)])
            up.append(tuple(sorted(above)))
        down = [[] for _ in self.vertices]
        for y, ups in enumerate(up):
            for z in ups:
                down[z].append(y)
        return tuple(up), tuple(tuple(d) for d in down)

    # order relations ---------------------------------------------------------

    def contains(self, x: int, y: int) -> bool:
        """True iff subspace x is contained in subspace y."""
        ry = self.vertices[y].rows
        return all(not any(reduce_vector(r, ry, self.field)) for r in self.vertices[x].rows)

    def covers(self, z: int, y: int) -> bool:
        """True iff z covers y."""
        return self.dims[z] == self.dims[y] + 1 and self.contains(y, z)

    def join_dim(self, x: int, y: int) -> int:
        return len(rref(self.vertices[x].rows + self.vertices[y].rows, self.field))

    def meet_join_dims(self, x: int, y: int) -> tuple[int, int]:
        join = self.join_dim(x, y)
        return self.dims[x] + self.dims[y] - join, join

    def meet_dim_direct(self, x: int, y: int) -> int:
        """dim(x ∩ y) by listing every vector of x and testing membership in y."""
        field = self.field
        rx, ry = self.vertices[x].rows, self.vertices[y].rows
        count = 0
        for coeffs in itertools.product(field.elements(), repeat=len(rx)):
            v = [0] * self.n
            for c, r in zip(coeffs, rx):
                if c:
                    v = [field.add(a, field.mul(c, b)) for a, b in zip(v, r)]
            if not any(reduce_vector(v, ry, field)):
                count += 1
        d = 0
        while self.q**d < count:
            d += 1
        assert self.q**d == count
        return d

    def below(self, y: int) -> list[int]:
        """All z <= y, in canonical order."""
        return [z for z in range(len(self)) if self.dims[z] <= self.dims[y] and self.contains(z, y)]

    def above(self, y: int) -> list[int]:
        """All z >= y, in canonical order."""
        return [z for z in range(len(self)) if self.dims[z] >= self.dims[y] and self.contains(y, z)]


def enumerate_poset(n: int, field: FieldCtx, max_vertices: int = DEFAULT_MAX_VERTICES) -> SubspacePoset:
    if n < 1:
        raise ValueError("N must be >= 1")
    total = count_vertices(n, field.q)
    if total > max_vertices:
        raise VertexCapExceeded(f"L_{n}({field.q}) has {total} vertices, cap is {max_vertices}")
    vertices = []
    for k in range(n + 1):
        vertices.extend(sorted(_subspaces_of_dim(n, k, field), key=lambda s: s.encoding))
    poset = SubspacePoset(n, field, vertices)
    for k in range(n + 1):
        assert len(poset.dim_blocks[k]) == q_binomial(n, k, field.q)
    return poset
