"""Exact rational matrices, vectors, and fraction-free elimination.

Vectors are plain lists of :class:`~fractions.Fraction`.  Matrices are
:class:`ExactMatrix`, stored either sparse (one ``{col: value}`` dict per
row, never holding a zero) or dense (a list of row lists).  Products pick a
kernel from the storage of their operands; anything touching a dense operand
comes back dense.

Rank, nullspace and span questions are answered by Bareiss elimination on
integer rows, so no intermediate fractions are formed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

import numpy as np

Vector = list  # list[Fraction]

_ZERO = Fraction(0)

# fill ratio above which products switch to the dense integer kernel
DENSE_THRESHOLD = 0.25


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "sparse", "_data", "domain")

    def __init__(self, nrows: int, ncols: int, data, sparse: bool, domain: str = "vertex"):
        self.nrows = nrows
        self.ncols = ncols
        self.sparse = sparse
        self._data = data
        self.domain = domain

    # construction -----------------------------------------------------------

    @classmethod
    def zeros(cls, nrows, ncols=None, domain="vertex"):
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, [{} for _ in range(nrows)], True, domain)

    @classmethod
    def identity(cls, n, domain="vertex"):
        return cls(n, n, [{i: Fraction(1)} for i in range(n)], True, domain)

    @classmethod
    def diagonal(cls, values: Sequence, domain="vertex"):
        rows = [{i: _frac(v)} if v != 0 else {} for i, v in enumerate(values)]
        return cls(len(rows), len(rows), rows, True, domain)

    @classmethod
    def from_entries(cls, nrows, ncols, entries, domain="vertex"):
        """Sparse matrix from an iterable of ``(i, j, value)``; repeats are summed."""
        rows = [{} for _ in range(nrows)]
        for i, j, v in entries:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            s = rows[i].get(j, _ZERO) + _frac(v)
            if s:
                rows[i][j] = s
            else:
                rows[i].pop(j, None)
        return cls(nrows, ncols, rows, True, domain)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], domain="vertex"):
        """Dense matrix from a list of rows."""
        data = [[_frac(x) for x in row] for row in rows]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), ncols, data, False, domain)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], domain="basis"):
        ncols = len(columns)
        nrows = len(columns[0]) if columns else 0
        return cls.from_rows([[columns[j][i] for j in range(ncols)] for i in range(nrows)], domain)

    # access -------------------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        if self.sparse:
            return self._data[i].get(j, _ZERO)
        return self._data[i][j]

    def row(self, i) -> dict:
        """Nonzero entries of row i as ``{col: value}``."""
        if self.sparse:
            return self._data[i]
        return {j: v for j, v in enumerate(self._data[i]) if v}

    def nonzeros(self):
        for i in range(self.nrows):
            for j, v in sorted(self.row(i).items()):
                yield i, j, v

    def density(self) -> float:
        if not self.nrows or not self.ncols:
            return 0.0
        return self.nnz() / (self.nrows * self.ncols)

    def nnz(self) -> int:
        if self.sparse:
            return sum(len(r) for r in self._data)
        return sum(1 for r in self._data for v in r if v)

    def dense_rows(self) -> list[list[Fraction]]:
        if not self.sparse:
            return [list(r) for r in self._data]
        out = []
        for r in self._data:
            row = [_ZERO] * self.ncols
            for j, v in r.items():
                row[j] = v
            out.append(row)
        return out

    def to_dense(self) -> "ExactMatrix":
        if not self.sparse:
            return self
        return ExactMatrix(self.nrows, self.ncols, self.dense_rows(), False, self.domain)

    def to_sparse(self) -> "ExactMatrix":
        if self.sparse:
            return self
        data = [{j: v for j, v in enumerate(r) if v} for r in self._data]
        return ExactMatrix(self.nrows, self.ncols, data, True, self.domain)

    def columns(self) -> list[Vector]:
        rows = self.dense_rows()
        return [[rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]

    def column(self, j) -> Vector:
        return [self[i, j] for i in range(self.nrows)]

    def diagonal_entries(self) -> list[Fraction]:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def trace(self) -> Fraction:
        return sum(self.diagonal_entries(), _ZERO)

    def is_diagonal(self) -> bool:
        return all(i == j for i, j, _ in self.nonzeros())

    def is_zero(self) -> bool:
        return self.first_nonzero() is None

    def first_nonzero(self):
        for i in range(self.nrows):
            r = self.row(i)
            if r:
                j = min(r)
                return i, j, r[j]
        return None

    def first_difference(self, other: "ExactMatrix"):
        """First ``(i, j, self_ij, other_ij)`` where the matrices differ, else None."""
        self._check_same_shape(other)
        for i in range(self.nrows):
            a, b = self.row(i), other.row(i)
            if a != b:
                j = min(c for c in a.keys() | b.keys() if a.get(c, _ZERO) != b.get(c, _ZERO))
                return i, j, a.get(j, _ZERO), b.get(j, _ZERO)
        return None

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.first_difference(other) is None

    __hash__ = None

    def __repr__(self):
        kind = "sparse" if self.sparse else "dense"
        return f"ExactMatrix({self.nrows}x{self.ncols}, {kind}, nnz={self.nnz()})"

    def tolist(self):
        return self.dense_rows()

    # arithmetic -----------------------------------------------------------------

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def _combine(self, other, sign):
        self._check_same_shape(other)
        if self.sparse and other.sparse:
            data = []
            for a, b in zip(self._data, other._data):
                r = dict(a)
                for j, v in b.items():
                    s = r.get(j, _ZERO) + sign * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
                data.append(r)
            return ExactMatrix(self.nrows, self.ncols, data, True, self.domain)
        a, b = self.dense_rows(), other.dense_rows()
        data = [[x + sign * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        return ExactMatrix(self.nrows, self.ncols, data, False, self.domain)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = _frac(c)
        if c == 0:
            return ExactMatrix.zeros(self.nrows, self.ncols, self.domain)
        if self.sparse:
            data = [{j: c * v for j, v in r.items()} for r in self._data]
            return ExactMatrix(self.nrows, self.ncols, data, True, self.domain)
        data = [[c * v for v in r] for r in self._data]
        return ExactMatrix(self.nrows, self.ncols, data, False, self.domain)

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(1 / _frac(c))

    def shift(self, c) -> "ExactMatrix":
        """self + c I."""
        return self + ExactMatrix.identity(self.nrows, self.domain).scale(c)

    def transpose(self) -> "ExactMatrix":
        if self.sparse:
            data = [{} for _ in range(self.ncols)]
            for i, r in enumerate(self._data):
                for j, v in r.items():
                    data[j][i] = v
            return ExactMatrix(self.ncols, self.nrows, data, True, self.domain)
        data = [list(col) for col in zip(*self._data)] if self.nrows else [[] for _ in range(self.ncols)]
        return ExactMatrix(self.ncols, self.nrows, data, False, self.domain)

    @property
    def T(self):
        return self.transpose()

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        if self.sparse and other.sparse and self.density() < DENSE_THRESHOLD and other.density() < DENSE_THRESHOLD:
            return _mul_sparse_sparse(self, other)
        return _mul_dense_dense(self, other)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} does not match {self.ncols} columns")
        out = []
        for i in range(self.nrows):
            s = _ZERO
            for j, a in self.row(i).items():
                x = v[j]
                if x:
                    s += a * x
            out.append(s)
        return out

    def power(self, e: int) -> "ExactMatrix":
        out = ExactMatrix.identity(self.nrows, self.domain)
        for _ in range(e):
            out = out @ self
        return out


def _mul_sparse_sparse(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    data = []
    for ra in a._data:
        acc = {}
        for k, x in ra.items():
            for j, y in b._data[k].items():
                acc[j] = acc.get(j, _ZERO) + x * y
        data.append({j: v for j, v in acc.items() if v})
    out = ExactMatrix(a.nrows, b.ncols, data, True, a.domain)
    return out.to_dense() if out.density() >= DENSE_THRESHOLD else out


def _integer_form(m: ExactMatrix):
    """(object int array, common denominator) with m = array / denominator."""
    den = 1
    for i in range(m.nrows):
        for x in m.row(i).values():
            if x.denominator != 1:
                den = lcm(den, x.denominator)
    arr = np.zeros((m.nrows, m.ncols), dtype=object)
    for i in range(m.nrows):
        for j, x in m.row(i).items():
            arr[i, j] = x.numerator * (den // x.denominator)
    return arr, den


def _mul_dense_dense(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    # integer kernel: scale both to a common denominator, multiply in Python ints
    ia, da = _integer_form(a)
    ib, db = _integer_form(b)
    prod = ia.dot(ib) if a.nrows and b.ncols else np.zeros((a.nrows, b.ncols), dtype=object)
    den = da * db
    data = [[Fraction(int(x), den) if x else _ZERO for x in row] for row in prod]
    return ExactMatrix(a.nrows, b.ncols, data, False, a.domain)


# -- vectors ---------------------------------------------------------------------


def unit_vector(n: int, i: int) -> Vector:
    v = [_ZERO] * n
    v[i] = Fraction(1)
    return v


def vec_add(u: Sequence, v: Sequence) -> Vector:
    return [a + b for a, b in zip(u, v, strict=True)]


def vec_sub(u: Sequence, v: Sequence) -> Vector:
    return [a - b for a, b in zip(u, v, strict=True)]


def vec_scale(c, v: Sequence) -> Vector:
    c = _frac(c)
    return [c * a for a in v]


def dot(u: Sequence, v: Sequence) -> Fraction:
    """Rational dot product; the standard Hermitean form restricted to rational vectors."""
    return sum((a * b for a, b in zip(u, v, strict=True) if a and b), _ZERO)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def primitive_integer(v: Sequence) -> list[int]:
    """Scale a rational vector to coprime integers (zero maps to zero)."""
    den = 1
    for x in v:
        den = lcm(den, _frac(x).denominator)
    ints = [int(_frac(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


# -- fraction-free elimination -----------------------------------------------


def bareiss_echelon(rows: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(echelon_rows, pivot_columns)``.  The pivot in each column is the
    first nonzero entry at or below the current row.  Every division is exact.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    nrows = len(m)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        row_r = m[r]
        piv = row_r[c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            a = row_i[c]
            if a:
                for j in range(c + 1, ncols):
                    row_i[j] = (piv * row_i[j] - a * row_r[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    x = row_i[j]
                    if x:
                        row_i[j] = piv * x // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _int_rows(vectors: Iterable[Sequence]) -> list[list[int]]:
    return [primitive_integer(v) for v in vectors]


def rank_of_vectors(vectors: Sequence[Sequence]) -> int:
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return 0
    ech, _ = bareiss_echelon(_int_rows(vectors))
    return len(ech)


def rank(m: ExactMatrix) -> int:
    return rank_of_vectors(m.dense_rows())


def nullspace(m: ExactMatrix) -> list[Vector]:
    """Basis of {x : m x = 0}, each vector scaled to coprime integers."""
    rows = [r for r in m.dense_rows() if any(r)]
    ncols = m.ncols
    if not rows:
        return [unit_vector(ncols, j) for j in range(ncols)]
    ech, pivots = bareiss_echelon(_int_rows(rows), ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [_ZERO] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reversed(ech), reversed(pivots)):
            s = sum((Fraction(row[j]) * x[j] for j in range(p + 1, ncols) if row[j] and x[j]), _ZERO)
            x[p] = -s / row[p]
        basis.append([Fraction(v) for v in primitive_integer(x)])
    return basis


def row_space_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """An integer basis (echelon rows) for the span of the given vectors."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    ech, _ = bareiss_echelon(_int_rows(vectors))
    return [[Fraction(x) for x in primitive_integer(r)] for r in ech]


def column_space_basis(m: ExactMatrix) -> list[Vector]:
    return row_space_basis(m.columns())


def span_contains(basis: Sequence[Sequence], v: Sequence) -> bool:
    return span_contains_all(basis, [v])


def span_contains_all(basis: Sequence[Sequence], vectors: Sequence[Sequence]) -> bool:
    return rank_of_vectors(list(basis) + list(vectors)) == rank_of_vectors(basis)


def is_independent(vectors: Sequence[Sequence]) -> bool:
    return rank_of_vectors(vectors) == len(vectors)


def intersection_dim(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> int:
    """dim(span A ∩ span B) for independent lists A and B."""
    if not is_independent(basis_a) or not is_independent(basis_b):
        raise ValueError("intersection_dim needs linearly independent input lists")
    return len(basis_a) + len(basis_b) - rank_of_vectors(list(basis_a) + list(basis_b))


def spans_equal(basis_a: Sequence[Sequence], basis_b: Sequence[Sequence]) -> bool:
    ra = rank_of_vectors(basis_a)
    rb = rank_of_vectors(basis_b)
    return ra == rb and rank_of_vectors(list(basis_a) + list(basis_b)) == ra


def gram_schmidt(vectors: Sequence[Sequence]) -> list[Vector]:
    """Pairwise orthogonal integer vectors spanning the same space (no normalisation)."""
    out: list[Vector] = []
    norms: list[Fraction] = []
    for v in vectors:
        w = [_frac(x) for x in v]
        for u, nu in zip(out, norms):
            c = dot(w, u)
            if c:
                w = vec_sub(w, vec_scale(c / nu, u))
        if not any(w):
            raise ValueError("gram_schmidt input is linearly dependent")
        w = [Fraction(x) for x in primitive_integer(w)]
        out.append(w)
        norms.append(dot(w, w))
    return out


def solve_unit_triangular(m: ExactMatrix, v: Sequence, upper: bool) -> Vector:
    """Solve m x = v for a triangular m with unit diagonal."""
    n = m.nrows
    x = [_ZERO] * n
    order = range(n - 1, -1, -1) if upper else range(n)
    for i in order:
        s = _frac(v[i])
        for j, a in m.row(i).items():
            if j != i:
                s -= a * x[j]
        if m[i, i] != 1:
            raise ValueError("matrix does not have unit diagonal")
        x[i] = s
    return x


def inverse_unit_triangular(m: ExactMatrix, upper: bool) -> ExactMatrix:
    n = m.nrows
    cols = [solve_unit_triangular(m, unit_vector(n, j), upper) for j in range(n)]
    return ExactMatrix.from_columns(cols, m.domain)
