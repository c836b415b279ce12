"""Independent brute-force oracle for the worked example values.

Deliberately shares no code with ``lnq``: subspaces are sets of vectors,
covers come from set inclusion, matrices are lists of lists of Fractions,
eigenvalues are located with numpy floats and then confirmed exactly.

Run as a script to (re)write ``oracle_values.json``::

    python3 tests/oracle.py
"""

from __future__ import annotations

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

HERE = Path(__file__).resolve().parent
VALUES_PATH = HERE / "oracle_values.json"


# fields -------------------------------------------------------------------------


class PrimeField:
    def __init__(self, p):
        self.q = p
        self.elems = list(range(p))

    def add(self, a, b):
        return (a + b) % self.q

    def mul(self, a, b):
        return a * b % self.q


class GF4:
    """GF(4) as pairs (c0, c1) = c0 + c1 x with x^2 = x + 1, encoded c0 + 2 c1."""

    q = 4
    elems = [0, 1, 2, 3]

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        a0, a1, b0, b1 = a & 1, a >> 1, b & 1, b >> 1
        c0 = (a0 * b0 + a1 * b1) % 2  # x^2 -> x + 1 contributes a1 b1 to both
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        return c0 + 2 * c1


def field(q):
    return GF4() if q == 4 else PrimeField(q)


def irreducible_quadratics_gf2():
    """Monic x^2 + c1 x + c0 over GF(2) with no root, as (c0, c1, 1)."""
    out = []
    for c0, c1 in itertools.product(range(2), repeat=2):
        if all((x * x + c1 * x + c0) % 2 for x in range(2)):
            out.append((c0, c1, 1))
    return out


# subspaces ----------------------------------------------------------------------


def span(gens, f, n):
    vecs = {tuple([0] * n)}
    for g in gens:
        new = set()
        for v in vecs:
            for c in f.elems:
                new.add(tuple(f.add(a, f.mul(c, b)) for a, b in zip(v, g)))
        vecs = new
    return frozenset(vecs)


def subspaces(q, n):
    f = field(q)
    allv = list(itertools.product(f.elems, repeat=n))
    zero = frozenset([tuple([0] * n)])
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for v in allv:
                if v not in s:
                    # s + span{v} = {u + c v}
                    t = frozenset(tuple(f.add(a, f.mul(c, b)) for a, b in zip(u, v)) for u in s for c in f.elems)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt

    def dim(s):
        d = 0
        while q**d < len(s):
            d += 1
        return d

    ordered = sorted(found, key=lambda s: (dim(s), sorted(s)))
    return ordered, [dim(s) for s in ordered]


class Geometry:
    def __init__(self, q, n):
        self.q, self.n = q, n
        self.verts, self.dims = subspaces(q, n)
        self.size = len(self.verts)
        # covers[y] = z covered by y
        self.down = [[z for z in range(self.size) if self.dims[z] == self.dims[y] - 1 and self.verts[z] <= self.verts[y]] for y in range(self.size)]
        self.up = [[z for z in range(self.size) if self.dims[z] == self.dims[y] + 1 and self.verts[y] <= self.verts[z]] for y in range(self.size)]


# naive exact linear algebra -----------------------------------------------------------


def zeros(n):
    return [[Fraction(0)] * n for _ in range(n)]


def eye(n):
    m = zeros(n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def mm(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)] for i in range(n)]


def madd(a, b, c=1):
    return [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mv(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def naive_rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def transpose(a):
    return [list(r) for r in zip(*a)]


def q_fact(i, q):
    out = 1
    for k in range(1, i + 1):
        out *= sum(q**j for j in range(k))
    return out


class Weighted:
    """Definition-level matrices for one (N, q, phi)."""

    def __init__(self, g: Geometry, phi):
        self.g = g
        q, phi = g.q, Fraction(phi)
        self.phi = phi
        n = g.size
        self.R = zeros(n)
        self.A = zeros(n)
        self.As = zeros(n)
        for y in range(n):
            self.As[y][y] = Fraction(1, q ** g.dims[y])
            for z in g.down[y]:
                self.R[y][z] = Fraction(1)
                self.A[y][z] = Fraction(1)
            for z in g.up[y]:
                self.A[y][z] = phi * q ** g.dims[y]
            self.A[y][y] = (phi - 1) / (q - 1) * q ** g.dims[y]
        self.L = transpose(self.R)

    def eigenvalues(self):
        """Distinct eigenvalues of A: numerically located, exactly confirmed."""
        ev = np.linalg.eigvals(np.array([[float(x) for x in r] for r in self.A]))
        cands = sorted({Fraction(float(x.real)).limit_denominator(1000) for x in ev}, reverse=True)
        n = self.g.size
        for c in cands:
            assert naive_rank(madd(self.A, eye(n), -c)) < n, c
        return cands

    def idempotent(self, theta, thetas):
        n = self.g.size
        out = eye(n)
        for t in thetas:
            if t != theta:
                out = mm(out, [[x / (theta - t) for x in r] for r in madd(self.A, eye(n), -t)])
        return out


def frac(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# the values ----------------------------------------------------------------------------


def compute():
    out = {}
    q_int = lambda n, q: sum(Fraction(q) ** j for j in range(n))  # noqa: E731
    out["q_int"] = {"0,2": frac(q_int(0, 2)), "3,2": frac(q_int(3, 2)), "2,3": frac(q_int(2, 3))}
    out["q_factorial_3_2"] = q_fact(3, 2)

    g22, g32, g42, g23, g12 = Geometry(2, 2), Geometry(2, 3), Geometry(2, 4), Geometry(3, 2), Geometry(2, 1)
    out["binom_4_2_2"] = g42.dims.count(2)

    out["gf4_modulus"] = list(irreducible_quadratics_gf2()[0])
    out["gf4_x_times_x"] = GF4().mul(2, 2)  # x*x encoded: 3 = 1 + x
    out["gf3_inv_2"] = next(b for b in range(1, 3) if (2 * b) % 3 == 1)

    out["vertex_counts"] = {"2,2": g22.size, "3,2": g32.size, "4,2": g42.size, "1,2": g12.size, "2,3": g23.size}
    out["level_counts"] = {"2,2": [g22.dims.count(i) for i in range(3)], "3,2": [g32.dims.count(i) for i in range(4)]}
    out["vertex_count_2_4"] = Geometry(4, 2).size
    out["covered_by_counts_3_2"] = sorted({len(g32.up[y]) for y in range(g32.size) if g32.dims[y] == 1})
    out["covers_counts_3_2"] = sorted({len(g32.down[y]) for y in range(g32.size) if g32.dims[y] == 2})
    modular = all(
        len(g32.verts[x] & g32.verts[y]) * len(span(list(g32.verts[x] | g32.verts[y]), field(2), 3))
        == len(g32.verts[x]) * len(g32.verts[y])
        for x in range(g32.size)
        for y in range(g32.size)
    )
    out["modularity_3_2"] = modular

    w22 = Weighted(g22, 1)
    comm = madd(mm(w22.L, w22.R), mm(w22.R, w22.L), -1)
    out["LR_minus_RL_diag_2_2"] = [frac(comm[i][i]) for i in range(g22.size)]
    out["R_ones_2_2"] = sum(1 for r in w22.R for x in r if x)
    out["row_sum_dim1_2_2_phi1"] = sorted({frac(sum(w22.A[y])) for y in range(g22.size) if g22.dims[y] == 1})

    # ker L ∩ E*_1 V at N=2, q=2: L restricted to level-1 columns, level-0 rows
    lv1 = [y for y in range(g22.size) if g22.dims[y] == 1]
    lv0 = [y for y in range(g22.size) if g22.dims[y] == 0]
    sub = [[w22.L[i][j] for j in lv1] for i in lv0]
    out["ker_L_level1_2_2"] = len(lv1) - naive_rank(sub)

    w12 = Weighted(g12, 1)
    out["A_1_2_phi1"] = [[frac(x) for x in r] for r in w12.A]
    out["A_star_1_2"] = [frac(w12.As[i][i]) for i in range(2)]
    q = 2
    inv = [[Fraction(q ** g12.dims[i]) if i == j else Fraction(0) for j in range(2)] for i in range(2)]
    a_minus = madd([[x / (q - 1) for x in r] for r in inv], mm(inv, w12.L))
    a_plus = madd([[x / (q - 1) for x in r] for r in inv], w12.R, -1)
    out["A_minus_sup_1_2"] = [[frac(x) for x in r] for r in a_minus]
    uq = madd([[2 * x for x in r] for r in mm(a_plus, a_minus)], mm(a_minus, a_plus), -1)
    out["uq_third_1_2_phi1"] = [[frac(x) for x in r] for r in uq]

    # symmetrizer: find s^2 by requiring A^t = D^2 A D^-2 level by level (phi=1, q=2, N=4)
    w42 = Weighted(g42, 1)
    s2 = [Fraction(1)]
    for i in range(4):
        y = next(v for v in range(g42.size) if g42.dims[v] == i)
        z = g42.up[y][0]
        # (A^t)[y][z] = A[z][y] = s2_i A[y][z] / s2_{i+1}
        s2.append(s2[-1] * w42.A[y][z] / w42.A[z][y])
    out["symmetrizer_sq_phi1_q2"] = [frac(x) for x in s2]

    w32 = Weighted(g32, 1)
    th32 = w32.eigenvalues()
    out["eigenvalues_3_2_phi1"] = [frac(x) for x in th32]
    out["eigenvalues_2_2_phi1"] = [frac(x) for x in w22.eigenvalues()]
    e1 = w32.idempotent(th32[1], th32)
    out["trace_E1_3_2_phi1"] = frac(sum(e1[i][i] for i in range(g32.size)))
    out["rank_E1_2_2_phi1"] = naive_rank(w22.idempotent(w22.eigenvalues()[1], w22.eigenvalues()))
    out["trace_Estar1_3_2"] = g32.dims.count(1)

    # tridiagonal relation scalar: solve for rho from one nonzero entry of [A, A*]
    def rho(w):
        A, S = w.A, w.As
        beta = Fraction(w.g.q) + Fraction(1, w.g.q)
        A2 = mm(A, A)
        A3 = mm(A2, A)
        lhs = madd(madd(madd(mm(A3, S), mm(mm(A2, S), A), -(beta + 1)), mm(mm(A, S), A2), beta + 1), mm(S, A3), -1)
        comm = madd(mm(A, S), mm(S, A), -1)
        vals = {lhs[i][j] / comm[i][j] for i in range(len(A)) for j in range(len(A)) if comm[i][j]}
        assert len(vals) == 1
        return vals.pop()

    out["rho_3_2_phi1"] = frac(rho(w32))
    out["rho_2_2_phi1"] = frac(rho(w22))

    # module scalars by direct action
    def unit(n, i):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return v

    def ratio(u, v):
        vals = {a / b for a, b in zip(u, v) if b}
        assert all(a == 0 for a, b in zip(u, v) if not b) and len(vals) == 1
        return vals.pop()

    w = unit(g32.size, 0)
    rw = mv(w32.R, w)
    out["x1_r0_3_2"] = frac(ratio(mv(w32.L, rw), w))
    w = unit(g22.size, 0)
    rw = mv(w22.R, w)
    r2w = mv(w22.R, rw)
    out["x2_r0_2_2"] = frac(ratio(mv(w22.L, r2w), rw))
    out["x1_r0_2_2"] = frac(ratio(mv(w22.L, rw), w))
    # xi_1 at r=0, N=2, phi=1: coefficient of w in A R w
    arw = mv(w22.A, rw)
    out["xi1_r0_2_2_phi1"] = frac(arw[0] / w[0])

    # r = 1, N = 3: generator e_a - e_b on two points
    pts = [y for y in range(g32.size) if g32.dims[y] == 1]
    w = [Fraction(0)] * g32.size
    w[pts[0]], w[pts[1]] = Fraction(1), Fraction(-1)
    assert not any(mv(w32.L, w))
    rw = mv(w32.R, w)
    out["x1_r1_3_2"] = frac(ratio(mv(w32.L, rw), w))
    arw = mv(w32.A, rw)
    xi = arw[pts[0]] / w[pts[0]]
    a1 = ratio([x - xi * y for x, y in zip(arw, w)], rw) if any(x - xi * y for x, y in zip(arw, w)) else Fraction(0)
    aw = mv(w32.A, w)
    a0 = aw[pts[0]] / w[pts[0]]
    rep = np.array([[float(a0), float(xi)], [1.0, float(a1)]])
    ev = sorted((Fraction(float(x.real)).limit_denominator(1000) for x in np.linalg.eigvals(rep)), reverse=True)
    for c in ev:
        assert (a0 - c) * (a1 - c) - xi == 0
    out["xi1_r1_3_2_phi1"] = frac(xi)
    out["module_eigenvalues_r1_3_2_phi1"] = [frac(x) for x in ev]
    # kernel dimensions on each level
    def kernel_dim(g, w_, r):
        cols = [y for y in range(g.size) if g.dims[y] == r]
        rows = [y for y in range(g.size) if g.dims[y] == r - 1]
        if r == 0:
            return 1
        return len(cols) - naive_rank([[w_.L[i][j] for j in cols] for i in rows])

    out["kernel_dims"] = {
        "2,2": [kernel_dim(g22, w22, r) for r in range(2)],
        "3,2": [kernel_dim(g32, w32, r) for r in range(2)],
        "4,2": [kernel_dim(g42, w42, r) for r in range(3)],
    }

    # Leonard records by substitution
    def leonard(r, n, q, phi):
        q, phi = Fraction(q), Fraction(phi)
        return {
            "d": n - 2 * r,
            "h": frac(phi * q ** (n - r) / (q - 1)),
            "h_star": frac(q**-r),
            "s": frac(-(q ** (2 * r - n - 1)) / phi),
            "theta0": frac((phi * q ** (n - r) - q**r) / (q - 1)),
            "theta_star0": frac(q**-r),
        }

    out["leonard_r0_3_2_phi1"] = leonard(0, 3, 2, 1)
    out["leonard_r1_3_2_phi1"] = leonard(1, 3, 2, 1)
    lp = leonard(1, 3, 2, 1)
    h, s, t0 = Fraction(lp["h"]), Fraction(lp["s"]), Fraction(lp["theta0"])
    out["leonard_r1_theta1"] = frac(t0 + h * (1 - 2) * (1 - s * 4) / 2)

    # split vectors: series forms with naive q-factorials
    def series(op, v, mode, q, n):
        out_ = list(v)
        term = list(v)
        for i in range(1, n + 1):
            term = mv(op, term)
            c = Fraction(q ** (i * (i - 1) // 2) if mode == "plus" else 1, q_fact(i, q))
            out_ = [a + c * b for a, b in zip(out_, term)]
        return out_

    w22_3 = Weighted(g22, 3)
    y = next(v for v in range(g22.size) if g22.dims[v] == 1)
    vec = series([[-3 * x for x in r] for r in w22_3.L], unit(g22.size, y), "minus", 2, 2)
    out["DU_vector_dim1_2_2_phi3"] = {"self": frac(vec[y]), "zero": frac(vec[0]), "support": sum(1 for x in vec if x)}
    cols = [series(w12.L, unit(2, j), "minus", 2, 1) for j in range(2)]
    out["DD_change_1_2"] = [[frac(cols[j][i]) for j in range(2)] for i in range(2)]

    # A^- eigenvalues over the DD basis at N=2,q=2: check A^- y = lam y
    inv22 = [[Fraction(2 ** g22.dims[i]) if i == j else Fraction(0) for j in range(g22.size)] for i in range(g22.size)]
    am22 = madd(inv22, mm(inv22, w22.L))
    mults = {}
    for yy in range(g22.size):
        v = series(w22.L, unit(g22.size, yy), "minus", 2, 2)
        lam = ratio(mv(am22, v), v)
        mults[frac(lam)] = mults.get(frac(lam), 0) + 1
    out["DD_A_minus_eigen_2_2"] = {str(k): v for k, v in sorted(mults.items(), key=lambda kv: Fraction(kv[0]))}

    # dim (E*_0 V + E*_1 V) ∩ (E_0 V + E_1 V) at N=2, q=2, phi=1
    th = w22.eigenvalues()
    esum = madd(w22.idempotent(th[0], th), w22.idempotent(th[1], th))
    ecols = transpose(esum)
    low = [unit(g22.size, i) for i in range(g22.size) if g22.dims[i] <= 1]
    r_e = naive_rank(ecols)
    out["intersection_dim_2_2_phi1"] = len(low) + r_e - naive_rank(low + ecols)
    # U_1 for UD at N=3,q=2: count of dim-1 vertices
    out["UD_dim_U1_3_2"] = g32.dims.count(1)
    return out


def main(argv=None):
    values = compute()
    text = json.dumps(values, indent=2, sort_keys=True) + "\n"
    if argv and "--check" in argv:
        return 0 if VALUES_PATH.read_text() == text else 1
    VALUES_PATH.write_text(text)
    print(f"wrote {len(values)} oracle values to {VALUES_PATH}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
