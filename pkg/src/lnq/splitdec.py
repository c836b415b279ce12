"""q-exponentials, the four split bases of the standard module, and their
decompositions.

The four variants are tagged by two arrows, written here as letters:

====  =======================  ==========================================
tag   vector                   series
====  =======================  ==========================================
DD    y (down, down)           exp_{q^{-1/2}}(L) y
UD    y (up, down)             exp_{q^{1/2}}(R A*) y
DU    y (down, up)             exp_{q^{-1/2}}(-phi L) y
UU    y (up, up)               exp_{q^{1/2}}(-phi^{-1} R A*) y
====  =======================  ==========================================

Both exponential series have rational coefficients:

    exp_{q^{1/2}}(psi)  = sum_i q^{i(i-1)/2} / [i]!_q  psi^i      (mode "plus")
    exp_{q^{-1/2}}(psi) = sum_i 1 / [i]!_q  psi^i                  (mode "minus")
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .exactla import (
    ExactMatrix,
    Vector,
    column_space_basis,
    intersection_dim,
    inverse_unit_triangular,
    is_zero_vector,
    rank,
    span_contains_all,
    spans_equal,
    unit_vector,
)
from .operators import OperatorSet
from .qscalar import eigenvalue, q_binomial, q_factorial
from .relcheck import CheckResult, Recorder, VerificationError, run_check

VARIANTS = ("DD", "UD", "DU", "UU")

# q-exponential ---------------------------------------------------------------------


def q_exp_coefficient(i: int, q, mode: str) -> Fraction:
    if mode == "plus":
        return Fraction(q) ** (i * (i - 1) // 2) / q_factorial(i, q)
    if mode == "minus":
        return 1 / q_factorial(i, q)
    raise ValueError(f"unknown q-exponential mode {mode!r}")


class QExponential:
    """Truncated q-exponential of a nilpotent operator.

    The truncation point is fixed at ``order``: op^{order+1} = 0 is asserted
    once at construction, so the series is exact.
    """

    def __init__(self, op: ExactMatrix, q: int, mode: str, order: int):
        if not op.power(order + 1).is_zero():
            raise VerificationError(f"operator is not nilpotent of index <= {order + 1}")
        self.op = op
        self.q = q
        self.mode = mode
        self.order = order
        self.coeffs = [q_exp_coefficient(i, q, mode) for i in range(order + 1)]

    def apply(self, v) -> Vector:
        out = [Fraction(x) for x in v]
        term = list(out)
        for c in self.coeffs[1:]:
            term = self.op.apply(term)
            if is_zero_vector(term):
                break
            out = [a + c * b for a, b in zip(out, term)]
        return out

    def matrix(self) -> ExactMatrix:
        out = ExactMatrix.identity(self.op.nrows)
        power = ExactMatrix.identity(self.op.nrows)
        for c in self.coeffs[1:]:
            power = power @ self.op
            out = out + power * c
        return out


def q_exp_apply(op: ExactMatrix, v, mode: str, q: int, order: int) -> Vector:
    return QExponential(op, q, mode, order).apply(v)


# variants ----------------------------------------------------------------------------


@dataclass(frozen=True)
class VariantSpec:
    tag: str
    mode: str
    upward: bool  # closed form sums over z >= y (else z <= y)
    # scalar multiplying the closed-form coefficient: (-phi)^{dy - dz} or 1
    phi_twisted: bool
    eigen_operator: str  # attribute of OperatorSet acting diagonally
    partner_operator: str


SPECS = {
    "DD": VariantSpec("DD", "minus", False, False, "lowering_equitable", "raising_equitable"),
    "UD": VariantSpec("UD", "plus", True, False, "raising_equitable", "lowering_equitable"),
    "DU": VariantSpec("DU", "minus", False, True, "lowering_equitable_alt", "raising_equitable_alt"),
    "UU": VariantSpec("UU", "plus", True, True, "raising_equitable_alt", "lowering_equitable_alt"),
}


def exponent_operator(ops: OperatorSet, variant: str) -> ExactMatrix:
    phi = ops.params.phi
    ra = ops.raising @ ops.dual_adjacency
    return {
        "DD": ops.lowering,
        "UD": ra,
        "DU": ops.lowering * (-phi),
        "UU": ra * (-1 / phi),
    }[variant]


def closed_form(ops: OperatorSet, y: int, variant: str) -> Vector:
    spec = SPECS[variant]
    q, phi = Fraction(ops.params.q), ops.params.phi
    dims = ops.poset.dims
    dy = dims[y]
    out = [Fraction(0)] * ops.size
    zs = ops.poset.above(y) if spec.upward else ops.poset.below(y)
    for z in zs:
        dz = dims[z]
        c = q ** (-dy * (dz - dy)) if spec.upward else Fraction(1)
        if spec.phi_twisted:
            c *= (-phi) ** (dy - dz)
        out[z] = c
    return out


class SplitContext:
    """Caches the four q-exponentials for one operator set."""

    def __init__(self, ops: OperatorSet):
        self.ops = ops
        self._exp: dict[str, QExponential] = {}

    def exponential(self, variant: str) -> QExponential:
        if variant not in self._exp:
            spec = SPECS[variant]
            self._exp[variant] = QExponential(
                exponent_operator(self.ops, variant), self.ops.params.q, spec.mode, self.ops.params.n
            )
        return self._exp[variant]


def split_vector(ctx: SplitContext, y: int, variant: str) -> Vector:
    """Series form checked against the closed form; VerificationError on mismatch."""
    series = ctx.exponential(variant).apply(unit_vector(ctx.ops.size, y))
    closed = closed_form(ctx.ops, y, variant)
    if series != closed:
        k = next(i for i, (a, b) in enumerate(zip(series, closed)) if a != b)
        raise VerificationError(
            f"{variant} vector of vertex {y}: series gives {series[k]} at vertex {k}, closed form {closed[k]}"
        )
    return series


@dataclass
class SplitBasis:
    variant: str
    vectors: list[Vector]
    change: ExactMatrix  # columns are the split vectors

    @property
    def upper(self) -> bool:
        return not SPECS[self.variant].upward


def build_split_basis(ctx: SplitContext, variant: str) -> SplitBasis:
    vectors = [split_vector(ctx, y, variant) for y in range(ctx.ops.size)]
    change = ExactMatrix.from_columns(vectors, "vertex")
    return SplitBasis(variant, vectors, change)


def triangular_violation(basis: SplitBasis) -> Optional[str]:
    m = basis.change
    for i, j, v in m.nonzeros():
        if (basis.upper and i > j) or (not basis.upper and i < j):
            return f"entry ({i}, {j}) = {v} breaks {'upper' if basis.upper else 'lower'} triangularity"
    for i in range(m.nrows):
        if m[i, i] != 1:
            return f"diagonal entry {i} is {m[i, i]}"
    return None


# action tables -------------------------------------------------------------------------

# Each action is (operator attribute, diagonal coefficient, cover direction,
# cover coefficient); coefficients are functions of (dim y, q, N, phi).
Coef = Callable[[int, Fraction, int, Fraction], Fraction]


def _actions() -> dict[str, list[tuple[str, Coef, str, Coef]]]:
    return {
        "DD": [
            ("dual_adjacency", lambda d, q, n, f: q**-d, "down", lambda d, q, n, f: (q - 1) * q**-d),
            ("raising_equitable", lambda d, q, n, f: q ** (n - d) / (q - 1), "up", lambda d, q, n, f: Fraction(-1)),
            ("lowering_equitable", lambda d, q, n, f: q**d / (q - 1), None, None),
            ("adjacency", lambda d, q, n, f: (f * q**d - q ** (n - d)) / (q - 1), "up", lambda d, q, n, f: Fraction(1)),
        ],
        "UD": [
            ("dual_adjacency", lambda d, q, n, f: q**-d, "up", lambda d, q, n, f: -(q - 1) * q ** (-2 * d - 1)),
            ("raising_equitable", lambda d, q, n, f: q**d / (q - 1), None, None),
            ("lowering_equitable", lambda d, q, n, f: q ** (n - d) / (q - 1), "down", lambda d, q, n, f: q ** (d - 1)),
            ("adjacency", lambda d, q, n, f: (f * q ** (n - d) - q**d) / (q - 1), "down", lambda d, q, n, f: f * q ** (d - 1)),
        ],
        "DU": [
            ("dual_adjacency", lambda d, q, n, f: q**-d, "down", lambda d, q, n, f: -(q - 1) * f * q**-d),
            ("raising_equitable_alt", lambda d, q, n, f: q ** (n - d) / (q - 1), "up", lambda d, q, n, f: 1 / f),
            ("lowering_equitable_alt", lambda d, q, n, f: q**d / (q - 1), None, None),
            ("adjacency", lambda d, q, n, f: (f * q ** (n - d) - q**d) / (q - 1), "up", lambda d, q, n, f: Fraction(1)),
        ],
        "UU": [
            ("dual_adjacency", lambda d, q, n, f: q**-d, "up", lambda d, q, n, f: (q - 1) / f * q ** (-2 * d - 1)),
            ("raising_equitable_alt", lambda d, q, n, f: q**d / (q - 1), None, None),
            ("lowering_equitable_alt", lambda d, q, n, f: q ** (n - d) / (q - 1), "down", lambda d, q, n, f: -f * q ** (d - 1)),
            ("adjacency", lambda d, q, n, f: (f * q**d - q ** (n - d)) / (q - 1), "down", lambda d, q, n, f: f * q ** (d - 1)),
        ],
    }


ACTIONS = _actions()


def _actions_body(rec: Recorder, ops: OperatorSet, basis: SplitBasis) -> None:
    q, n, phi = Fraction(ops.params.q), ops.params.n, ops.params.phi
    vecs = basis.vectors
    for op_name, diag, direction, cover in ACTIONS[basis.variant]:
        op = getattr(ops, op_name)
        for y in range(ops.size):
            d = ops.poset.dims[y]
            c0 = diag(d, q, n, phi)
            expected = [c0 * x for x in vecs[y]]
            if direction is not None:
                c1 = cover(d, q, n, phi)
                others = ops.poset.covers_up[y] if direction == "up" else ops.poset.covers_down[y]
                for z in others:
                    expected = [a + c1 * b for a, b in zip(expected, vecs[z])]
            rec.equal(f"{basis.variant}: {op_name} on vector of vertex {y}", op.apply(vecs[y]), expected)


def verify_split_actions(ops: OperatorSet, basis: SplitBasis) -> CheckResult:
    return run_check(
        f"split_actions_{basis.variant}",
        "action of A*, A, and the equitable pair on a split basis",
        lambda rec: _actions_body(rec, ops, basis),
    )


@dataclass
class SplitDecomposition:
    variant: str
    pieces: list[list[Vector]]  # pieces[i] spans U_i

    def span(self, indices) -> list[Vector]:
        return [v for i in indices for v in self.pieces[i]]


def build_decomposition(ops: OperatorSet, basis: SplitBasis) -> SplitDecomposition:
    pieces = [[basis.vectors[y] for y in ops.poset.dim_blocks[i]] for i in range(ops.params.n + 1)]
    return SplitDecomposition(basis.variant, pieces)


def _eigenspace_body(rec: Recorder, ops: OperatorSet, dec: SplitDecomposition) -> None:
    p = ops.params
    q = Fraction(p.q)
    op = getattr(ops, SPECS[dec.variant].eigen_operator)
    for i, piece in enumerate(dec.pieces):
        lam = q**i / (q - 1)
        dim = q_binomial(p.n, i, p.q)
        rec.equal(f"{dec.variant}: dim U_{i}", len(piece), dim)
        for k, v in enumerate(piece):
            rec.equal(f"{dec.variant}: vector {k} of U_{i} is an eigenvector for q^{i}/(q-1)", op.apply(v), [lam * x for x in v])
        rec.equal(f"{dec.variant}: nullity of op - q^{i}/(q-1)", ops.size - rank(op.shift(-lam)), dim)
    union = [v for piece in dec.pieces for v in piece]
    rec.equal(f"{dec.variant}: rank of the union of the U_i", len(union), ops.size)
    rec.true(f"{dec.variant}: U_i sum is direct", rank(ExactMatrix.from_columns(union)) == ops.size)


def verify_eigenspaces(ops: OperatorSet, dec: SplitDecomposition) -> CheckResult:
    return run_check(
        f"split_eigenspaces_{dec.variant}",
        "split decomposition as eigenspaces of an equitable generator",
        lambda rec: _eigenspace_body(rec, ops, dec),
    )


# level shifts of A and A* read off the action tables
TRIANGULAR_STEPS = {
    "DD": {"dual_adjacency": {0, -1}, "adjacency": {0, 1}},
    "UD": {"dual_adjacency": {0, 1}, "adjacency": {0, -1}},
    "DU": {"dual_adjacency": {0, -1}, "adjacency": {0, 1}},
    "UU": {"dual_adjacency": {0, 1}, "adjacency": {0, -1}},
}


def _triangular_body(rec: Recorder, ops: OperatorSet, basis: SplitBasis) -> None:
    problem = triangular_violation(basis)
    rec.true(f"{basis.variant}: change of basis is unit triangular", problem is None, problem or "")
    if problem is not None:
        return
    inv = inverse_unit_triangular(basis.change, basis.upper)
    rec.equal(f"{basis.variant}: inverse of change of basis", inv @ basis.change, ops.identity())
    dims = ops.poset.dims
    for op_name, allowed in TRIANGULAR_STEPS[basis.variant].items():
        m = inv @ getattr(ops, op_name) @ basis.change
        steps = {dims[i] - dims[j] for i, j, _ in m.nonzeros()}
        rec.true(
            f"{basis.variant}: {op_name} moves split vectors by levels {sorted(allowed)}",
            steps <= allowed,
            f"observed level steps {sorted(steps)}",
        )


def verify_triangularity(ops: OperatorSet, basis: SplitBasis) -> CheckResult:
    return run_check(
        f"split_triangular_{basis.variant}",
        "split basis is unit triangular and A, A* act in opposite triangular patterns",
        lambda rec: _triangular_body(rec, ops, basis),
    )


# shifts, sums, intersections ------------------------------------------------------------


class SumBases:
    """Bases of E*_a V + ... + E*_b V and E_a V + ... + E_b V."""

    def __init__(self, ops: OperatorSet):
        self.ops = ops
        self._cache: dict = {}

    def dual(self, lo: int, hi: int) -> list[Vector]:
        return [unit_vector(self.ops.size, y) for y in range(self.ops.size) if lo <= self.ops.poset.dims[y] <= hi]

    def primal(self, lo: int, hi: int) -> list[Vector]:
        key = (lo, hi)
        if key not in self._cache:
            total = self.ops.zero()
            for j in range(lo, hi + 1):
                total = total + self.ops.idempotent(j)
            self._cache[key] = column_space_basis(total)
        return self._cache[key]


def _shift_body(rec: Recorder, ops: OperatorSet, decs: dict[str, SplitDecomposition]) -> None:
    p = ops.params
    n = p.n
    A, As = ops.adjacency, ops.dual_adjacency

    def piece(v, i):
        return decs[v].pieces[i] if 0 <= i <= n else []

    # (variant, operator, eigenvalue at i, target level offset)
    table = [
        ("DD", A, lambda i: eigenvalue(n - i, p), 1),
        ("DD", As, lambda i: Fraction(1, p.q**i), -1),
        ("UD", A, lambda i: eigenvalue(i, p), -1),
        ("UD", As, lambda i: Fraction(1, p.q**i), 1),
        ("DU", A, lambda i: eigenvalue(i, p), 1),
        ("DU", As, lambda i: Fraction(1, p.q**i), -1),
        ("UU", A, lambda i: eigenvalue(n - i, p), -1),
        ("UU", As, lambda i: Fraction(1, p.q**i), 1),
    ]
    for variant, op, value, offset in table:
        name = "A" if op is A else "A*"
        for i in range(n + 1):
            shifted = op.shift(-value(i))
            images = [shifted.apply(v) for v in piece(variant, i)]
            target = piece(variant, i + offset)
            ok = span_contains_all(target, images) if target else all(is_zero_vector(w) for w in images)
            rec.true(f"{variant}: ({name} - {value(i)}) U_{i} inside U_{i + offset}", ok)


def verify_shifts(ops: OperatorSet, decs: dict[str, SplitDecomposition]) -> CheckResult:
    return run_check(
        "split_shifts",
        "A and A* shift the split decompositions by one level",
        lambda rec: _shift_body(rec, ops, decs),
    )


def _sums_body(rec: Recorder, ops: OperatorSet, decs: dict[str, SplitDecomposition], sums: SumBases) -> None:
    n = ops.params.n
    for i in range(n + 1):
        groups = [
            ("E*_0..E*_i", sums.dual(0, i), [("DD", range(0, i + 1)), ("DU", range(0, i + 1))]),
            ("E*_i..E*_N", sums.dual(i, n), [("UD", range(i, n + 1)), ("UU", range(i, n + 1))]),
            ("E_0..E_i", sums.primal(0, i), [("DD", range(n - i, n + 1)), ("UD", range(0, i + 1))]),
            ("E_i..E_N", sums.primal(i, n), [("DU", range(i, n + 1)), ("UU", range(0, n - i + 1))]),
        ]
        for label, reference, splits in groups:
            for variant, idx in splits:
                rec.true(
                    f"i={i}: {label} sum equals {variant} U_{idx.start}..U_{idx.stop - 1}",
                    spans_equal(reference, decs[variant].span(idx)),
                )


def verify_sums(ops: OperatorSet, decs: dict[str, SplitDecomposition], sums: SumBases) -> CheckResult:
    return run_check(
        "split_sums",
        "partial sums of split pieces agree with partial sums of eigenspaces",
        lambda rec: _sums_body(rec, ops, decs, sums),
    )


def _intersection_body(rec: Recorder, ops: OperatorSet, decs: dict[str, SplitDecomposition], sums: SumBases) -> None:
    p = ops.params
    n = p.n
    for i in range(n + 1):
        families = [
            ("DD", sums.dual(0, i), sums.primal(0, n - i)),
            ("UD", sums.dual(i, n), sums.primal(0, i)),
            ("DU", sums.dual(0, i), sums.primal(i, n)),
            ("UU", sums.dual(i, n), sums.primal(n - i, n)),
        ]
        dim = q_binomial(n, i, p.q)
        for variant, dual_sum, primal_sum in families:
            u = decs[variant].pieces[i]
            rec.true(f"{variant}: U_{i} inside the dual partial sum", span_contains_all(dual_sum, u))
            rec.true(f"{variant}: U_{i} inside the eigenspace partial sum", span_contains_all(primal_sum, u))
            rec.equal(f"{variant}: dim of the intersection for i={i}", intersection_dim(dual_sum, primal_sum), dim)


def verify_intersections(ops: OperatorSet, decs: dict[str, SplitDecomposition], sums: SumBases) -> CheckResult:
    return run_check(
        "split_intersections",
        "each split piece is an intersection of a dual flag and an eigenspace flag",
        lambda rec: _intersection_body(rec, ops, decs, sums),
    )


# exponent operators and conjugation --------------------------------------------------------


def _exponent_body(rec: Recorder, ops: OperatorSet) -> None:
    q, phi = Fraction(ops.params.q), ops.params.phi
    I, As = ops.identity(), ops.dual_adjacency
    RA = ops.raising @ As
    first_x = (I - (ops.raising_equitable @ As) * (q - 1)) / (q - 1)
    first_z = (I - (As @ ops.lowering_equitable) * (q - 1)) / (q - 1)
    second_x = (I - (ops.raising_equitable_alt @ As) * (q - 1)) / (q - 1)
    second_z = (I - (As @ ops.lowering_equitable_alt) * (q - 1)) / (q - 1)
    rec.equal("first structure: n_x = R A*", first_x, RA)
    rec.equal("first structure: n_z = -L", first_z, -ops.lowering)
    rec.equal("second structure: n_x = -phi^{-1} R A*", second_x, RA * (-1 / phi))
    rec.equal("second structure: n_z = phi L", second_z, ops.lowering * phi)
    # the split exponents are n_x or -n_z of the matching structure
    rec.equal("DD exponent = -n_z (first)", exponent_operator(ops, "DD"), -first_z)
    rec.equal("UD exponent = n_x (first)", exponent_operator(ops, "UD"), first_x)
    rec.equal("DU exponent = -n_z (second)", exponent_operator(ops, "DU"), -second_z)
    rec.equal("UU exponent = n_x (second)", exponent_operator(ops, "UU"), second_x)
    n = ops.params.n
    for name, m in [("n_x", first_x), ("n_z", first_z)]:
        rec.zero(f"{name}^(N+1)", m.power(n + 1))


def verify_exponent_operators(ops: OperatorSet) -> CheckResult:
    return run_check(
        "exponent_operators",
        "nilpotent operators n_x, n_z for both module structures",
        lambda rec: _exponent_body(rec, ops),
    )


def _inverse_body(rec: Recorder, ops: OperatorSet) -> None:
    q, n = ops.params.q, ops.params.n
    for variant in VARIANTS:
        psi = exponent_operator(ops, variant)
        plus = QExponential(psi, q, "plus", n).matrix()
        minus = QExponential(-psi, q, "minus", n).matrix()
        rec.equal(f"{variant} exponent: exp_(q^1/2)(psi) exp_(q^-1/2)(-psi)", plus @ minus, ops.identity())
        rec.equal(f"{variant} exponent: exp_(q^-1/2)(-psi) exp_(q^1/2)(psi)", minus @ plus, ops.identity())


def verify_exp_inverse(ops: OperatorSet) -> CheckResult:
    return run_check(
        "q_exp_inverse",
        "the two q-exponential series are mutually inverse",
        lambda rec: _inverse_body(rec, ops),
    )


def _conjugation_body(rec: Recorder, ops: OperatorSet) -> None:
    """Exp-conjugation identities, rescaled so every coefficient is rational.

    With e = exp_{q^{1/2}}(n_x), e' = exp_{q^{1/2}}(n_z) and the equitable
    generators X = (q-1)q^{-N/2} A^-, Y = q^{N/2} A*, Z = (q-1)q^{-N/2} A^+,
    multiplying each identity by a power of q^{N/2} clears the square roots.
    """
    q, n = Fraction(ops.params.q), ops.params.n
    As, Asi = ops.dual_adjacency, ops.dual_adjacency_inv
    qn = q**n
    pairs = [
        ("first", ops.raising_equitable, ops.lowering_equitable),
        ("second", ops.raising_equitable_alt, ops.lowering_equitable_alt),
    ]
    for tag, up, down in pairs:
        nx = (ops.identity() - (up @ As) * (q - 1)) / (q - 1)
        nz = (ops.identity() - (As @ down) * (q - 1)) / (q - 1)
        e = QExponential(nx, ops.params.q, "plus", n).matrix()
        ez = QExponential(nz, ops.params.q, "plus", n).matrix()
        X, Z = down * (q - 1), up * (q - 1)
        rec.equal(f"{tag}: X e = e (X + q^N A* - A*^-1)", X @ e, e @ (X + As * qn - Asi))
        rec.equal(f"{tag}: A* e = e (q-1) A* A^+ A*", As @ e, e @ (As @ Z @ As))
        rec.equal(f"{tag}: Z e = e A*^-1", Z @ e, e @ Asi)
        rec.equal(f"{tag}: e' X = A*^-1 e'", ez @ X, Asi @ ez)
        rec.equal(f"{tag}: e' A* = (q-1) A* A^- A* e'", ez @ As, As @ X @ As @ ez)
        rec.equal(f"{tag}: e' Z = (Z + q^N A* - A*^-1) e'", ez @ Z, (Z + As * qn - Asi) @ ez)


def verify_exp_conjugation(ops: OperatorSet) -> CheckResult:
    return run_check(
        "exp_conjugation",
        "conjugation of the equitable generators by q-exponentials (rational form)",
        lambda rec: _conjugation_body(rec, ops),
    )


# runner -----------------------------------------------------------------------------------


def run_splits(ops: OperatorSet) -> tuple[dict[str, SplitDecomposition], list[CheckResult]]:
    ctx = SplitContext(ops)
    bases: dict[str, SplitBasis] = {}

    def build(rec: Recorder):
        for v in VARIANTS:
            bases[v] = build_split_basis(ctx, v)
            rec.certificates.append(f"{v}: {ops.size} vectors agree with the closed form")
        rec.count += len(VARIANTS) * ops.size

    results = [
        verify_exponent_operators(ops),
        verify_exp_inverse(ops),
        run_check("split_vectors", "series and closed forms of the split vectors", build),
    ]
    if len(bases) != len(VARIANTS):
        return {}, results
    decs = {}
    for v in VARIANTS:
        results.append(verify_triangularity(ops, bases[v]))
        results.append(verify_split_actions(ops, bases[v]))
        decs[v] = build_decomposition(ops, bases[v])
        results.append(verify_eigenspaces(ops, decs[v]))
    sums = SumBases(ops)
    results.append(verify_shifts(ops, decs))
    results.append(verify_sums(ops, decs, sums))
    results.append(verify_intersections(ops, decs, sums))
    results.append(verify_exp_conjugation(ops))
    return decs, results
