"""Exact q-arithmetic and the closed-form scalars attached to L_N(q).

Everything here returns :class:`fractions.Fraction` (or ``int`` where the
value is a count).  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Union

Rational = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k`` and ``p`` prime, or raise ValueError."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer prime power >= 2, got {q!r}")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ValueError(f"q={q} is not a prime power")
    return p, k


def q_int(n: int, q: Rational) -> Fraction:
    """The q-integer [n]_q = (q^n - 1)/(q - 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = _as_fraction(q)
    if q == 1:
        raise ZeroDivisionError("[n]_q is undefined at q = 1")
    return (q**n - 1) / (q - 1)


def q_factorial(n: int, q: Rational) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Fraction(1)
    for m in range(1, n + 1):
        out *= q_int(m, q)
    return out


def q_binomial(n: int, i: int, q: Rational) -> Fraction:
    """Gaussian binomial coefficient; an integer whenever q is."""
    if n < 0 or i < 0 or i > n:
        raise ValueError(f"need 0 <= i <= n, got n={n}, i={i}")
    value = q_factorial(n, q) / (q_factorial(i, q) * q_factorial(n - i, q))
    if _as_fraction(q).denominator == 1:
        assert value.denominator == 1, "q-binomial at integral q must be integral"
    return value


@dataclass(frozen=True)
class Params:
    """The triple (N, q, phi) fixing one weighted structure on L_N(q)."""

    n: int
    q: int
    phi: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"N must be a positive integer, got {self.n!r}")
        prime_power(self.q)
        phi = _as_fraction(self.phi)
        if phi <= 0:
            raise ValueError(f"phi must be positive, got {phi}")
        object.__setattr__(self, "phi", phi)

    @property
    def beta(self) -> Fraction:
        return self.q + Fraction(1, self.q)

    @property
    def rho(self) -> Fraction:
        """Scalar on the right of the tridiagonal relation, phi q^{N-2} (q+1)^2."""
        return self.phi * Fraction(self.q) ** (self.n - 2) * (self.q + 1) ** 2

    def eigenvalues(self) -> list[Fraction]:
        return [eigenvalue(i, self) for i in range(self.n + 1)]

    def dual_eigenvalues(self) -> list[Fraction]:
        return [dual_eigenvalue(i, self) for i in range(self.n + 1)]


def _check_index(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise IndexError(f"{what} index {i} outside {lo}..{hi}")


def eigenvalue(i: int, params: Params) -> Fraction:
    """Eigenvalue (phi q^{N-i} - q^i)/(q-1) of the weighted adjacency matrix."""
    _check_index(i, 0, params.n, "eigenvalue")
    q = Fraction(params.q)
    return (params.phi * q ** (params.n - i) - q**i) / (q - 1)


def dual_eigenvalue(i: int, params: Params) -> Fraction:
    """Eigenvalue q^{-i} of the dual adjacency matrix."""
    _check_index(i, 0, params.n, "dual eigenvalue")
    return Fraction(1, params.q**i)


def eigenvalue_difference(i: int, j: int, params: Params) -> Fraction:
    """Factored form (1 + phi q^{N-i-j}) (q^j - q^i)/(q-1) of the eigenvalue gap."""
    q = Fraction(params.q)
    return (1 + params.phi * q ** (params.n - i - j)) * (q**j - q**i) / (q - 1)


# -- coefficients of A, A*, R, L on an irreducible module with endpoint r --------


def _diameter(r: int, params: Params) -> int:
    if not 0 <= 2 * r <= params.n:
        raise IndexError(f"endpoint {r} outside 0..N/2")
    return params.n - 2 * r


def lowering_coeff(r: int, i: int, params: Params) -> Fraction:
    """Scalar with L R^i w = coeff * R^{i-1} w, for w of endpoint r (1 <= i <= d)."""
    d = _diameter(r, params)
    _check_index(i, 1, d, "lowering")
    q, n = Fraction(params.q), params.n
    return q ** (1 - i) * q_int(i, q) * (q ** (n - r) - q ** (i + r - 1)) / (q - 1)


def diagonal_coeff(r: int, i: int, params: Params) -> Fraction:
    d = _diameter(r, params)
    _check_index(i, 0, d, "diagonal")
    q = Fraction(params.q)
    return (params.phi - 1) / (q - 1) * q ** (i + r)


def upper_coeff(r: int, i: int, params: Params) -> Fraction:
    """Superdiagonal entry of A on the raising basis (1 <= i <= d)."""
    d = _diameter(r, params)
    _check_index(i, 1, d, "upper")
    q, n = Fraction(params.q), params.n
    value = params.phi * q**r * q_int(i, q) * (q ** (n - r) - q ** (i + r - 1)) / (q - 1)
    assert value == params.phi * q ** (r + i - 1) * lowering_coeff(r, i, params)
    return value


def leonard_lower(r: int, i: int, params: Params) -> Fraction:
    """Subdiagonal c_i = q^r [i]_q of the Leonard intersection matrix (1 <= i <= d)."""
    d = _diameter(r, params)
    _check_index(i, 1, d, "Leonard subdiagonal")
    return Fraction(params.q) ** r * q_int(i, params.q)


def leonard_upper(r: int, i: int, params: Params) -> Fraction:
    """Superdiagonal b_i = phi (q^{N-r} - q^{i+r})/(q-1) (0 <= i <= d-1)."""
    d = _diameter(r, params)
    _check_index(i, 0, d - 1, "Leonard superdiagonal")
    q = Fraction(params.q)
    return params.phi * (q ** (params.n - r) - q ** (i + r)) / (q - 1)


class ModuleCoeffs(NamedTuple):
    lowering: Optional[Fraction]
    diagonal: Optional[Fraction]
    upper: Optional[Fraction]
    leonard_lower: Optional[Fraction]
    leonard_upper: Optional[Fraction]


def module_coeffs(r: int, i: int, params: Params) -> ModuleCoeffs:
    """All coefficient families at index i; None where i is outside a family's range."""
    d = _diameter(r, params)
    if not 0 <= i <= d:
        raise IndexError(f"index {i} outside 0..{d}")
    has_lower = i >= 1
    out = ModuleCoeffs(
        lowering_coeff(r, i, params) if has_lower else None,
        diagonal_coeff(r, i, params),
        upper_coeff(r, i, params) if has_lower else None,
        leonard_lower(r, i, params) if has_lower else None,
        leonard_upper(r, i, params) if i < d else None,
    )
    if has_lower:
        assert out.upper == out.leonard_lower * leonard_upper(r, i - 1, params)
    return out


@dataclass(frozen=True)
class LeonardParams:
    """Parameter record of a Leonard system of dual q-Krawtchouk type."""

    r: int
    d: int
    h: Fraction
    h_star: Fraction
    s: Fraction
    theta0: Fraction
    theta_star0: Fraction
    q: int

    def eigenvalue(self, i: int) -> Fraction:
        q = Fraction(self.q)
        return self.theta0 + self.h * (1 - q**i) * (1 - self.s * q ** (i + 1)) / q**i

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "h": self.h,
            "h_star": self.h_star,
            "s": self.s,
            "theta0": self.theta0,
            "theta_star0": self.theta_star0,
        }


def leonard_params(r: int, params: Params) -> LeonardParams:
    d = _diameter(r, params)
    q, n, phi = Fraction(params.q), params.n, params.phi
    lp = LeonardParams(
        r=r,
        d=d,
        h=phi * q ** (n - r) / (q - 1),
        h_star=q**-r,
        s=-(q ** (2 * r - n - 1)) / phi,
        theta0=(phi * q ** (n - r) - q**r) / (q - 1),
        theta_star0=q**-r,
        q=params.q,
    )
    for i in range(d + 1):
        assert lp.eigenvalue(i) == eigenvalue(i + r, params), (r, i)
    return lp


def multiplicity(r: int, n: int, q: int) -> int:
    """Number of irreducible modules with endpoint r in the standard module."""
    if not 0 <= 2 * r <= n:
        raise IndexError(f"endpoint {r} outside 0..N/2")
    if r == 0:
        return 1
    return int(q_binomial(n, r, q) - q_binomial(n, r - 1, q))
