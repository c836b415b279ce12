"""Exact-arithmetic verification engine for the weighted Q-polynomial
structure on the projective geometry L_N(q)."""

from fractions import Fraction

from .exactla import ExactMatrix
from .geometry import SubspacePoset, enumerate_poset
from .gfq import FieldCtx, field_for_order, make_field
from .operators import OperatorSet
from .qscalar import Params, leonard_params, q_binomial, q_factorial, q_int
from .report import build_report, run_suite, verify


def build(n: int, q: int, phi=1) -> OperatorSet:
    """Enumerate L_n(q) and build every operator at the given phi."""
    return OperatorSet(enumerate_poset(n, field_for_order(q)), Params(n, q, Fraction(phi)))


__all__ = [
    "ExactMatrix",
    "FieldCtx",
    "OperatorSet",
    "Params",
    "SubspacePoset",
    "build",
    "build_report",
    "enumerate_poset",
    "field_for_order",
    "leonard_params",
    "make_field",
    "q_binomial",
    "q_factorial",
    "q_int",
    "run_suite",
    "verify",
]
