from fractions import Fraction

import pytest

from lnq.exactla import ExactMatrix, rank, unit_vector
from lnq.operators import OperatorSet
from lnq.qscalar import Params

from conftest import operators, poset


def test_dual_idempotents_partition(oracle):
    ops = operators(3, 2)
    total = ops.zero()
    for i, e in enumerate(ops.dual_idempotents):
        total = total + e
        for j, f in enumerate(ops.dual_idempotents):
            assert e @ f == (e if i == j else ops.zero())
    assert total == ops.identity()
    assert ops.dual_idempotents[1].trace() == oracle["trace_Estar1_3_2"]
    assert ops.dual_idempotent(-1).is_zero() and ops.dual_idempotent(4).is_zero()


def test_dual_adjacency_small(oracle):
    ops = operators(1, 2)
    assert ops.dual_adjacency.diagonal_entries() == [Fraction(x) for x in oracle["A_star_1_2"]]
    assert ops.dual_adjacency @ ops.dual_adjacency_inv == ops.identity()


def test_raising_lowering(oracle):
    ops = operators(2, 2)
    assert ops.lowering == ops.raising.transpose()
    assert ops.raising.nnz() == oracle["R_ones_2_2"]
    assert not any(ops.lowering.apply(unit_vector(ops.size, 0)))
    assert not any(ops.raising.apply(unit_vector(ops.size, ops.size - 1)))


def test_adjacency_examples(oracle):
    assert operators(1, 2).adjacency.tolist() == [[Fraction(x) for x in r] for r in oracle["A_1_2_phi1"]]
    ops = operators(2, 2)
    assert all(x == 0 for x in ops.adjacency.diagonal_entries())
    row_sums = {sum(ops.adjacency.row(y).values()) for y in ops.poset.dim_blocks[1]}
    assert row_sums == {Fraction(x) for x in oracle["row_sum_dim1_2_2_phi1"]}


def test_equitable_variants(oracle):
    ops = operators(1, 2)
    assert ops.lowering_equitable.tolist() == [[Fraction(x) for x in r] for r in oracle["A_minus_sup_1_2"]]
    ops = operators(3, 2)
    assert ops.lowering_equitable - ops.raising_equitable == ops.adjacency
    assert ops.raising_equitable_alt == ops.dual_adjacency_inv / 1 + ops.raising
    ops = operators(2, 3, Fraction(2, 5))
    phi = ops.params.phi
    assert ops.adjacency == ops.lowering_equitable * phi - ops.raising_equitable
    assert ops.adjacency == ops.raising_equitable_alt * phi - ops.lowering_equitable_alt


def test_symmetrizer(oracle):
    ops = operators(4, 2)
    assert [ops.symmetrizer_entry(i) for i in range(5)] == [Fraction(x) for x in oracle["symmetrizer_sq_phi1_q2"]]
    ops = operators(3, 3, Fraction(7, 3))
    phi, q = ops.params.phi, 3
    assert ops.symmetrizer_entry(1) == phi
    assert ops.symmetrizer_entry(2) == phi**2 * q
    inv = ExactMatrix.diagonal([1 / x for x in ops.symmetrizer_sq.diagonal_entries()])
    assert ops.adjacency.transpose() == ops.symmetrizer_sq @ ops.adjacency @ inv


def test_idempotent_examples(oracle):
    ops = operators(3, 2)
    assert ops.idempotent(1).trace() == Fraction(oracle["trace_E1_3_2_phi1"])
    assert ops.idempotent(0) @ ops.adjacency == ops.idempotent(0) * 7
    assert ops.idempotent(-1).is_zero() and ops.idempotent(4).is_zero()
    ops = operators(2, 2)
    assert rank(ops.idempotent(1)) == oracle["rank_E1_2_2_phi1"]
    total = ops.zero()
    for e in ops.idempotents:
        total = total + e
    assert total == ops.identity()


def test_mismatched_params_rejected():
    with pytest.raises(ValueError):
        OperatorSet(poset(2, 2), Params(3, 2, Fraction(1)))
