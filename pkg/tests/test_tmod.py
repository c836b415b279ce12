from fractions import Fraction

import pytest

from lnq import tmod
from lnq.exactla import dot, unit_vector
from lnq.qscalar import leonard_params
from lnq.relcheck import VerificationError

from conftest import operators


def test_kernel_generator_counts(oracle):
    for key, dims in oracle["kernel_dims"].items():
        n, q = map(int, key.split(","))
        ops = operators(n, q)
        assert [len(tmod.kernel_generators(ops, r)) for r in range(n // 2 + 1)] == dims


def test_endpoint_zero_generator_is_unit_vector():
    for n, q in [(1, 2), (3, 2), (2, 3)]:
        ops = operators(n, q)
        assert tmod.kernel_generators(ops, 0) == [unit_vector(ops.size, 0)]


def test_generators_are_orthogonal():
    gens = tmod.kernel_generators(operators(3, 3), 1)
    for i in range(len(gens)):
        for j in range(i):
            assert dot(gens[i], gens[j]) == 0


def test_module_closure_examples(oracle):
    ops = operators(2, 2)
    m = tmod.generate_module(ops, unit_vector(ops.size, 0), 0)
    assert m.dim == 3
    L = ops.lowering
    assert L.apply(m.basis[1]) == [Fraction(oracle["x1_r0_2_2"]) * x for x in m.basis[0]]
    assert L.apply(m.basis[2]) == [Fraction(oracle["x2_r0_2_2"]) * x for x in m.basis[1]]
    rep = tmod.representation(ops, m, ops.adjacency)
    assert rep[0, 1] == Fraction(oracle["xi1_r0_2_2_phi1"])


def test_generate_module_rejects_non_kernel_vector():
    ops = operators(2, 2)
    bad = unit_vector(ops.size, 1)
    with pytest.raises(VerificationError):
        tmod.generate_module(ops, bad, 1)
    with pytest.raises(VerificationError):
        tmod.generate_module(ops, [Fraction(0)] * ops.size, 0)


def test_decomposition_dims():
    assert tmod.decompose(operators(2, 2)).dims() == [3, 1, 1]
    assert tmod.decompose(operators(3, 2)).dims() == [4, 2, 2, 2, 2, 2, 2]


@pytest.mark.parametrize("n,q,phi", [(2, 2, 1), (3, 2, Fraction(3, 2)), (2, 3, 1), (3, 3, 2), (2, 4, Fraction(1, 3))])
def test_all_module_checks_pass(n, q, phi):
    dec, records, results = tmod.run_modules(operators(n, q, phi))
    for r in results:
        assert r.passed, (r.id, r.witness)
    assert [rec.r for rec in records] == list(range(n // 2 + 1))
    assert all(rec.adjacency_irreducible and rec.dual_irreducible for rec in records)


def test_module_spectrum_example(oracle):
    ops = operators(3, 2)
    p = ops.params
    assert [p.eigenvalues()[i] for i in (1, 2)] == [Fraction(x) for x in oracle["module_eigenvalues_r1_3_2_phi1"]]
    assert tmod.eta(1, p)[0] == 1


def test_leonard_records(oracle):
    dec = tmod.decompose(operators(3, 2))
    records, result = tmod.leonard_report(dec)
    assert result.passed
    as_dicts = {r.r: r.as_dict() for r in records}
    for r, key in [(0, "leonard_r0_3_2_phi1"), (1, "leonard_r1_3_2_phi1")]:
        got = {k: v for k, v in as_dicts[r]["leonard"].items() if not k.endswith("tridiagonal")}
        assert got == {k: Fraction(v) for k, v in oracle[key].items()}
    assert as_dicts[1]["mult"] == 6


def test_diameter_zero_module_record():
    dec = tmod.decompose(operators(2, 2))
    records, result = tmod.leonard_report(dec)
    assert result.passed
    top = records[-1]
    assert top.d == 0 and top.params == leonard_params(1, dec.params)


def test_wrong_representation_is_recorded():
    ops = operators(2, 2)
    m = tmod.decompose(ops).modules[0][0]
    bad = tmod.TModule(m.endpoint, m.diameter, m.generator, [m.basis[0], [2 * x for x in m.basis[1]], m.basis[2]])
    result = tmod.verify_A_representation(ops, bad)
    assert not result.passed and result.witness
