import itertools

import pytest

from lnq.gfq import FieldCtx, field_for_order, is_irreducible, make_field


def test_make_field_moduli(oracle):
    assert make_field(2, 2).modulus == tuple(oracle["gf4_modulus"])
    assert make_field(2, 1).q == 2
    assert make_field(3, 1).q == 3
    assert make_field(3, 2).modulus == (1, 0, 1)
    # (1, 0, 1) precedes (1, 1, 0) low-degree-first: x^3 + x^2 + 1
    assert make_field(2, 3).modulus == (1, 0, 1, 1)


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(ValueError):
        FieldCtx(2, 2, (0, 0, 1))  # x^2 is reducible


def test_small_examples(oracle):
    gf2 = make_field(2)
    assert gf2.add(1, 1) == 0
    gf4 = make_field(2, 2)
    # x encodes as 2, x + 1 as 3
    assert gf4.mul(2, 2) == oracle["gf4_x_times_x"] == 3
    assert make_field(3).inv(2) == oracle["gf3_inv_2"]
    with pytest.raises(ZeroDivisionError):
        gf4.inv(0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_field_axioms_exhaustive(q):
    f = field_for_order(q)
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
            assert f.div(a, a) == 1
    for a, b in itertools.product(els, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, b) == f._mul_direct(a, b)
    for a, b, c in itertools.product(els[: min(q, 8)], repeat=3):
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


@pytest.mark.parametrize("q", [4, 8, 9, 16])
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(q):
    f = field_for_order(q)
    orders = set()
    for a in range(1, q):
        x, k = a, 1
        while x != 1:
            x, k = f.mul(x, a), k + 1
        orders.add(k)
        assert f.pow(a, q - 1) == 1
    assert q - 1 in orders


def test_irreducibility_by_trial_division():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)  # (x+1)^2
    assert is_irreducible((2, 2, 0, 1), 3) == all((x**3 + 2 * x + 2) % 3 for x in range(3))
