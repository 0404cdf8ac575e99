import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modidem import (
    NotLiftable,
    Residue,
    factor,
    is_nilpotent,
    lift_by_projection,
    lift_idempotent,
)
from modidem.lifting import nilpotency_bound
from oracles import idempotent_scan, nilpotent_scan


@pytest.mark.parametrize(
    "r, m, expected", [(255, 765, True), (6, 858, False), (0, 858, True), (0, 1, True), (6, 12, True)]
)
def test_is_nilpotent_examples(r, m, expected):
    assert is_nilpotent(Residue(r, m)) is expected


def test_is_nilpotent_matches_radical():
    for m in range(1, 800):
        rad = factor(m).radical
        nil = set(nilpotent_scan(m))
        for r in range(m):
            assert is_nilpotent(Residue(r, m)) == (r % rad == 0) == (r in nil)


def test_nilpotency_bound():
    assert [nilpotency_bound(m) for m in (1, 2, 3, 4, 5, 8, 9)] == [1, 1, 2, 2, 3, 3, 4]
    for m in range(2, 5000):
        assert factor(m).max_exponent <= nilpotency_bound(m)


def test_lift_10_mod_12():
    # Scan: only idempotent of Z/12 differing from 10 by a nilpotent.
    candidates = [e for e in idempotent_scan(12) if (10 - e) % 6 == 0]
    assert candidates == [4]
    res = lift_idempotent(Residue(10, 12))
    assert res.lifted == Residue(4, 12)
    assert res.difference == Residue(6, 12)
    assert res.iterations == 1


def test_lift_fixed_point():
    res = lift_idempotent(Residue(144, 858))
    assert res.lifted == Residue(144, 858)
    assert res.iterations == 0
    assert res.difference == Residue(0, 858)


def test_lift_765():
    # 4 mod 765 is not liftable: 4 = 1 mod 3 but 4 mod 5 is neither 0 nor 1.
    with pytest.raises(NotLiftable):
        lift_idempotent(Residue(4, 765))
    with pytest.raises(NotLiftable):
        lift_by_projection(Residue(4, 765))
    candidates = [e for e in idempotent_scan(765) if (391 - e) % 255 == 0]
    assert candidates == [136]
    assert lift_idempotent(Residue(391, 765)).lifted == Residue(136, 765)


def test_lift_prime_power():
    m = 3**20
    f = Residue(1 + 3 * 12345, m)
    res = lift_idempotent(f)
    assert res.lifted == Residue(1, m)
    assert res.iterations <= math.ceil(math.log2(20)) + 1


def test_lift_big_modulus():
    p, q = 2**61 - 1, 2**31 - 1
    m = p**5 * q**3
    # 0 mod p, 1 mod q, perturbed by a nilpotent.
    target = lift_by_projection(Residue(p * pow(p, -1, q), m))
    f = Residue.of(target.value + 7 * p * q, m)
    res = lift_idempotent(f)
    assert res.lifted == target == lift_by_projection(f)
    assert res.lifted.value ** 2 % m == res.lifted.value
    assert res.iterations <= math.ceil(math.log2(5)) + 1


@given(st.integers(1, 3000), st.data())
def test_lift_agrees_with_projection(m, data):
    fac = factor(m)
    rad = fac.radical
    e = data.draw(st.sampled_from(idempotent_scan(m)))
    f = Residue.of(e + rad * data.draw(st.integers(0, m)), m)
    res = lift_idempotent(f)
    assert res.lifted == Residue(e, m) == lift_by_projection(f, fac)
    assert is_nilpotent(res.difference)
    bound = max(1, fac.max_exponent)
    assert res.iterations <= math.ceil(math.log2(bound)) + 1


def test_not_liftable():
    with pytest.raises(NotLiftable):
        lift_idempotent(Residue(2, 858))
    with pytest.raises(NotLiftable):
        lift_by_projection(Residue(2, 858), factor(858))
