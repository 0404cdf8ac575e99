import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modidem import (
    CongruenceSystem,
    ModulusMismatch,
    NonCoprimeModuli,
    Residue,
    crt_basis,
    crt_solve,
    crt_split,
    factor,
)
from oracles import delta_basis_scan, solution_scan


def random_coprime_moduli(rng, count, bound):
    moduli = []
    while len(moduli) < count:
        m = rng.randrange(1, bound)
        if all(math.gcd(m, other) == 1 for other in moduli):
            moduli.append(m)
    return moduli


coprime_lists = st.lists(st.integers(1, 10**6), min_size=1, max_size=6).filter(
    lambda ms: all(math.gcd(a, b) == 1 for i, a in enumerate(ms) for b in ms[i + 1 :])
)


def test_basis_858():
    # Each element must be the unique delta vector found by scanning [0, 858).
    moduli = [2, 3, 11, 13]
    scanned = delta_basis_scan(moduli)
    assert scanned == [[429], [286], [78], [66]]
    assert crt_basis(moduli).elements == (429, 286, 78, 66)


def test_basis_3_5():
    assert delta_basis_scan([3, 5]) == [[10], [6]]
    assert crt_basis([3, 5]).elements == (10, 6)


@pytest.mark.parametrize("m, h", [(7, 1), (858, 1), (1, 0)])
def test_basis_single_modulus(m, h):
    b = crt_basis([m])
    assert b.elements == (h,)
    assert b.big_modulus == m


def test_basis_with_unit_modulus():
    b = crt_basis([1, 5, 1, 3])
    assert b.elements == (0, 6, 0, 10)
    assert sum(b.elements) % b.big_modulus == 1


def test_basis_complements():
    b = crt_basis([2, 3, 11, 13])
    for m, h, g in zip(b.moduli, b.elements, b.complements):
        assert (g + h) % 858 == 1
        assert g % m == 0


@given(coprime_lists)
def test_basis_invariants(moduli):
    b = crt_basis(moduli)
    M = b.big_modulus
    assert M == math.prod(moduli)
    assert sum(b.elements) % M == 1 % M
    for k, (mk, hk) in enumerate(zip(moduli, b.elements)):
        assert 0 <= hk < M
        assert hk * hk % M == hk
        assert hk % mk == 1 % mk
        for j, mj in enumerate(moduli):
            if j != k:
                assert hk % mj == 0
                assert hk * b.elements[j] % M == 0


def test_basis_rejects_non_coprime():
    with pytest.raises(NonCoprimeModuli) as info:
        crt_basis([4, 9, 6])
    assert (info.value.i, info.value.j, info.value.gcd) == (0, 2, 2)


def test_solve_examples():
    assert solution_scan([(2, 3), (3, 5)]) == [8]
    assert crt_solve([(2, 3), (3, 5)]) == Residue(8, 15)
    assert crt_solve([(0, 858)]) == Residue(0, 858)
    assert crt_solve([(1, 2), (1, 3), (1, 11), (1, 13)]) == Residue(1, 858)


def test_solve_negative_remainders():
    # Coefficients of the m=765 idempotents are quoted with negative signs.
    assert crt_solve([(-135, 9), (-135, 5), (-135, 17)]) == Residue(630, 765)
    system = CongruenceSystem.of([(-1, 5), (2, 3)])
    assert system.constraints == ((4, 5), (2, 3))
    assert crt_solve(system) == Residue(14, 15)


def test_system_validation():
    with pytest.raises(ValueError):
        CongruenceSystem(())
    with pytest.raises(NonCoprimeModuli):
        crt_solve([(1, 6), (1, 4)])
    with pytest.raises(ValueError):
        crt_solve([(1, 0)])


def test_solve_exhaustive_small():
    rng = random.Random(7)
    checked = 0
    while checked < 300:
        moduli = random_coprime_moduli(rng, rng.randint(1, 4), 40)
        if math.prod(moduli) > 10**4:
            continue
        pairs = [(rng.randrange(-100, 100), m) for m in moduli]
        assert [crt_solve(pairs).value] == solution_scan(pairs)
        checked += 1


@given(st.integers(1, 10**6), st.data())
def test_split_round_trip(m, data):
    r = Residue(data.draw(st.integers(0, m - 1)), m)
    fac = factor(m)
    parts = crt_split(r, fac)
    assert [p.modulus for p in parts] == list(fac.prime_powers)
    if m > 1:
        assert crt_solve([(p.value, p.modulus) for p in parts]) == r
    else:
        assert parts == []


def test_split_examples():
    fac = factor(858)
    assert [p.value for p in crt_split(Residue(66, 858), fac)] == [0, 0, 0, 1]
    assert [p.value for p in crt_split(Residue(429, 858), fac)] == [1, 0, 0, 0]
    assert [p.value for p in crt_split(Residue(1, 858), fac)] == [1, 1, 1, 1]


def test_split_mismatch():
    with pytest.raises(ModulusMismatch):
        crt_split(Residue(1, 10), factor(12))


def test_residue_canonical():
    assert Residue.of(-65, 858) == Residue(793, 858)
    assert Residue.of(5, 1) == Residue(0, 1)
    with pytest.raises(ValueError):
        Residue(858, 858)
    with pytest.raises(ValueError):
        Residue(0, 0)
