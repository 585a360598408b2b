import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tblab.characters import (
    character_value,
    conductor,
    enumerate_characters,
    euler_phi,
    gauss_sum,
    is_primitive,
)
from tblab.errors import InvalidModulus


def test_enumeration_counts():
    assert len(enumerate_characters(4)) == 2
    assert len(enumerate_characters(1)) == 1
    for q in range(1, 31):
        chars = enumerate_characters(q)
        assert len(chars) == euler_phi(q)
        assert chars[0].is_principal


def test_q5_has_one_real_nonprincipal_and_it_is_even():
    chars = enumerate_characters(5)
    real_np = [c for c in chars if c.is_real and not c.is_principal]
    assert len(real_np) == 1
    assert real_np[0].is_even


def test_trivial_character_mod_1():
    triv = enumerate_characters(1)[0]
    assert all(triv.value(n) == 1 for n in range(-3, 10))


def test_invalid_modulus():
    with pytest.raises(InvalidModulus):
        enumerate_characters(0)


def test_character_values():
    chi4 = enumerate_characters(4)[1]
    assert chi4.is_odd and chi4.is_real
    assert character_value(chi4, 3) == -1
    assert character_value(chi4, 7) == -1
    # zero off the units, for every modulus > 1
    for q in (2, 6, 9):
        for chi in enumerate_characters(q):
            assert chi.value(q) == 0
    principal5 = enumerate_characters(5)[0]
    assert character_value(principal5, 7) == 1


def test_periodicity_and_multiplicativity():
    for chi in enumerate_characters(7):
        for n in range(1, 15):
            assert chi.value(n + 7) == chi.value(n)
        for m in range(1, 8):
            for n in range(1, 8):
                assert abs(chi.value(m * n) - chi.value(m) * chi.value(n)) < 1e-14


def test_conductors():
    assert conductor(enumerate_characters(6)[0]) == 1
    chi3 = enumerate_characters(3)[1]
    assert conductor(chi3) == 3 and is_primitive(chi3)
    # mod-8 character agreeing with the mod-4 odd character on odd residues
    chi4 = enumerate_characters(4)[1]
    induced = [c for c in enumerate_characters(8)
               if all(c.value(n) == chi4.value(n) for n in (1, 3, 5, 7))]
    assert len(induced) == 1
    assert conductor(induced[0]) == 4 and not is_primitive(induced[0])


def test_gauss_sum_examples():
    chi4 = enumerate_characters(4)[1]
    assert abs(gauss_sum(chi4).value - 2j) < 1e-13
    chi5 = enumerate_characters(5)[2]
    assert abs(gauss_sum(chi5).value - math.sqrt(5)) < 1e-13
    triv = enumerate_characters(1)[0]
    assert gauss_sum(triv).value == 1


def test_orthogonality_to_q30():
    for q in range(1, 31):
        chars = enumerate_characters(q)
        phi = len(chars)
        for c1 in chars:
            for c2 in chars:
                acc = sum(c1.value(n) * c2.value(n).conjugate()
                          for n in range(1, q + 1))
                expected = phi if c1.index == c2.index else 0.0
                assert abs(acc - expected) < 1e-12 * max(1, phi)


def test_gauss_product_signs():
    # tau(chi) tau(conj chi) = chi(-1) q for primitive non-principal chi
    for q in range(2, 31):
        for chi in enumerate_characters(q):
            if not chi.is_primitive or chi.is_principal:
                continue
            prod = gauss_sum(chi).value * gauss_sum(chi.conjugate()).value
            expected = -q if chi.is_odd else q
            assert abs(prod - expected) < 1e-10
            assert abs(abs(gauss_sum(chi).value) ** 2 - q) < 1e-10


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=40), st.data())
def test_conjugate_closure(q, data):
    chars = enumerate_characters(q)
    chi = data.draw(st.sampled_from(chars))
    twice = chi.conjugate().conjugate()
    assert twice == chi
    conj = chi.conjugate()
    for n in range(1, q + 1):
        r = chi.log_value(n)
        if r is None:
            assert conj.log_value(n) is None
        else:
            assert conj.log_value(n) == (-r) % 1  # exact rational arithmetic
        assert abs(conj.value(n) - chi.value(n).conjugate()) < 1e-15


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=30), st.data())
def test_order_divides_group_order(q, data):
    chars = enumerate_characters(q)
    chi = data.draw(st.sampled_from(chars))
    assert euler_phi(q) % chi.order == 0
    assert chi.conductor > 0 and q % chi.conductor == 0
