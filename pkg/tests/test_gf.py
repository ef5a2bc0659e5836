import pytest
from hypothesis import given
from hypothesis import strategies as st

from agflag.errors import ConfigError, DivisionByZero, SpecMismatch, ZeroInput
from agflag.gf import F16, FieldElement, FieldSpec, arith, mth_power_class, mth_roots

F7 = FieldSpec(7)
F9 = FieldSpec(3, 2, [1, 0, 1])  # x^2 + 1 is irreducible over F_3


def test_prime_field_examples():
    assert F7.mul(3, 5) == 1
    assert F7.inv(3) == 5
    assert F7.add(6, 3) == 2


def test_extension_reduction():
    w = 2
    assert F16.pow(w, 4) == 3  # w^4 = w + 1
    assert F16.pow(w, 5) == 6
    assert F16.pow(w, 10) == 7
    assert F16.pow(w, 15) == 1


def test_element_operators():
    a, b = F7(3), F7(5)
    assert a * b == F7(1)
    assert a / b == F7(2)
    assert -a == F7(4)
    assert a**-1 == F7(5)
    assert arith("sub", a, b) == F7(5)
    assert arith("inv", a) == F7(5)
    assert int(F7(6)) == 6
    assert not F7(0)


def test_cross_spec_is_an_error():
    with pytest.raises(SpecMismatch):
        F7(1) + F16(1)


def test_equal_specs_are_compatible():
    assert FieldSpec(7)(2) + F7(3) == F7(5)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        F7.inv(0)
    with pytest.raises(ZeroDivisionError):
        F7(1) / F7(0)


@pytest.mark.parametrize("cfg", [
    {"p": 6},
    {"p": 2, "k": 4, "modulus": [1, 0, 0, 0, 1]},  # (x+1)^4
    {"p": 2, "k": 4, "modulus": [1, 1, 0, 1]},  # wrong degree
    {"p": 2, "k": 2, "modulus": [1, 1, 2]},  # digit out of range
])
def test_bad_field_configs(cfg):
    with pytest.raises(ConfigError):
        FieldSpec.from_config(cfg)


def test_config_round_trip():
    assert FieldSpec.from_config(F16.to_config()) == F16


def test_mth_power_examples():
    assert mth_power_class(F7(6), 3)
    assert not mth_power_class(F7(2), 3)
    assert mth_power_class(F16(1), 5)
    assert [int(v) for v in mth_roots(F7(6), 3)] == [3, 5, 6]
    assert mth_roots(F7(2), 3) == []
    assert [int(v) for v in mth_roots(F7(1), 3)] == [1, 2, 4]
    with pytest.raises(ZeroInput):
        mth_power_class(F7(0), 3)


@pytest.mark.parametrize("F,m", [(F7, 3), (F7, 2), (F16, 5), (F16, 3), (F9, 4)])
def test_mth_power_class_matches_roots(F, m):
    cubes = {F.pow(v, m) for v in range(1, F.q)}
    for u in range(1, F.q):
        assert F.is_mth_power(u, m) == bool(F.mth_roots(u, m)) == (u in cubes)


@pytest.mark.parametrize("F", [F7, F9, F16, FieldSpec(2, 3, [1, 1, 0, 1]), FieldSpec(31)])
def test_field_axioms_exhaustive(F):
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1
        assert F.add(a, F.neg(a)) == 0
    for a in range(F.q):
        assert F.from_digits(F.digits(a)) == a


@given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
def test_f16_distributive(a, b, c):
    assert F16.mul(a, F16.add(b, c)) == F16.add(F16.mul(a, b), F16.mul(a, c))


@given(st.integers(1, 15), st.integers(-40, 40), st.integers(-40, 40))
def test_f16_power_laws(a, e1, e2):
    assert F16.mul(F16.pow(a, e1), F16.pow(a, e2)) == F16.pow(a, e1 + e2)


def test_elements_are_hashable():
    assert len({F7(1), FieldElement(FieldSpec(7), 1)}) == 1
