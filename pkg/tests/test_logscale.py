import math

import pytest

from tiltwell import LogScalar


def test_float_round_trip():
    for x in (1.0, -2.5, 3.7e-200, -8.1e250, 1e-5):
        y = LogScalar.from_float(x)
        assert y.to_float() == pytest.approx(x, rel=1e-15)


def test_zero():
    z = LogScalar.from_float(0.0)
    assert z.sign == 0
    assert z.to_float() == 0.0
    assert (z * LogScalar.from_float(5.0)).sign == 0
    assert str(z) == "0"


def test_conversion_fails_loudly_out_of_range():
    big = LogScalar.from_ln(800.0)
    small = LogScalar.from_ln(-800.0)
    with pytest.raises(OverflowError):
        big.to_float()
    with pytest.raises(OverflowError):
        small.to_float()
    # right at the edge is still fine
    assert LogScalar.from_ln(699.0).to_float() > 0


def test_multiplication_exact_in_ln_space():
    a = LogScalar.from_ln(-1500.0)
    b = LogScalar.from_ln(200.0, sign=-1)
    c = a * b
    assert c.sign == -1
    assert c.ln_magnitude == -1300.0
    d = c / b
    assert d.sign == 1
    assert d.ln_magnitude == -1500.0


def test_power_laws():
    a = LogScalar.from_ln(-3.5)
    assert (a**200).ln_magnitude == pytest.approx(-700.0, abs=0)
    neg = LogScalar.from_float(-2.0)
    assert (neg**3).sign == -1
    assert (neg**2).sign == 1
    with pytest.raises(ValueError):
        neg**0.5


def test_same_sign_addition_matches_floats():
    a = LogScalar.from_float(3.0e10)
    b = LogScalar.from_float(4.5e9)
    assert (a + b).to_float() == pytest.approx(3.45e10, rel=1e-14)
    na, nb = -a, -b
    assert (na + nb).to_float() == pytest.approx(-3.45e10, rel=1e-14)
    # huge values never leave log space
    c = LogScalar.from_ln(5000.0) + LogScalar.from_ln(5000.0)
    assert c.ln_magnitude == pytest.approx(5000.0 + math.log(2.0), rel=1e-15)


def test_mixed_sign_addition_refused():
    with pytest.raises(ValueError):
        LogScalar.from_float(1.0) + LogScalar.from_float(-1.0)


def test_add_zero_identity():
    a = LogScalar.from_float(-7.0)
    z = LogScalar.zero()
    assert (a + z) == a
    assert (z + a) == a


def test_float_coercion_in_arithmetic():
    a = LogScalar.from_float(2.0)
    assert (a * 3.0).to_float() == pytest.approx(6.0, rel=1e-15)
    assert (12.0 / a).to_float() == pytest.approx(6.0, rel=1e-15)
    assert (a / 4).to_float() == pytest.approx(0.5, rel=1e-15)


def test_ordering():
    xs = [-3.0e5, -1.0, 0.0, 2.0e-8, 7.0]
    ls = [LogScalar.from_float(x) for x in xs]
    assert sorted(ls, key=lambda v: v._key()) == ls
    assert ls[0] < ls[1] < ls[2] < ls[3] < ls[4]
    assert ls[4] > 1.0


def test_log10_property():
    assert LogScalar.from_float(1000.0).log10 == pytest.approx(3.0, rel=1e-14)
    assert LogScalar.zero().log10 == -math.inf


def test_str_scientific_form():
    s = str(LogScalar.from_ln(1462.23))
    assert "e+635" in s
    assert str(LogScalar.from_float(-0.00123)).startswith("-1.23")


def test_invalid_sign_rejected():
    with pytest.raises(ValueError):
        LogScalar(2, 1.0)
    with pytest.raises(ValueError):
        LogScalar(1, math.inf)
