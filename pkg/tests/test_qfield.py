import random

import pytest

from ehk.qfield import (
    ASC,
    DESC,
    LaurentSeries,
    RF_ONE,
    RF_T,
    RF_TINV,
    RF_ZERO,
    RatFunc,
    expand_series,
    qint,
    tpow,
    u_derivative,
)


def test_qint_examples():
    assert qint(0) == RF_ZERO
    assert str(qint(1)) == "q - q^-1"
    assert qint(-2) == -(qint(2))
    assert str(qint(-2)) == "-q^2 + q^-2"


def test_qint_antisymmetry():
    for d in range(-20, 21):
        assert qint(d) == -qint(-d)


def test_field_ops_examples():
    one = qint(1) / qint(1)
    assert one.is_one()
    # division oracle: (q + q^-1) * {1} must reproduce {2}
    ratio = qint(2) / qint(1)
    assert ratio * qint(1) == qint(2)
    assert ratio == RatFunc.parse("q + q^-1")
    assert qint(1) * qint(1) == RatFunc.parse("q^2 - 2 + q^-2")


def test_division_by_zero_is_reported():
    with pytest.raises(ZeroDivisionError):
        qint(2) / RF_ZERO
    with pytest.raises(ZeroDivisionError):
        RF_ZERO.inverse()


def test_field_axioms_random():
    rng = random.Random(3)

    def rand_value():
        v = RatFunc.from_int(rng.randint(-4, 4))
        for _ in range(rng.randint(0, 2)):
            v = v + RatFunc.monomial(rng.randint(-3, 3), rng.randint(-2, 2), rng.randint(-2, 2))
        if rng.random() < 0.4:
            v = v / qint(rng.randint(1, 3))
        return v

    for _ in range(150):
        a, b, c = rand_value(), rand_value(), rand_value()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == RF_ZERO
        if not a.is_zero():
            assert a * a.inverse() == RF_ONE


def test_equality_by_cross_multiplication():
    a = qint(4) / qint(2)
    b = RatFunc.parse("q^2 + q^-2")
    assert a == b
    assert hash(a) == hash(b)
    assert a != b + 1


def test_parse_roundtrip_random():
    rng = random.Random(11)
    for _ in range(200):
        num = RF_ZERO
        for _ in range(rng.randint(1, 4)):
            num = num + RatFunc.monomial(rng.randint(-4, 4), rng.randint(-3, 3), rng.randint(-3, 3))
        den = RF_ZERO
        while den.is_zero():
            den = RatFunc.from_int(rng.randint(-3, 3)) + RatFunc.monomial(
                rng.randint(-2, 2), rng.randint(0, 2), rng.randint(0, 2))
        v = num / den
        assert RatFunc.parse(str(v)) == v


def test_canonical_strings():
    assert str((RF_T - RF_TINV) / qint(1)) == "(t - t^-1)/(q - q^-1)"
    assert str(-tpow(2) / qint(1)) == "(-t^2)/(q - q^-1)"
    assert str(RatFunc.monomial(3, -1, 2)) == "3 q^-1 t^2"
    assert str(RF_ZERO) == "0"
    assert str(RatFunc.from_fraction(-3, 6)) == "(-1)/(2)"


# --- Laurent series ---------------------------------------------------------

T2 = tpow(2)


def test_series_geometric_example():
    # 1/(u + t^2) ascending: t^-2 - t^-4 u + t^-6 u^2
    s = expand_series([1], [T2, 1], ASC, 2)
    assert s.coefficient(0) == tpow(-2)
    assert s.coefficient(1) == -tpow(-4)
    assert s.coefficient(2) == tpow(-6)
    with pytest.raises(ValueError):
        s.coefficient(3)


def test_series_long_division_example():
    # u^2/(u + t^2) - u descending: -t^2 + t^4 u^-1 - t^6 u^-2
    num = [RF_ZERO, -T2, RF_ZERO]
    s = expand_series(num, [T2, 1], DESC, 2)
    assert s.coefficient(0) == -tpow(2)
    assert s.coefficient(-1) == tpow(4)
    assert s.coefficient(-2) == -tpow(6)
    with pytest.raises(ValueError):
        s.coefficient(-3)


def test_series_constant_both_directions():
    c = qint(3)
    for direction in (ASC, DESC):
        s = expand_series([c], [1], direction, 4)
        assert s.coefficient(0) == c
        assert s.coefficient(2 if direction == ASC else -2) == RF_ZERO


def test_series_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        expand_series([1], [], ASC, 3)


def _mul_upoly(a, b):
    out = [RF_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def test_series_product_matches_expansion_of_product():
    rng = random.Random(5)

    def rand_upoly(lead_nonzero=False):
        out = [RatFunc.from_int(rng.randint(-3, 3)) for _ in range(3)]
        if lead_nonzero:
            out[0] = out[0] + 5
        return out

    for direction in (ASC, DESC):
        for _ in range(25):
            fn, gn = rand_upoly(), rand_upoly()
            fd, gd = rand_upoly(True), rand_upoly(True)
            a = expand_series(fn, fd, direction, 4)
            b = expand_series(gn, gd, direction, 4)
            prod = a * b
            direct = expand_series(_mul_upoly(fn, gn), _mul_upoly(fd, gd), direction, prod.order)
            assert prod == direct


def test_u_derivative():
    # d/du (3 + 2u + 5u^3) = 2 + 15u^2
    d = u_derivative([3, 2, 0, 5])
    assert d == [RatFunc.from_int(2), RF_ZERO, RatFunc.from_int(15)]
