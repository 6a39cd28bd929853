"""Tests for the generalized-partition basis of Sym (x) Sym.

The expansion oracle below predates the library implementation it checks:
h_r and e_r are expanded over partitions of r with the standard cycle-type
weights, independently of the Newton recurrences used by the package.
"""

import random
from collections import Counter

import pytest

from ehk.qfield import RF_ONE, RF_ZERO, RatFunc, qint
from ehk.symfunc import (
    GenPartition,
    Sym2Element,
    e_to_P,
    h_to_P,
    p_mult,
    verify_HE_identity,
)


# --- independent expansion oracle -------------------------------------------

def partitions(n):
    def gen(n, maxp):
        if n == 0:
            yield ()
            return
        for p in range(min(n, maxp), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest
    yield from gen(n, n)


def zee(lam):
    z = 1
    for p, m in Counter(lam).items():
        z *= p ** m
        for i in range(1, m + 1):
            z *= i
    return z


def p_monomial(lam, sign):
    out = Sym2Element.vacuum()
    for p in lam:
        out = p_mult(p * sign, out)
    return out


def oracle_h(r, sign):
    out = Sym2Element.zero()
    for lam in partitions(r):
        out = out + p_monomial(lam, sign).scale(RatFunc.from_fraction(1, zee(lam)))
    return out


def oracle_e(r, sign):
    out = Sym2Element.zero()
    for lam in partitions(r):
        eps = (-1) ** (r - len(lam))
        out = out + p_monomial(lam, sign).scale(RatFunc.from_fraction(eps, zee(lam)))
    return out


# --- GenPartition ------------------------------------------------------------

def test_partition_validation():
    lam = GenPartition.of([3, -1, 1, -2])
    assert lam.neg == (-2, -1) and lam.pos == (1, 3)
    assert lam.length() == 4 and lam.size() == 1
    with pytest.raises(ValueError):
        GenPartition.of([0, 1])
    with pytest.raises(ValueError):
        GenPartition((-1, -2), ())  # wrong ordering


def test_partition_braces():
    lam = GenPartition.of([-2, 1])
    assert lam.braces() == qint(-2) * qint(1)


def test_partition_serialization():
    lam = GenPartition.of([-2, -1, 1, 3])
    assert str(lam) == "[-2,-1|1,3]"
    assert GenPartition.parse("[-2,-1|1,3]") == lam
    assert str(GenPartition.of([2])) == "[2]"
    assert GenPartition.parse("[2]") == GenPartition.of([2])
    assert str(GenPartition.EMPTY) == "[]"
    assert GenPartition.parse("[]") == GenPartition.EMPTY


def test_sub_multisets_match_index_subsets():
    lam = GenPartition.of([-1, -1, 2, 2, 2])
    parts = lam.parts()
    counts = Counter()
    for mask in range(1 << len(parts)):
        kept = [parts[i] for i in range(len(parts)) if mask & (1 << i)]
        counts[GenPartition.of(kept)] += 1
    dp = {}
    for mu, mult, dsize, dlen in lam.sub_multisets():
        dp[mu] = mult
        assert dsize == lam.size() - mu.size()
        assert dlen == lam.length() - mu.length()
    assert dp == dict(counts)


# --- operations ---------------------------------------------------------------

def test_p_mult_examples():
    vac = Sym2Element.vacuum()
    assert p_mult(2, vac) == Sym2Element.basis(GenPartition.of([2]), qint(2) ** 2)
    v = Sym2Element.basis(GenPartition.of([-1]))
    assert p_mult(-1, v) == Sym2Element.basis(GenPartition.of([-1, -1]), qint(1) ** 2)
    assert p_mult(1, Sym2Element.zero()).is_zero()
    with pytest.raises(ValueError):
        p_mult(0, vac)


def test_p_mult_tensor_factors_commute():
    v = Sym2Element.basis(GenPartition.of([-2, 1]))
    for r in range(1, 5):
        for s in range(1, 5):
            assert p_mult(r, p_mult(-s, v)) == p_mult(-s, p_mult(r, v))


def test_h_e_against_oracle():
    for r in range(0, 9):
        for sign in (1, -1):
            assert h_to_P(r, sign) == oracle_h(r, sign)
            assert e_to_P(r, sign) == oracle_e(r, sign)
    assert h_to_P(-3, 1).is_zero()
    assert e_to_P(-1, -1).is_zero()


def test_h2_e2_frozen_values():
    half = RatFunc.from_fraction(1, 2)
    assert h_to_P(2, 1) == Sym2Element({
        GenPartition.of([1, 1]): half * qint(1) ** 4,
        GenPartition.of([2]): half * qint(2) ** 2,
    })
    assert e_to_P(2, -1) == Sym2Element({
        GenPartition.of([-1, -1]): half * qint(1) ** 4,
        GenPartition.of([-2]): -(half * qint(2) ** 2),
    })
    # h_1 = p_1
    assert h_to_P(1, 1) == Sym2Element.basis(GenPartition.of([1]), qint(1) ** 2)


def test_he_identity():
    assert verify_HE_identity(1)
    assert verify_HE_identity(4)
    assert verify_HE_identity(8)


def test_conversion_degree():
    for r in range(1, 7):
        for sign in (1, -1):
            for lam in h_to_P(r, sign).terms:
                assert sum(abs(p) for p in lam.parts()) == r
            for lam in e_to_P(r, sign).terms:
                assert sum(abs(p) for p in lam.parts()) == r


def test_power_sum_generating_identity():
    # p_r = sum_{b=0}^{r-1} (-1)^b (r-b) h_{r-b} e_b, coefficientwise to degree 6
    for r in range(1, 7):
        acc = Sym2Element.zero()
        for b in range(0, r):
            term = (h_to_P(r - b, 1) * e_to_P(b, 1)).scale(
                RatFunc.from_int((r - b) * (1 if b % 2 == 0 else -1)))
            acc = acc + term
        assert acc == p_mult(r, Sym2Element.vacuum())


def test_element_json_roundtrip():
    v = h_to_P(3, 1) + e_to_P(2, -1).scale(qint(2))
    assert Sym2Element.from_json(v.to_json()) == v


def test_multiplicative_basis():
    a = Sym2Element.basis(GenPartition.of([-1, 2]))
    b = Sym2Element.basis(GenPartition.of([-1, 1]))
    assert a * b == Sym2Element.basis(GenPartition.of([-1, -1, 1, 2]))
