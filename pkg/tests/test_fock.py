import random

import pytest

from ehk.eha import EHElement, apply_omega, pbw_normalize
from ehk.fock import (
    FockParams,
    Sym2Tensor,
    act_eh_element,
    act_general,
    act_level0,
    act_level1,
    act_word,
    tensor_act,
    tensor_act_word,
)
from ehk.lattice import det2
from ehk.qfield import RF_ZERO, RatFunc, qint, tpow
from ehk.symfunc import GenPartition, Sym2Element, e_to_P, h_to_P

VAC = Sym2Element.vacuum()
Z = qint(1)


def pts(bound):
    return [(r, n) for r in range(-bound, bound + 1)
            for n in range(-bound, bound + 1) if (r, n) != (0, 0)]


def test_vacuum_eigenvalue_level1():
    got = act_level1(0, 1, VAC, FockParams(0))
    assert got == Sym2Element.vacuum((tpow(1) - tpow(-1)) / Z)


def test_level1_vacuum_matches_h_expansion():
    for r in range(-3, 4):
        for k in range(-2, 3):
            got = act_level1(r, 1, VAC, FockParams(k))
            want = (h_to_P(r - k, 1).scale(-tpow(-1)) + h_to_P(-r, -1).scale(tpow(1))).scale(Z.inverse())
            assert got == want


def test_level_minus1_vacuum_matches_e_expansion():
    for r in range(-3, 4):
        for k in range(-2, 3):
            got = act_level1(r, -1, VAC, FockParams(k))
            s1 = 1 if (r + k) % 2 == 0 else -1
            s2 = 1 if (r - 1) % 2 == 0 else -1
            want = (e_to_P(r + k, 1).scale(tpow(1) * s1)
                    + e_to_P(-r, -1).scale(tpow(-1) * s2)).scale(Z.inverse())
            assert got == want


def test_level_minus1_vacuum_negative_charge():
    got = act_level1(0, -1, VAC, FockParams(-2))
    assert got == Sym2Element.vacuum(-tpow(-1) * Z.inverse())


def test_level0_examples():
    assert act_level0(2, VAC) == Sym2Element.basis(GenPartition.of([2]), -qint(2))
    assert act_level0(-1, VAC) == Sym2Element.basis(GenPartition.of([-1]), qint(1))
    assert act_level0(3, Sym2Element.zero()).is_zero()
    with pytest.raises(ValueError):
        act_level0(0, VAC)


def test_act_general_agrees_with_level_formulas():
    states = [VAC, Sym2Element.basis(GenPartition.of([1])),
              Sym2Element.basis(GenPartition.of([-2, 1]))]
    for k in (-2, 0, 1):
        p = FockParams(k)
        for v in states:
            for r in range(-3, 4):
                assert act_general((r, 1), v, p) == act_level1(r, 1, v, p)
                assert act_general((r, -1), v, p) == act_level1(r, -1, v, p)
                if r != 0:
                    assert act_general((r, 0), v, p) == act_level0(r, v)
    with pytest.raises(ValueError):
        act_general((0, 0), VAC, FockParams(0))


def test_eigenvalue_table():
    for n in range(-4, 5):
        if n == 0:
            continue
        got = act_general((0, n), VAC, FockParams(0))
        assert got == Sym2Element.vacuum((tpow(n) - tpow(-n)) / qint(n))
    for k in (1, 2, 3):
        for n in (1, 2, 3):
            assert act_general((0, n), VAC, FockParams(k)) == Sym2Element.vacuum(tpow(n) / qint(n))
            assert act_general((0, -n), VAC, FockParams(-k)) == Sym2Element.vacuum(tpow(-n) / qint(-n))


def test_act_word():
    p = FockParams(3)
    assert act_word([], VAC, p) == VAC
    lhs = act_word([(0, 1), (0, -1)], VAC, p) - act_word([(0, -1), (0, 1)], VAC, p)
    assert lhs == VAC.scale(3)
    assert act_word([(1, 0)], VAC, p) == Sym2Element.basis(GenPartition.of([1]), -qint(1))


def test_defining_relation_small_sweep():
    states = [VAC, Sym2Element.basis(GenPartition.of([1])),
              Sym2Element.basis(GenPartition.of([-1]))]
    for k in (-1, 0, 1):
        p = FockParams(k)
        for x in pts(1):
            for y in pts(1):
                for v in states:
                    lhs = act_general(x, act_general(y, v, p), p) \
                        - act_general(y, act_general(x, v, p), p)
                    rhs = Sym2Element.zero()
                    d = det2(x, y)
                    s = (x[0] + y[0], x[1] + y[1])
                    if d and s != (0, 0):
                        rhs = rhs + act_general(s, v, p).scale(qint(d))
                    if x[0] == -y[0] and x[1] == -y[1]:
                        rhs = rhs + v.scale(k * x[1])
                    assert lhs == rhs


def test_bubble_slide_operator_identity():
    # level-0 past level-1: [W_{r,0}, W_{s,1}] = {r} W_{s+r,1}
    states = [VAC, Sym2Element.basis(GenPartition.of([-2, 1])),
              Sym2Element.basis(GenPartition.of([2, 2]))]
    for k in (-2, 0, 1):
        p = FockParams(k)
        for r in (-3, -1, 1, 2, 3):
            for s in range(-2, 3):
                for v in states:
                    lhs = act_level0(r, act_level1(s, 1, v, p)) \
                        - act_level1(s, 1, act_level0(r, v), p)
                    rhs = act_level1(s + r, 1, v, p).scale(qint(r))
                    assert (lhs - rhs).is_zero()


def test_cyclicity_witness():
    # every P_lam with <=3 parts of size <=3 is reached from the vacuum by
    # an explicit word of level-0 operators
    parts_pool = [p for p in range(-3, 4) if p]
    seen = set()
    rng = random.Random(1)
    for _ in range(40):
        lam = GenPartition.of(rng.sample(parts_pool, rng.randint(0, 3)))
        if lam in seen:
            continue
        seen.add(lam)
        word = [(p, 0) for p in lam.parts()]
        got = act_word(word, VAC, FockParams(0))
        scale = RatFunc.from_int(1)
        for p in lam.parts():
            scale = scale * (-qint(p) if p > 0 else qint(-p))
        assert got == Sym2Element.basis(lam, scale)


def test_omega_compatibility_sampled():
    # acting after the omega substitution at charge -k realizes the twisted
    # module: the commutation relations of charge k hold for the twisted
    # operators W'_x = rho_{-k}(omega(w_x))
    rng = random.Random(6)
    points = pts(2)

    def act_twisted(x, v, k):
        r, n = x
        sign = -1 if n % 2 == 0 else 1
        return act_general((r, -n), v, FockParams(-k)).scale(sign)

    states = [VAC, Sym2Element.basis(GenPartition.of([-1, 2]))]
    for _ in range(12):
        x = rng.choice(points)
        y = rng.choice(points)
        k = rng.randint(-2, 2)
        for v in states:
            lhs = act_twisted(x, act_twisted(y, v, k), k) \
                - act_twisted(y, act_twisted(x, v, k), k)
            rhs = Sym2Element.zero()
            d = det2(x, y)
            s = (x[0] + y[0], x[1] + y[1])
            if d and s != (0, 0):
                rhs = rhs + act_twisted(s, v, k).scale(qint(d))
            if x[0] == -y[0] and x[1] == -y[1]:
                rhs = rhs + v.scale(k * x[1])
            assert lhs == rhs


def test_omega_word_compatibility():
    # the action of omega(word) at charge -k equals the composition of the
    # letterwise-twisted operators
    rng = random.Random(8)
    points = pts(2)
    for _ in range(8):
        word = tuple(rng.choice(points) for _ in range(2))
        k = rng.randint(-1, 1)
        v = Sym2Element.basis(GenPartition.of([1]))
        e = pbw_normalize(word, k)
        lhs = act_eh_element(apply_omega(e, k), v, FockParams(-k))
        sign = 1
        for (r, n) in word:
            if n % 2 == 0:
                sign = -sign
        twisted = [(r, -n) for (r, n) in word]
        rhs = act_word(twisted, v, FockParams(-k)).scale(sign)
        assert lhs == rhs


def test_tensor_examples():
    tv = Sym2Tensor.vacuum()
    p0 = FockParams(0)
    for x in [(1, 1), (2, 0), (0, -1)]:
        got = tensor_act(x, tv, p0, p0)
        left = act_general(x, VAC, p0)
        want = Sym2Tensor.pure(left, VAC) + Sym2Tensor.pure(VAC, left)
        assert got == want

    p1, p2 = FockParams(1), FockParams(2)
    lhs = tensor_act_word([(0, 1), (0, -1)], tv, p1, p2) \
        - tensor_act_word([(0, -1), (0, 1)], tv, p1, p2)
    assert lhs == tv.scale(3)

    st = Sym2Tensor.pure(Sym2Element.basis(GenPartition.of([1])), VAC)
    got = tensor_act((2, 0), st, p0, p0)
    want = Sym2Tensor()
    want.add_term(GenPartition.of([1, 2]), GenPartition.EMPTY, -qint(2))
    want.add_term(GenPartition.of([1]), GenPartition.of([2]), -qint(2))
    assert got == want
    with pytest.raises(ValueError):
        tensor_act((0, 0), tv, p1, p2)
