import pytest

from ehk.lattice import (
    IDENTITY,
    cone,
    det2,
    form_apply,
    form_compose,
    gl2_apply,
    gl2_inverse,
    gl2_mul,
    parse_point,
    parse_word,
    violet_gamma,
)


def test_det2_examples():
    assert det2((1, 0), (0, 1)) == 1
    assert det2((1, 1), (-1, -1)) == 0
    assert det2((2, 1), (1, 3)) == 5


def test_det2_antisymmetric_bilinear():
    rng = range(-5, 6)
    pts = [(r, n) for r in rng for n in rng]
    for x in pts:
        for y in pts:
            assert det2(x, y) == -det2(y, x)
    # bilinearity on a sample of triples
    for x in pts[::7]:
        for y in pts[::5]:
            for z in pts[::9]:
                s = (y[0] + z[0], y[1] + z[1])
                assert det2(x, s) == det2(x, y) + det2(x, z)


def test_cone_examples():
    assert cone((3, 0)) == 1
    assert cone((5, -1)) == -1
    assert cone((0, 1)) == 1
    with pytest.raises(ValueError):
        cone((0, 0))


def test_cone_partition():
    for r in range(-5, 6):
        for n in range(-5, 6):
            if (r, n) == (0, 0):
                continue
            assert cone((r, n)) == -cone((-r, -n))


def test_violet_examples():
    assert violet_gamma((0, 1)) == (IDENTITY, 1)
    assert violet_gamma((3, 0)) == (((0, -1), (1, 0)), 3)
    assert violet_gamma((0, 0)) == (IDENTITY, 0)
    gamma, k = violet_gamma((2, 4))
    assert k == 2


def test_violet_composition_sweep():
    probes = [(1, 0), (0, 1), (2, -3), (-5, 7)]
    for a in range(-5, 6):
        for b in range(-5, 6):
            gamma, k = violet_gamma((a, b))
            gi = gl2_inverse(gamma)
            for x in probes:
                assert form_apply((a, b), gl2_apply(gi, x)) == k * x[1]


def test_gl2_apply_examples():
    assert gl2_apply(IDENTITY, (7, -3)) == (7, -3)
    assert gl2_apply(((0, -1), (1, 0)), (1, 0)) == (0, 1)
    assert gl2_apply(((1, 1), (0, 1)), (1, 1)) == (2, 1)


def test_gl2_group_structure():
    mats = [IDENTITY, ((0, -1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1))]
    for g in mats:
        assert gl2_mul(g, gl2_inverse(g)) == IDENTITY
        for h in mats:
            for x in [(1, 0), (0, 1), (3, -2)]:
                assert gl2_apply(gl2_mul(g, h), x) == gl2_apply(g, gl2_apply(h, x))


def test_form_compose():
    for form in [(2, -3), (0, 1), (4, 4)]:
        for g in [((0, -1), (1, 0)), ((1, 1), (0, 1))]:
            for x in [(1, 0), (0, 1), (2, 5)]:
                assert form_apply(form_compose(form, g), x) == form_apply(form, gl2_apply(g, x))


def test_point_parsing():
    assert parse_point("3,-4") == (3, -4)
    assert parse_word("1,0 0,-1") == ((1, 0), (0, -1))
    assert parse_word("") == ()
    with pytest.raises(ValueError):
        parse_point("3")
