"""Integer lattice bookkeeping: determinants, the positive/negative cones,
the GL_2(Z) action on Z^2, and reduction of a linear form to a multiple of
(r,n) |-> n by an explicit unimodular matrix.

Lattice points are plain tuples (r, n); matrices are ((a, b), (c, d)) with
determinant +-1; linear forms are tuples (a, b) meaning (r, n) |-> a*r + b*n.
"""

from __future__ import annotations

import math

IDENTITY = ((1, 0), (0, 1))


def det2(x, y):
    """Determinant of the 2x2 matrix with columns x and y."""
    return x[0] * y[1] - x[1] * y[0]


def cone(x):
    """+1 if x lies in the upper half-lattice (n > 0, or n = 0 and r > 0),
    -1 for its negation.  The origin belongs to neither cone."""
    r, n = x
    if r == 0 and n == 0:
        raise ValueError("the origin lies in neither cone")
    return 1 if (n > 0 or (n == 0 and r > 0)) else -1


def check_unimodular(g):
    ((a, b), (c, d)) = g
    det = a * d - b * c
    if det not in (1, -1):
        raise ValueError(f"matrix {g} is not in GL_2(Z)")
    return det


def gl2_det(g):
    return check_unimodular(g)


def gl2_apply(g, x):
    ((a, b), (c, d)) = g
    return (a * x[0] + b * x[1], c * x[0] + d * x[1])


def gl2_mul(g, h):
    return (
        (g[0][0] * h[0][0] + g[0][1] * h[1][0], g[0][0] * h[0][1] + g[0][1] * h[1][1]),
        (g[1][0] * h[0][0] + g[1][1] * h[1][0], g[1][0] * h[0][1] + g[1][1] * h[1][1]),
    )


def gl2_inverse(g):
    ((a, b), (c, d)) = g
    det = check_unimodular(g)
    return ((d * det, -b * det), (-c * det, a * det))


def form_apply(form, x):
    return form[0] * x[0] + form[1] * x[1]


def form_compose(form, g):
    """The linear form x |-> form(g x)."""
    a, b = form
    return (a * g[0][0] + b * g[1][0], a * g[0][1] + b * g[1][1])


def charge_form(k):
    """The form (r, n) |-> k*n."""
    return (0, k)


def _bezout_minimal(a, b, k):
    """c, d with a*c + b*d = k, |c| minimal, then |d| minimal, then c >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_u, u = u, old_u - quot * u
        old_v, v = v, old_v - quot * v
    scale = k // old_r
    u0, v0 = old_u * scale, old_v * scale
    # solution family: (u0 - s*(b//k), v0 + s*(a//k)), s in Z
    sb, sa = b // k, a // k
    if sb == 0 and sa == 0:
        span = [(u0, v0)]
    elif sb == 0:
        s0 = round(-v0 / sa)
        span = [(u0, v0 + s * sa) for s in range(s0 - 2, s0 + 3)]
    elif sa == 0:
        s0 = round(u0 / sb)
        span = [(u0 - s * sb, v0) for s in range(s0 - 2, s0 + 3)]
    else:
        s0 = round(u0 / sb)
        span = [(u0 - s * sb, v0 + s * sa) for s in range(s0 - 2, s0 + 3)]
    c, d = min(span, key=lambda cd: (abs(cd[0]), abs(cd[1]), cd[0] < 0))
    assert a * c + b * d == k
    return c, d


def violet_gamma(form):
    """For a linear form L, return (gamma, k) with k = gcd of its coefficients
    and gamma in GL_2(Z) such that L o gamma^-1 is (r, n) |-> k*n.  The zero
    form yields (identity, 0)."""
    a, b = form
    if a == 0 and b == 0:
        return IDENTITY, 0
    k = math.gcd(a, b)
    c, d = _bezout_minimal(a, b, k)
    gamma = ((d, -c), (a // k, b // k))
    assert check_unimodular(gamma) == 1
    return gamma, k


# -- serialization -----------------------------------------------------------

def parse_point(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'r,n', got {text!r}")
    return (int(parts[0]), int(parts[1]))


def point_str(x):
    return f"{x[0]},{x[1]}"


def parse_word(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_point(p) for p in text.split())


def matrix_str(g):
    return f"[[{g[0][0]},{g[0][1]}],[{g[1][0]},{g[1][1]}]]"
