"""The centrally extended elliptic Hall algebra at integer central charge k:
Lie bracket, PBW straightening in the enveloping algebra, the psi/omega and
GL_2(Z) symmetries, and bracket expressions for every generator in terms of
the level +-1 generators.

Elements are finite linear combinations of PBW-sorted words of nonzero
lattice points; the empty word is the scalar 1.  Generators are ordered by
(n, r), so words list lower levels first.  The central charge enters only
through the scalar k*n produced when opposite generators meet, so most
functions take k (or a general linear form in place of (r,n) |-> k*n)
as an explicit argument.
"""

from __future__ import annotations

import json

from .lattice import det2, form_apply
from .qfield import RF_ONE, RF_ZERO, RatFunc, qint


def gen_key(x):
    return (x[1], x[0])


def _check_letter(x):
    if x == (0, 0):
        raise ValueError("the zero lattice point indexes no generator")
    return x


class EHElement:
    """Linear combination of PBW-sorted words with RatFunc coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def zero():
        return EHElement()

    @staticmethod
    def scalar(c):
        c = c if isinstance(c, RatFunc) else RatFunc.from_int(c)
        return EHElement({(): c}) if not c.is_zero() else EHElement()

    @staticmethod
    def generator(x):
        _check_letter(x)
        return EHElement({(x,): RF_ONE})

    def is_zero(self):
        return not self.terms

    def add_term(self, word, coeff):
        if coeff.is_zero():
            return
        cur = self.terms.get(word)
        if cur is None:
            self.terms[word] = coeff
        else:
            s = cur + coeff
            if s.is_zero():
                del self.terms[word]
            else:
                self.terms[word] = s

    def __add__(self, other):
        out = EHElement(self.terms)
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other):
        out = EHElement(self.terms)
        for w, c in other.terms.items():
            out.add_term(w, -c)
        return out

    def __neg__(self):
        return EHElement({w: -c for w, c in self.terms.items()})

    def scale(self, c):
        c = c if isinstance(c, RatFunc) else RatFunc.from_int(c)
        if c.is_zero():
            return EHElement()
        return EHElement({w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, EHElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: _word_sort_key(wc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_terms():
            ws = " ".join(f"w[{r},{n}]" for r, n in word)
            parts.append((ws, coeff))
        return format_terms(parts)

    def __repr__(self):
        return f"EHElement({self})"

    def to_json(self):
        return [
            {"word": [[r, n] for r, n in word], "coeff": str(coeff)}
            for word, coeff in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data):
        if isinstance(data, str):
            data = json.loads(data)
        out = EHElement()
        for item in data:
            word = tuple((int(r), int(n)) for r, n in item["word"])
            out.add_term(word, RatFunc.parse(item["coeff"]))
        return out


def _word_sort_key(word):
    return (len(word), tuple(gen_key(x) for x in word))


def format_terms(parts):
    """Join (symbol, coeff) pairs, pulling negative leading signs out."""
    chunks = []
    for symbol, coeff in parts:
        neg = _leading_negative(coeff)
        if neg:
            coeff = -coeff
        cs = str(coeff)
        if "/" in cs or " " in cs:
            cs = f"({cs})"
        if symbol:
            body = symbol if cs == "1" else f"{cs} {symbol}"
        else:
            body = cs
        if not chunks:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


def _leading_negative(coeff):
    coeff.canonical()
    return bool(coeff.num) and coeff.num[0][1] < 0


# ---------------------------------------------------------------------------
# the Lie bracket and its reduction by a central charge
# ---------------------------------------------------------------------------

def lie_bracket_form(x, y, form):
    """[w_x, w_y] = {det(x y)} w_{x+y} + delta_{x,-y} * form(x)."""
    _check_letter(x)
    _check_letter(y)
    out = EHElement()
    d = det2(x, y)
    if d:
        s = (x[0] + y[0], x[1] + y[1])
        out.add_term((s,), qint(d))
    if x[0] == -y[0] and x[1] == -y[1]:
        out.add_term((), RatFunc.from_int(form_apply(form, x)))
    return out


def lie_bracket(x, y, k):
    """The bracket at central charge k, where the center acts by k*n."""
    return lie_bracket_form(x, y, (0, k))


def bracket_lie_elements(a, b, form):
    """Bilinear extension of the bracket to span{w_x} + scalars.

    Both arguments must be supported on words of length <= 1; central
    scalars bracket to zero.
    """
    out = EHElement()
    for wa, ca in a.terms.items():
        if not wa:
            continue
        for wb, cb in b.terms.items():
            if not wb:
                continue
            inner = lie_bracket_form(wa[0], wb[0], form)
            for w, c in inner.terms.items():
                out.add_term(w, ca * cb * c)
    return out


# ---------------------------------------------------------------------------
# PBW straightening
# ---------------------------------------------------------------------------

def pbw_normalize_form(word, form, strategy="leftmost"):
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    for x in word:
        _check_letter(x)
    out = EHElement()
    stack = [(tuple(word), RF_ONE)]
    while stack:
        w, c = stack.pop()
        idx = _find_descent(w, strategy)
        if idx is None:
            out.add_term(w, c)
            continue
        x, y = w[idx], w[idx + 1]
        stack.append((w[:idx] + (y, x) + w[idx + 2:], c))
        d = det2(x, y)
        if d:
            s = (x[0] + y[0], x[1] + y[1])
            stack.append((w[:idx] + (s,) + w[idx + 2:], c * qint(d)))
        if x[0] == -y[0] and x[1] == -y[1]:
            ctr = form_apply(form, x)
            if ctr:
                stack.append((w[:idx] + w[idx + 2:], c * ctr))
    return out


def _find_descent(w, strategy):
    rng = range(len(w) - 1)
    if strategy == "rightmost":
        rng = reversed(rng)
    for i in rng:
        if gen_key(w[i]) > gen_key(w[i + 1]):
            return i
    return None


def pbw_normalize(word, k, strategy="leftmost"):
    return pbw_normalize_form(word, (0, k), strategy)


def multiply_form(a, b, form):
    out = EHElement()
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            c = ca * cb
            norm = pbw_normalize_form(wa + wb, form)
            for w, cw in norm.terms.items():
                out.add_term(w, c * cw)
    return out


def multiply(a, b, k):
    """Associative product in the enveloping algebra at charge k."""
    return multiply_form(a, b, (0, k))


# ---------------------------------------------------------------------------
# symmetries
# ---------------------------------------------------------------------------

def apply_psi(e, k):
    """w_x -> w_{-x}; an isomorphism from charge k to charge -k."""
    out = EHElement()
    for word, c in e.terms.items():
        image = tuple((-r, -n) for r, n in word)
        norm = pbw_normalize(image, -k)
        for w, cw in norm.terms.items():
            out.add_term(w, c * cw)
    return out


def apply_omega(e, k):
    """w_{r,n} -> (-1)^(n+1) w_{r,-n}; an isomorphism from charge k to -k."""
    out = EHElement()
    for word, c in e.terms.items():
        sign = 1
        image = []
        for r, n in word:
            if n % 2 == 0:
                sign = -sign
            image.append((r, -n))
        norm = pbw_normalize(tuple(image), -k)
        for w, cw in norm.terms.items():
            out.add_term(w, (c * cw).__neg__() if sign < 0 else c * cw)
    return out


def gl2_charge(g, form):
    """The charge form of the image algebra: form o g^-1."""
    from .lattice import form_compose, gl2_inverse
    return form_compose(form, gl2_inverse(g))


def apply_gl2(g, e, form):
    """Letterwise w_x -> det(g) w_{g x}, landing at charge form o g^-1."""
    from .lattice import check_unimodular, gl2_apply
    det = check_unimodular(g)
    target = gl2_charge(g, form)
    out = EHElement()
    for word, c in e.terms.items():
        image = tuple(gl2_apply(g, x) for x in word)
        sign = det ** len(word)
        norm = pbw_normalize_form(image, target)
        for w, cw in norm.terms.items():
            out.add_term(w, c * cw * sign)
    return out


# ---------------------------------------------------------------------------
# generator expressions through the level +-1 generators
# ---------------------------------------------------------------------------

class BracketExpr:
    """Tree of nested brackets with RatFunc prefactors and lattice-point
    leaves, used to express generators through the level +-1 family."""

    __slots__ = ("coeff", "leaf", "left", "right")

    def __init__(self, coeff, leaf=None, left=None, right=None):
        self.coeff = coeff
        self.leaf = leaf
        self.left = left
        self.right = right

    @staticmethod
    def make_leaf(x):
        return BracketExpr(RF_ONE, leaf=x)

    @staticmethod
    def make_node(coeff, left, right):
        return BracketExpr(coeff, left=left, right=right)

    def leaves(self):
        if self.leaf is not None:
            yield self.leaf
        else:
            yield from self.left.leaves()
            yield from self.right.leaves()

    def __str__(self):
        if self.leaf is not None:
            return f"w[{self.leaf[0]},{self.leaf[1]}]"
        body = f"[{self.left}, {self.right}]"
        if self.coeff.is_one():
            return body
        return f"({self.coeff}) {body}"

    def __repr__(self):
        return f"BracketExpr({self})"

    def to_json(self):
        if self.leaf is not None:
            return {"leaf": list(self.leaf)}
        return {"coeff": str(self.coeff), "bracket": [self.left.to_json(), self.right.to_json()]}


def express_w(r, n):
    """A bracket expression for w_{r,n} with every leaf of level +-1.

    Level 1 and -1 generators are leaves; w_{r,0} = {r}^-1 [w_{0,-1}, w_{r,1}];
    higher levels climb one step at a time, bracketing with w_{0,+-1} when
    r != 0 and with w_{-+1,+-1} against w_{+-1,n-+1} when r = 0.
    """
    _check_letter((r, n))
    if n in (1, -1):
        return BracketExpr.make_leaf((r, n))
    if n == 0:
        return BracketExpr.make_node(
            qint(r).inverse(),
            BracketExpr.make_leaf((0, -1)),
            BracketExpr.make_leaf((r, 1)),
        )
    if n >= 2:
        if r != 0:
            return BracketExpr.make_node(
                qint(r).inverse(), express_w(r, n - 1), BracketExpr.make_leaf((0, 1)))
        return BracketExpr.make_node(
            qint(n).inverse(), express_w(1, n - 1), BracketExpr.make_leaf((-1, 1)))
    # n <= -2, mirror images of the positive-level recursions
    if r != 0:
        return BracketExpr.make_node(
            qint(r).inverse(), BracketExpr.make_leaf((0, -1)), express_w(r, n + 1))
    return BracketExpr.make_node(
        qint(-n).inverse(), express_w(-1, n + 1), BracketExpr.make_leaf((1, -1)))


def eval_bracket(expr, k):
    """Evaluate a bracket expression through the Lie bracket at charge k."""
    return _eval_bracket_form(expr, (0, k))


def _eval_bracket_form(expr, form):
    if expr.leaf is not None:
        return EHElement.generator(expr.leaf)
    left = _eval_bracket_form(expr.left, form)
    right = _eval_bracket_form(expr.right, form)
    return bracket_lie_elements(left, right, form).scale(expr.coeff)
