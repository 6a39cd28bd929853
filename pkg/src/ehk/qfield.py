"""Exact arithmetic in the fraction field Q(q,t), quantum integers, and
truncated Laurent expansion of rational functions in an auxiliary variable u.

A polynomial in q,t is stored as a sorted tuple of ((eq, et), c) with integer
exponents eq, et >= 0 and nonzero integer coefficients c, ordered descending
under graded lex with q > t.  A RatFunc is a reduced fraction of two such
polynomials; Laurent exponents are realized by a monomial in the denominator.
"""

from __future__ import annotations

import math

# ---------------------------------------------------------------------------
# integer polynomials in q, t (flat sparse representation)
# ---------------------------------------------------------------------------

def _grlex(m):
    return (m[0] + m[1], m[0])


def _pnorm(d):
    """Dict {(eq,et): c} -> canonical sorted tuple, zero coefficients dropped."""
    return tuple(sorted(((m, c) for m, c in d.items() if c), key=lambda mc: _grlex(mc[0]), reverse=True))


P_ZERO = ()
P_ONE = (((0, 0), 1),)


def _pconst(c):
    return (((0, 0), c),) if c else ()


def _pmono(c, eq, et):
    return (((eq, et), c),) if c else ()


def _padd(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for m, c in b:
        s = d.get(m, 0) + c
        if s:
            d[m] = s
        else:
            del d[m]
    return _pnorm(d)


def _pneg(a):
    return tuple((m, -c) for m, c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return P_ZERO
    if len(a) == 1:
        (ma, ca), = a
        if ma == (0, 0):
            return tuple((m, ca * c) for m, c in b) if ca != 1 else b
        return tuple(((m[0] + ma[0], m[1] + ma[1]), ca * c) for m, c in b)
    if len(b) == 1:
        return _pmul(b, a)
    d = {}
    for ma, ca in a:
        for mb, cb in b:
            m = (ma[0] + mb[0], ma[1] + mb[1])
            d[m] = d.get(m, 0) + ca * cb
    return _pnorm(d)


def _pscale(a, c):
    if c == 0:
        return P_ZERO
    if c == 1:
        return a
    return tuple((m, c * k) for m, k in a)


def _pcontent(a):
    g = 0
    for _, c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _pminexps(a):
    return (min(m[0] for m, _ in a), min(m[1] for m, _ in a))


def _pdivmono(a, eq, et, c=1):
    """Exact division by the monomial c * q^eq * t^et."""
    out = []
    for m, k in a:
        assert m[0] >= eq and m[1] >= et and k % c == 0
        out.append(((m[0] - eq, m[1] - et), k // c))
    return tuple(out)


def _pdivexact(a, g):
    """Exact division in Z[q,t]; raises if g does not divide a."""
    if not a:
        return P_ZERO
    if len(g) == 1:
        (mg, cg), = g
        return _pdivmono(a, mg[0], mg[1], cg)
    rem = dict(a)
    (mg, cg) = g[0]
    quot = {}
    while rem:
        m = max(rem, key=_grlex)
        c = rem[m]
        e = (m[0] - mg[0], m[1] - mg[1])
        if e[0] < 0 or e[1] < 0 or c % cg:
            raise ArithmeticError("inexact polynomial division")
        cq = c // cg
        quot[e] = cq
        for mm, cc in g:
            mt = (e[0] + mm[0], e[1] + mm[1])
            s = rem.get(mt, 0) - cq * cc
            if s:
                rem[mt] = s
            else:
                rem.pop(mt, None)
    return _pnorm(quot)


# --- univariate helpers over Z (dense lists, index = t-exponent) ------------

def _p1_strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _p1_content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _p1_scale(a, c):
    return [x * c for x in a]


def _p1_divint(a, c):
    return [x // c for x in a]


def _p1_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _p1_strip(out)


def _p1_prem(a, b):
    """Pseudo-remainder of a by b over Z."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        r = [x * lb for x in r]
        shift = len(r) - 1 - db
        for i, y in enumerate(b):
            r[shift + i] -= lr * y
        _p1_strip(r)
    return r


def _p1_gcd(a, b):
    a = _p1_strip(list(a))
    b = _p1_strip(list(b))
    if not a:
        return _p1_pos(b)
    if not b:
        return _p1_pos(a)
    ca, cb = _p1_content(a), _p1_content(b)
    g = math.gcd(ca, cb)
    a, b = _p1_divint(a, ca), _p1_divint(b, cb)
    while b:
        r = _p1_prem(a, b)
        cr = _p1_content(r)
        if cr:
            r = _p1_divint(r, cr)
        a, b = b, r
    return _p1_scale(_p1_pos(a), g)


def _p1_pos(a):
    return _p1_scale(a, -1) if a and a[-1] < 0 else a


# --- gcd in Z[q,t] via primitive PRS in q with Z[t] coefficients ------------

def _to_rec(a):
    rec = {}
    for (eq, et), c in a:
        lst = rec.setdefault(eq, [])
        if len(lst) <= et:
            lst.extend([0] * (et + 1 - len(lst)))
        lst[et] = c
    return {e: _p1_strip(v) for e, v in rec.items() if _p1_strip(list(v))}


def _from_rec(rec):
    d = {}
    for eq, lst in rec.items():
        for et, c in enumerate(lst):
            if c:
                d[(eq, et)] = c
    return _pnorm(d)


def _rec_content(rec):
    g = []
    for lst in rec.values():
        g = _p1_gcd(g, lst)
        if g == [1]:
            return g
    return g


def _rec_pp(rec, cont):
    if cont == [1]:
        return rec
    out = {}
    for e, lst in rec.items():
        q, r = _p1_divmod_exact(lst, cont)
        out[e] = q
    return out


def _p1_divmod_exact(a, b):
    """Exact division of a by b in Z[t]."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    db, lb = len(b) - 1, b[-1]
    while _p1_strip(a) and len(a) - 1 >= db:
        c, e = a[-1], len(a) - 1 - db
        assert c % lb == 0
        q[e] = c // lb
        for i, y in enumerate(b):
            a[e + i] -= q[e] * y
        _p1_strip(a)
    assert not a
    return q, a


def _rec_prem(A, B):
    """Pseudo-remainder in q of A by B (coefficients in Z[t])."""
    dB = max(B)
    lB = B[dB]
    A = {e: list(v) for e, v in A.items()}
    while A and max(A) >= dB:
        dA = max(A)
        lA = A.pop(dA)
        A = {e: _p1_mul(v, lB) for e, v in A.items()}
        shift = dA - dB
        for e, v in B.items():
            if e == dB:
                continue
            tgt = e + shift
            cur = A.get(tgt, [])
            prod = _p1_mul(lA, v)
            n = max(len(cur), len(prod))
            cur = cur + [0] * (n - len(cur))
            for i, y in enumerate(prod):
                cur[i] -= y
            cur = _p1_strip(cur)
            if cur:
                A[tgt] = cur
            else:
                A.pop(tgt, None)
    return A


def _pdeg_t(a):
    return max(m[1] for m, _ in a)


def _pdeg_q(a):
    return max(m[0] for m, _ in a)


def _to_dense_q(a):
    out = [0] * (_pdeg_q(a) + 1)
    for (eq, _), c in a:
        out[eq] = c
    return out


def _from_dense_q(lst):
    return _pnorm({(e, 0): c for e, c in enumerate(lst) if c})


def _to_dense_t(a):
    out = [0] * (_pdeg_t(a) + 1)
    for (_, et), c in a:
        out[et] = c
    return out


def _from_dense_t(lst):
    return _pnorm({(0, e): c for e, c in enumerate(lst) if c})


def _q_slices(a):
    """The q-polynomial coefficients of a viewed as a polynomial in t."""
    slices = {}
    for (eq, et), c in a:
        lst = slices.setdefault(et, [])
        if len(lst) <= eq:
            lst.extend([0] * (eq + 1 - len(lst)))
        lst[eq] = c
    return slices.values()


_GCD_CACHE = {}
_DIV_CACHE = {}


def _pdiv_cached(a, g):
    if len(g) == 1:
        (mg, cg), = g
        if mg == (0, 0) and cg == 1:
            return a
        return _pdivmono(a, mg[0], mg[1], cg)
    key = (a, g)
    out = _DIV_CACHE.get(key)
    if out is None:
        out = _pdivexact(a, g)
        if len(_DIV_CACHE) < 200000:
            _DIV_CACHE[key] = out
    return out


def _pgcd(a, b):
    """gcd in Z[q,t], normalized with positive leading coefficient (grlex)."""
    if not a:
        g = b
        return _pneg(g) if g and g[0][1] < 0 else g
    if not b:
        g = a
        return _pneg(g) if g and g[0][1] < 0 else g
    if len(a) == 1 or len(b) == 1:
        ca, cb = _pcontent(a), _pcontent(b)
        ea, eb = _pminexps(a), _pminexps(b)
        return _pmono(math.gcd(ca, cb), min(ea[0], eb[0]), min(ea[1], eb[1]))
    key = (a, b)
    g = _GCD_CACHE.get(key)
    if g is not None:
        return g
    dta, dtb = _pdeg_t(a), _pdeg_t(b)
    if dta == 0 and dtb == 0:
        g = _from_dense_q(_p1_gcd(_to_dense_q(a), _to_dense_q(b)))
    elif _pdeg_q(a) == 0 and _pdeg_q(b) == 0:
        g = _from_dense_t(_p1_gcd(_to_dense_t(a), _to_dense_t(b)))
    elif dtb == 0 or dta == 0:
        # one side involves q alone: reduce to univariate gcds of t-slices
        qonly, mixed = (b, a) if dtb == 0 else (a, b)
        g1 = _to_dense_q(qonly)
        for sl in _q_slices(mixed):
            g1 = _p1_gcd(g1, sl)
            if len(g1) == 1:
                break
        # a common monomial t-factor of the mixed side never divides qonly
        g = _from_dense_q(g1)
    else:
        A, B = _to_rec(a), _to_rec(b)
        if max(A) < max(B):
            A, B = B, A
        cA, cB = _rec_content(A), _rec_content(B)
        cg = _p1_gcd(cA, cB)
        A, B = _rec_pp(A, cA), _rec_pp(B, cB)
        while B:
            R = _rec_prem(A, B)
            if R:
                cR = _rec_content(R)
                R = _rec_pp(R, cR)
            A, B = B, R
        g = _from_rec({e: _p1_mul(v, cg) for e, v in A.items()})
    if g and g[0][1] < 0:
        g = _pneg(g)
    if len(_GCD_CACHE) < 400000:
        _GCD_CACHE[key] = g
    return g


def _pstr(a, shift=(0, 0)):
    """Render a polynomial as a Laurent polynomial, exponents shifted down."""
    if not a:
        return "0"
    parts = []
    for (eq, et), c in a:
        eq -= shift[0]
        et -= shift[1]
        factors = []
        if abs(c) != 1 or (eq == 0 and et == 0):
            factors.append(str(abs(c)))
        if eq:
            factors.append("q" if eq == 1 else f"q^{eq}")
        if et:
            factors.append("t" if et == 1 else f"t^{et}")
        term = " ".join(factors) if factors else "1"
        parts.append((c < 0, term))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, term in parts[1:]:
        out += (" - " if neg else " + ") + term
    return out


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

class RatFunc:
    """Element of Q(q,t).

    The canonical form has gcd(num, den) = 1 in Z[q,t] (including integer
    content) and a denominator with positive leading coefficient under
    graded lex with q > t.  Arithmetic keeps results exact but defers the
    gcd reduction until a canonical form is needed (hashing, printing) or
    the representation grows past a size threshold; equality is decided by
    cross-multiplication, which agrees with equality of canonical forms.
    Values are immutable as far as their mathematical value is concerned.
    """

    __slots__ = ("num", "den", "_hash", "_reduced")

    _SHRINK = 90

    def __init__(self, num, den=P_ONE, _canonical=False):
        if not _canonical:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None
        self._reduced = True

    @classmethod
    def _lazy(cls, num, den):
        """Exact but possibly unreduced fraction; cancels monomial factors
        and applies the full reduction only when the terms get large."""
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q,t)")
        if not num:
            return RF_ZERO
        if len(den) == 1:
            # cancel the denominator monomial and integer content exactly;
            # the result is already canonical
            (dq, dt), dc = den[0]
            if dq or dt:
                nq = min(m[0] for m, _ in num)
                nt = min(m[1] for m, _ in num)
                cq, ct = min(dq, nq), min(dt, nt)
                if cq or ct:
                    num = tuple(((m[0] - cq, m[1] - ct), c) for m, c in num)
                    dq, dt = dq - cq, dt - ct
            if dc not in (1, -1):
                g = math.gcd(_pcontent(num), abs(dc))
                if g > 1:
                    num = tuple((m, c // g) for m, c in num)
                    dc //= g
            if dc < 0:
                num, dc = _pneg(num), -dc
            out = cls.__new__(cls)
            out.num, out.den = num, _pmono(dc, dq, dt)
            out._hash = None
            out._reduced = True
            return out
        if len(num) + len(den) > cls._SHRINK:
            return cls(num, den)
        out = cls.__new__(cls)
        if den[0][1] < 0:
            num, den = _pneg(num), _pneg(den)
        out.num, out.den = num, den
        out._hash = None
        out._reduced = False
        return out

    def canonical(self):
        """Reduce in place to the canonical form; returns self."""
        if not self._reduced:
            self.num, self.den = _reduce(self.num, self.den)
            self._reduced = True
        return self

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_int(c):
        if c == 0:
            return RF_ZERO
        if c == 1:
            return RF_ONE
        return RatFunc(_pconst(c), P_ONE, _canonical=True)

    @staticmethod
    def from_fraction(a, b):
        return RatFunc(_pconst(a), _pconst(b))

    @staticmethod
    def monomial(c, eq=0, et=0):
        """c * q^eq * t^et with eq, et in Z."""
        neq, net = max(-eq, 0), max(-et, 0)
        return RatFunc(_pmono(c, eq + neq, et + net), _pmono(1, neq, net))

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def is_integer(self):
        self.canonical()
        return self.den == P_ONE and (not self.num or self.num[0][0] == (0, 0))

    def as_integer(self):
        if not self.num:
            return 0
        if self.is_integer():
            return self.num[0][1]
        raise ValueError(f"not an integer: {self}")

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            s = _padd(self.num, other.num)
            if not s:
                return RF_ZERO
            return RatFunc._lazy(s, self.den)
        # common denominator through the lcm so chains of additions do not
        # snowball the denominator degree
        g = _pgcd(self.den, other.den)
        if g == P_ONE:
            num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
            den = _pmul(self.den, other.den)
        else:
            c_other = _pdiv_cached(other.den, g)
            c_self = _pdiv_cached(self.den, g)
            num = _padd(_pmul(self.num, c_other), _pmul(other.num, c_self))
            den = _pmul(self.den, c_other)
        if not num:
            return RF_ZERO
        return RatFunc._lazy(num, den)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = _pneg(self.num), self.den
        out._hash = None
        out._reduced = self._reduced
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return RF_ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        return RatFunc._lazy(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        return RatFunc._lazy(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other):
        return self._coerce(other).__truediv__(self)

    def __pow__(self, e):
        if e == 0:
            return RF_ONE
        base = self if e > 0 else self.inverse()
        out = RF_ONE
        for _ in range(abs(e)):
            out = out * base
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc.from_int(other)
        elif not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        if self._reduced and other._reduced:
            return False
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    def __hash__(self):
        if self._hash is None:
            self.canonical()
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- display -----------------------------------------------------------

    def __str__(self):
        self.canonical()
        if not self.num:
            return "0"
        if len(self.den) == 1 and self.den[0][1] == 1:
            # pure monomial denominator folds into Laurent exponents
            (mq, mt), _ = self.den[0]
            return _pstr(self.num, (mq, mt))
        # balance a variable across the fraction when both sides use it, and
        # fold a pure monomial factor of the denominator into the numerator
        mn = _pminexps(self.num)
        md = _pminexps(self.den)

        def _shift(deg_fn, i):
            dn, dd = deg_fn(self.num), deg_fn(self.den)
            if dn and dd:
                return mn[i] + md[i]
            if dd and dd == md[i]:
                return md[i]
            return 0

        shift = (_shift(_pdeg_q, 0), _shift(_pdeg_t, 1))
        return f"({_pstr(self.num, shift)})/({_pstr(self.den, shift)})"

    def __repr__(self):
        return f"RatFunc({self})"

    @staticmethod
    def parse(text):
        return _parse_ratfunc(text)


def _reduce(num, den):
    if not den:
        raise ZeroDivisionError("zero denominator in Q(q,t)")
    if not num:
        return P_ZERO, P_ONE
    if den != P_ONE:
        g = _pgcd(num, den)
        if g != P_ONE:
            num, den = _pdivexact(num, g), _pdivexact(den, g)
    if den[0][1] < 0:
        num, den = _pneg(num), _pneg(den)
    return num, den


RF_ZERO = RatFunc(P_ZERO, P_ONE, _canonical=True)
RF_ONE = RatFunc(P_ONE, P_ONE, _canonical=True)
RF_Q = RatFunc(_pmono(1, 1, 0), P_ONE, _canonical=True)
RF_T = RatFunc(_pmono(1, 0, 1), P_ONE, _canonical=True)
RF_TINV = RatFunc(P_ONE, _pmono(1, 0, 1), _canonical=True)

_QINT_CACHE = {}


def qint(d):
    """Quantum integer {d} = q^d - q^-d, so {0} = 0 and {-d} = -{d}."""
    out = _QINT_CACHE.get(d)
    if out is None:
        if d == 0:
            out = RF_ZERO
        elif d > 0:
            num = _padd(_pmono(1, 2 * d, 0), _pconst(-1))
            out = RatFunc(num, _pmono(1, d, 0), _canonical=True)
        else:
            out = -qint(-d)
        _QINT_CACHE[d] = out
    return out


def tpow(n):
    return RatFunc.monomial(1, 0, n)


# ---------------------------------------------------------------------------
# parser for the canonical textual form
# ---------------------------------------------------------------------------

def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch in "qt":
            toks.append(("var", ch))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse_expr(self):
        neg = False
        while self.peek() in ("+", "-"):
            if self.next()[0] == "-":
                neg = not neg
        out = self.parse_term()
        if neg:
            out = -out
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            rhs = self.parse_term()
            out = out - rhs if op == "-" else out + rhs
        return out

    def parse_term(self):
        out = self.parse_factor()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op = self.next()[0]
                rhs = self.parse_factor()
                out = out / rhs if op == "/" else out * rhs
            elif nxt in ("int", "var", "("):
                out = out * self.parse_factor()
            else:
                return out

    def parse_factor(self):
        neg = False
        while self.peek() == "-":
            self.next()
            neg = not neg
        base = self.parse_atom()
        if self.peek() == "^":
            self.next()
            sgn = 1
            while self.peek() == "-":
                self.next()
                sgn = -sgn
            kind, val = self.next()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            base = base ** (sgn * val)
        return -base if neg else base

    def parse_atom(self):
        kind, val = self.next()
        if kind == "int":
            return RatFunc.from_int(val)
        if kind == "var":
            return RF_Q if val == "q" else RF_T
        if kind == "(":
            out = self.parse_expr()
            if self.peek() != ")":
                raise ValueError("unbalanced parentheses")
            self.next()
            return out
        raise ValueError(f"unexpected token {val!r}")


def _parse_ratfunc(text):
    p = _Parser(_tokenize(text))
    out = p.parse_expr()
    if p.pos != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return out


# ---------------------------------------------------------------------------
# truncated Laurent series in u with RatFunc coefficients
# ---------------------------------------------------------------------------

ASC = "u"
DESC = "u^-1"


class LaurentSeries:
    """Truncated Laurent expansion.

    direction ASC covers u-exponents start..order (ascending powers of u),
    direction DESC covers exponents start..-order (descending).  Coefficients
    outside the covered range are undefined and accessing them raises.
    """

    __slots__ = ("direction", "start", "coeffs", "order")

    def __init__(self, direction, start, coeffs, order):
        if direction not in (ASC, DESC):
            raise ValueError(f"bad direction {direction!r}")
        coeffs = list(coeffs)
        # normalize: strip leading zeros, clamp to the truncation window
        step = 1 if direction == ASC else -1
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            start += step
        limit = order if direction == ASC else -order
        keep = (limit - start) * step + 1
        if keep < 0:
            coeffs = []
        else:
            coeffs = coeffs[:keep]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.direction = direction
        self.start = start
        self.coeffs = tuple(coeffs)
        self.order = order

    def coefficient(self, e):
        step = 1 if self.direction == ASC else -1
        limit = self.order if self.direction == ASC else -self.order
        if (e - limit) * step > 0:
            raise ValueError(f"coefficient of u^{e} is beyond truncation order")
        idx = (e - self.start) * step
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return RF_ZERO

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.direction == other.direction and self.order == other.order
                and self.start == other.start and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.direction, self.start, self.coeffs, self.order))

    def scale(self, c):
        return LaurentSeries(self.direction, self.start, [c * x for x in self.coeffs], self.order)

    def __add__(self, other):
        if self.direction != other.direction:
            raise ValueError("direction mismatch")
        order = min(self.order, other.order)
        step = 1 if self.direction == ASC else -1
        if not self.coeffs:
            return LaurentSeries(other.direction, other.start, other.coeffs, order)
        if not other.coeffs:
            return LaurentSeries(self.direction, self.start, self.coeffs, order)
        start = self.start if (self.start - other.start) * step < 0 else other.start
        end = order if self.direction == ASC else -order
        out = []
        e = start
        while (e - end) * step <= 0:
            c = RF_ZERO
            i = (e - self.start) * step
            if 0 <= i < len(self.coeffs):
                c = c + self.coeffs[i]
            j = (e - other.start) * step
            if 0 <= j < len(other.coeffs):
                c = c + other.coeffs[j]
            out.append(c)
            e += step
        return LaurentSeries(self.direction, start, out, order)

    def __sub__(self, other):
        return self + other.scale(RatFunc.from_int(-1))

    def __mul__(self, other):
        if self.direction != other.direction:
            raise ValueError("direction mismatch")
        step = 1 if self.direction == ASC else -1
        # product coefficients are exact only up to the combined truncation
        lim_a = self.order * step
        lim_b = other.order * step
        lim = min(lim_a + other.start * step, lim_b + self.start * step)
        order = lim * step
        out = {}
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            ea = self.start + i * step
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                e = ea + other.start + j * step
                if e * step <= lim:
                    out[e] = out.get(e, RF_ZERO) + a * b
        start = self.start + other.start
        coeffs = []
        e = start
        while e * step <= lim:
            coeffs.append(out.get(e, RF_ZERO))
            e += step
        return LaurentSeries(self.direction, start, coeffs, order)

    def __str__(self):
        if not self.coeffs:
            return "0"
        step = 1 if self.direction == ASC else -1
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            e = self.start + i * step
            cs = str(c)
            if "/" in cs or " " in cs:
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            else:
                ue = "u" if e == 1 else f"u^{e}"
                parts.append(ue if cs == "1" else f"{cs} {ue}")
        return " + ".join(parts)


def _upoly_norm(coeffs):
    out = [c if isinstance(c, RatFunc) else RatFunc.from_int(c) for c in coeffs]
    while out and out[-1].is_zero():
        out.pop()
    return out


def u_derivative(coeffs):
    """d/du of a u-polynomial given by its coefficient list."""
    coeffs = _upoly_norm(coeffs)
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def expand_series(num, den, direction, order):
    """Expand num(u)/den(u) as a truncated Laurent series.

    num, den are coefficient lists (index = u-exponent) of RatFunc or int.
    """
    num = _upoly_norm(num)
    den = _upoly_norm(den)
    if not den:
        raise ZeroDivisionError("zero denominator in series expansion")
    if not num:
        return LaurentSeries(direction, 0, [], order)
    if direction == DESC:
        # expand f(1/w) in ascending w, then map w-exponent e -> u^(-e)
        dn, dd = len(num) - 1, len(den) - 1
        rnum = list(reversed(num))
        rden = list(reversed(den))
        asc = expand_series(rnum, rden, ASC, order + dn - dd)
        coeffs = list(asc.coeffs)
        start = dn - dd - asc.start
        return LaurentSeries(DESC, start, coeffs, order)
    vn = next(i for i, c in enumerate(num) if not c.is_zero())
    vd = next(i for i, c in enumerate(den) if not c.is_zero())
    num = num[vn:]
    den = den[vd:]
    start = vn - vd
    # long division of power series
    inv0 = den[0].inverse()
    ncoeff = order - start + 1
    out = []
    rem = list(num)
    for idx in range(max(ncoeff, 0)):
        c = rem[0] * inv0 if rem else RF_ZERO
        out.append(c)
        if rem:
            if not c.is_zero():
                for j in range(len(den)):
                    if j < len(rem):
                        rem[j] = rem[j] - c * den[j]
                    else:
                        rem.append(-(c * den[j]))
            rem.pop(0)
    return LaurentSeries(ASC, start, out, order)
