"""The action of the central charge k elliptic Hall algebra on Sym (x) Sym.

Level +-1 generators act by the explicit deletion/insertion formulas on the
P basis; level 0 by scaled power-sum multiplication; all other generators by
evaluating their bracket expressions as operator commutators.  The action
depends on the formal parameter t of the coefficient field even though the
algebra does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .eha import BracketExpr, EHElement, express_w
from .qfield import RF_ONE, RF_ZERO, RatFunc, qint, tpow
from .symfunc import GenPartition, Sym2Element, e_to_P, h_to_P, p_mult

_Z = qint(1)
_ZINV = qint(1).inverse()
_T = tpow(1)
_TINV = tpow(-1)


@dataclass(frozen=True)
class FockParams:
    """Central charge of the acting algebra; the deformation parameter t
    stays the formal symbol of the coefficient field and is never
    specialized."""

    k: int = 0


@lru_cache(maxsize=None)
def _act_level1_basis(r, sign, k, lam):
    """Action of the level +-1 generator indexed by r on P_lam."""
    out = Sym2Element.zero()
    lam_size = lam.size()
    for mu, mult, dsize, dlen in lam.sub_multisets():
        w = RatFunc.from_int(mult)
        if sign > 0:
            piece = (
                h_to_P(r + dsize - k, 1).scale(-_TINV)
                + h_to_P(-r - dsize, -1).scale(_T)
            )
        else:
            # (-1)^(|lam| + |mu|) = (-1)^dsize since |lam| + |mu| = 2|mu| + dsize
            sgn = -1 if (r + dlen + dsize) % 2 else 1
            piece = (
                e_to_P(r + dsize + k, 1).scale(_T if k % 2 == 0 else -_T)
                + e_to_P(-r - dsize, -1).scale(-_TINV)
            ).scale(sgn)
        if piece.is_zero():
            continue
        piece = piece * Sym2Element.basis(mu)
        out = out + piece.scale(w)
    out = out.scale(_ZINV)
    for c in out.terms.values():
        c.canonical()
    return out


def act_level1(r, sign, v, params):
    """Action of the level sign (+1 or -1) generator with winding r."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = Sym2Element.zero()
    for lam, c in v.terms.items():
        out = out + _act_level1_basis(r, sign, params.k, lam).scale(c)
    return out


def act_level0(r, v):
    """Action of the level 0 generator with winding r != 0: power-sum
    multiplication scaled by -1/{r} in the first factor for r > 0 and by
    +1/{|r|} in the second factor for r < 0."""
    if r == 0:
        raise ValueError("there is no level-0 generator with winding 0")
    scale = -qint(r).inverse() if r > 0 else qint(-r).inverse()
    return p_mult(r, v).scale(scale)


@lru_cache(maxsize=None)
def _expr_cache(r, n):
    return express_w(r, n)


def _split_point(r, n):
    """The commutator route of the generator expression: (coeff, x1, x2)
    with w_{r,n} = coeff * [w_{x1}, w_{x2}], matching express_w."""
    if n == 0:
        return qint(r).inverse(), (0, -1), (r, 1)
    if n >= 2:
        if r != 0:
            return qint(r).inverse(), (r, n - 1), (0, 1)
        return qint(n).inverse(), (1, n - 1), (-1, 1)
    if r != 0:
        return qint(r).inverse(), (0, -1), (r, n + 1)
    return qint(-n).inverse(), (-1, n + 1), (1, -1)


@lru_cache(maxsize=None)
def _act_general_basis(x, k, lam):
    """Action of any generator on a basis vector, memoized at every level of
    the bracket recursion so nested commutators share their sub-actions."""
    r, n = x
    if n in (1, -1):
        return _act_level1_basis(r, n, k, lam)
    coeff, x1, x2 = _split_point(r, n)
    base = Sym2Element.basis(lam)
    lr = _act_elem(x1, _act_elem(x2, base, k), k)
    rl = _act_elem(x2, _act_elem(x1, base, k), k)
    out = (lr - rl).scale(coeff)
    for c in out.terms.values():
        c.canonical()
    return out


def _act_elem(x, v, k):
    acc = {}
    for lam, c in v.terms.items():
        for mu, cw in _act_general_basis(x, k, lam).terms.items():
            prev = acc.get(mu)
            val = c * cw if prev is None else prev + c * cw
            if val.is_zero():
                acc.pop(mu, None)
            else:
                acc[mu] = val
    return Sym2Element._own(acc)


def _act_expr(expr, v, params):
    """Evaluate an arbitrary bracket expression as operator commutators."""
    if expr.leaf is not None:
        return act_level1(expr.leaf[0], expr.leaf[1], v, params)
    lr = _act_expr(expr.left, _act_expr(expr.right, v, params), params)
    rl = _act_expr(expr.right, _act_expr(expr.left, v, params), params)
    return (lr - rl).scale(expr.coeff)


def act_general(x, v, params):
    """Action of the generator indexed by any nonzero lattice point, via its
    bracket expression through level +-1 operators."""
    if x == (0, 0):
        raise ValueError("the zero lattice point indexes no generator")
    return _act_elem(tuple(x), v, params.k)


def act_word(word, v, params):
    """Right-to-left composition: the last letter acts first."""
    out = v
    for x in reversed(list(word)):
        out = act_general(x, out, params)
    return out


def act_eh_element(e, v, params):
    """Action of a PBW-expanded algebra element."""
    out = Sym2Element.zero()
    for word, c in e.terms.items():
        out = out + act_word(word, v, params).scale(c)
    return out


# ---------------------------------------------------------------------------
# tensor products of Fock modules
# ---------------------------------------------------------------------------

class Sym2Tensor:
    """Element of (Sym (x) Sym) (x) (Sym (x) Sym), a module over the algebra
    at summed central charge via the Leibniz rule on generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def pure(left, right):
        out = Sym2Tensor()
        for la, ca in left.terms.items():
            for lb, cb in right.terms.items():
                out.add_term(la, lb, ca * cb)
        return out

    @staticmethod
    def vacuum():
        return Sym2Tensor({(GenPartition.EMPTY, GenPartition.EMPTY): RF_ONE})

    def add_term(self, lam, mu, coeff):
        if coeff.is_zero():
            return
        key = (lam, mu)
        cur = self.terms.get(key)
        if cur is None:
            self.terms[key] = coeff
        else:
            s = cur + coeff
            if s.is_zero():
                del self.terms[key]
            else:
                self.terms[key] = s

    def __add__(self, other):
        out = Sym2Tensor(self.terms)
        for (lam, mu), c in other.terms.items():
            out.add_term(lam, mu, c)
        return out

    def __sub__(self, other):
        out = Sym2Tensor(self.terms)
        for (lam, mu), c in other.terms.items():
            out.add_term(lam, mu, -c)
        return out

    def scale(self, c):
        c = c if isinstance(c, RatFunc) else RatFunc.from_int(c)
        if c.is_zero():
            return Sym2Tensor()
        return Sym2Tensor({k: c * v for k, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Sym2Tensor):
            return NotImplemented
        return self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def __str__(self):
        if not self.terms:
            return "0"
        from .eha import format_terms
        return format_terms(
            [(f"P{lam}(x)P{mu}", c) for (lam, mu), c in self.sorted_terms()])


def tensor_act(x, tv, p1, p2):
    """Leibniz action of the generator x on a tensor of Fock modules; the
    result is a module at central charge p1.k + p2.k."""
    if x == (0, 0):
        raise ValueError("the zero lattice point indexes no generator")
    out = Sym2Tensor()
    for (lam, mu), c in tv.terms.items():
        left = _act_general_basis(tuple(x), p1.k, lam)
        for la, ca in left.terms.items():
            out.add_term(la, mu, c * ca)
        right = _act_general_basis(tuple(x), p2.k, mu)
        for mb, cb in right.terms.items():
            out.add_term(lam, mb, c * cb)
    return out


def tensor_act_word(word, tv, p1, p2):
    out = tv
    for x in reversed(list(word)):
        out = tensor_act(x, out, p1, p2)
    return out


def clear_caches():
    _act_level1_basis.cache_clear()
    _act_general_basis.cache_clear()
    _expr_cache.cache_clear()
