"""The ring Sym (x) Sym in its power-sum-normalized basis over generalized
partitions (finite multisets of nonzero integers), with conversions from the
complete homogeneous and elementary generators of either tensor factor.

The basis element attached to a generalized partition lam is
P_lam = (1/{lam}^2) * prod p_{lam_i}^+ * prod p_{-lam_j}^-, where positive
parts use the first tensor factor and negative parts the second.  In this
basis multiplication is just multiset union, and multiplying by a single
power sum inserts a part and scales by {r}^2.
"""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb

from .qfield import RF_ONE, RF_ZERO, RatFunc, qint
from .eha import format_terms


class GenPartition:
    """Multiset of nonzero integers; negative and positive parts are kept
    sorted separately in weakly increasing order."""

    __slots__ = ("neg", "pos", "_hash")

    def __init__(self, neg=(), pos=()):
        neg = tuple(neg)
        pos = tuple(pos)
        if any(p >= 0 for p in neg) or any(p <= 0 for p in pos):
            raise ValueError("parts must be nonzero, split by sign")
        if any(neg[i] > neg[i + 1] for i in range(len(neg) - 1)):
            raise ValueError("negative parts must be weakly increasing")
        if any(pos[i] > pos[i + 1] for i in range(len(pos) - 1)):
            raise ValueError("positive parts must be weakly increasing")
        self.neg = neg
        self.pos = pos
        self._hash = hash((neg, pos))

    @staticmethod
    def of(parts):
        parts = list(parts)
        if any(p == 0 for p in parts):
            raise ValueError("parts must be nonzero")
        return GenPartition(
            tuple(sorted(p for p in parts if p < 0)),
            tuple(sorted(p for p in parts if p > 0)),
        )

    EMPTY = None  # set below

    def parts(self):
        return self.neg + self.pos

    def length(self):
        return len(self.neg) + len(self.pos)

    def size(self):
        return sum(self.neg) + sum(self.pos)

    def braces(self):
        """The product of quantum integers {p} over all parts p."""
        out = RF_ONE
        for p in self.parts():
            out = out * qint(p)
        return out

    def union(self, other):
        if isinstance(other, int):
            other = GenPartition.of([other])
        return GenPartition.of(self.parts() + other.parts())

    def multiplicities(self):
        out = {}
        for p in self.parts():
            out[p] = out.get(p, 0) + 1
        return out

    def sub_multisets(self):
        """Yield (mu, multiplicity, deleted_size, deleted_length) over all
        deletions of index subsets; equal parts are aggregated with binomial
        multiplicities, which reproduces the index-subset count exactly."""
        items = sorted(self.multiplicities().items())
        combos = [((), 1, 0, 0)]
        for value, count in items:
            new = []
            for kept, mult, dsize, dlen in combos:
                for keep in range(count + 1):
                    deleted = count - keep
                    new.append((
                        kept + (value,) * keep,
                        mult * comb(count, keep),
                        dsize + deleted * value,
                        dlen + deleted,
                    ))
            combos = new
        for kept, mult, dsize, dlen in combos:
            yield GenPartition.of(kept), mult, dsize, dlen

    def __eq__(self, other):
        if not isinstance(other, GenPartition):
            return NotImplemented
        return self.neg == other.neg and self.pos == other.pos

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.length(), self.neg, self.pos)

    def __str__(self):
        ns = ",".join(str(p) for p in self.neg)
        ps = ",".join(str(p) for p in self.pos)
        if ns and ps:
            return f"[{ns}|{ps}]"
        return f"[{ns or ps}]"

    def __repr__(self):
        return f"GenPartition({self})"

    @staticmethod
    def parse(text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"expected [..|..], got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return GenPartition()
        if "|" in inner:
            ns, ps = inner.split("|", 1)
            neg = [int(p) for p in ns.split(",") if p.strip()]
            pos = [int(p) for p in ps.split(",") if p.strip()]
            return GenPartition(tuple(neg), tuple(pos))
        return GenPartition.of(int(p) for p in inner.split(","))


GenPartition.EMPTY = GenPartition()


class Sym2Element:
    """Finite linear combination of generalized partitions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def zero():
        return Sym2Element()

    @staticmethod
    def _own(terms):
        """Wrap a dict without copying; the caller hands over ownership."""
        out = Sym2Element.__new__(Sym2Element)
        out.terms = terms
        return out

    @staticmethod
    def vacuum(coeff=RF_ONE):
        return Sym2Element({GenPartition.EMPTY: coeff})

    @staticmethod
    def basis(lam, coeff=RF_ONE):
        return Sym2Element({lam: coeff})

    def is_zero(self):
        return not self.terms

    def add_term(self, lam, coeff):
        if coeff.is_zero():
            return
        cur = self.terms.get(lam)
        if cur is None:
            self.terms[lam] = coeff
        else:
            s = cur + coeff
            if s.is_zero():
                del self.terms[lam]
            else:
                self.terms[lam] = s

    def __add__(self, other):
        out = Sym2Element(self.terms)
        for lam, c in other.terms.items():
            out.add_term(lam, c)
        return out

    def __sub__(self, other):
        out = Sym2Element(self.terms)
        for lam, c in other.terms.items():
            out.add_term(lam, -c)
        return out

    def __neg__(self):
        return Sym2Element({lam: -c for lam, c in self.terms.items()})

    def scale(self, c):
        c = c if isinstance(c, RatFunc) else RatFunc.from_int(c)
        if c.is_zero():
            return Sym2Element()
        return Sym2Element({lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        # the P basis is multiplicative: P_lam P_mu = P_{lam u mu}
        out = Sym2Element()
        for la, ca in self.terms.items():
            for lb, cb in other.terms.items():
                out.add_term(la.union(lb), ca * cb)
        return out

    def __eq__(self, other):
        if not isinstance(other, Sym2Element):
            return NotImplemented
        return self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda tc: tc[0].sort_key())

    def __str__(self):
        if not self.terms:
            return "0"
        return format_terms([(f"P{lam}", c) for lam, c in self.sorted_terms()])

    def __repr__(self):
        return f"Sym2Element({self})"

    def to_json(self):
        return [{"partition": str(lam), "coeff": str(c)} for lam, c in self.sorted_terms()]

    @staticmethod
    def from_json(data):
        if isinstance(data, str):
            data = json.loads(data)
        out = Sym2Element()
        for item in data:
            out.add_term(GenPartition.parse(item["partition"]), RatFunc.parse(item["coeff"]))
        return out


def p_mult(r, v):
    """Multiply by the power sum indexed by r (positive: first factor,
    negative: second factor): inserts the part r and scales by {r}^2."""
    if r == 0:
        raise ValueError("there is no zeroth power sum")
    c = qint(r) * qint(r)
    out = Sym2Element()
    for lam, coeff in v.terms.items():
        out.add_term(lam.union(r), coeff * c)
    return out


def _signed(r, sign):
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return r if sign > 0 else -r


@lru_cache(maxsize=None)
def h_to_P(r, sign=1):
    """Complete homogeneous generator of degree r in the P basis.

    Newton recurrence: r h_r = sum_{s=1..r} p_s h_{r-s}; h_0 = 1 and
    h_r = 0 for r < 0.
    """
    if r < 0:
        return Sym2Element.zero()
    if r == 0:
        return Sym2Element.vacuum()
    acc = Sym2Element.zero()
    for s in range(1, r + 1):
        acc = acc + p_mult(_signed(s, sign), h_to_P(r - s, sign))
    return acc.scale(RatFunc.from_fraction(1, r))


@lru_cache(maxsize=None)
def e_to_P(r, sign=1):
    """Elementary generator of degree r in the P basis.

    Newton recurrence: r e_r = sum_{s=1..r} (-1)^(s-1) p_s e_{r-s}.
    """
    if r < 0:
        return Sym2Element.zero()
    if r == 0:
        return Sym2Element.vacuum()
    acc = Sym2Element.zero()
    for s in range(1, r + 1):
        term = p_mult(_signed(s, sign), e_to_P(r - s, sign))
        acc = acc + (term if s % 2 == 1 else -term)
    return acc.scale(RatFunc.from_fraction(1, r))


def verify_HE_identity(order):
    """Check sum_{s=0..n} (-1)^s h_{n-s} e_s = 0 for 1 <= n <= order,
    exactly, in the P basis (both tensor factors)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    for sign in (1, -1):
        for n in range(1, order + 1):
            acc = Sym2Element.zero()
            for s in range(0, n + 1):
                term = h_to_P(n - s, sign) * e_to_P(s, sign)
                acc = acc + (term if s % 2 == 0 else -term)
            if not acc.is_zero():
                return False
    return True
