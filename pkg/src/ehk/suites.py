"""Named verification sweeps with machine-readable reports.

Every suite runs a family of exact identities and collects failures with
their inputs and both serialized sides; an empty failure list is success.
Randomized sweeps are driven by an explicit seed so repeated runs are
byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import eha, fock, hecke, lattice
from .qfield import RF_ONE, RF_ZERO, RatFunc, qint, tpow
from .symfunc import GenPartition, Sym2Element


@dataclass
class SuiteReport:
    suite: str
    bounds: dict
    checked: int = 0
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.failures

    def record(self, inputs, lhs, rhs):
        self.checked += 1
        if lhs != rhs:
            self.failures.append({"inputs": inputs, "lhs": str(lhs), "rhs": str(rhs)})

    def finish(self):
        self.failures.sort(key=lambda fl: sorted(fl["inputs"].items()).__repr__())
        return self

    def to_json(self):
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "checked": self.checked,
            "failures": self.failures,
            "info": self.info,
        }

    def summary(self):
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"suite {self.suite}: {self.checked} identities checked, {status}"


def _points(bound):
    return [
        (r, n)
        for n in range(-bound, bound + 1)
        for r in range(-bound, bound + 1)
        if (r, n) != (0, 0)
    ]


# ---------------------------------------------------------------------------
# bracket-level suites
# ---------------------------------------------------------------------------

def jacobi_suite(bound=3, charges=(-2, -1, 0, 1, 2)):
    """Antisymmetry and the Jacobi identity for the charge-reduced bracket."""
    rep = SuiteReport("jacobi", {"bound": bound, "charges": list(charges)})
    pts = _points(bound)
    zero = eha.EHElement.zero()
    gens = {x: eha.EHElement.generator(x) for x in pts}
    for k in charges:
        form = (0, k)
        brackets = {}
        for x in pts:
            for y in pts:
                brackets[(x, y)] = eha.lie_bracket(x, y, k)
                anti = brackets[(x, y)] + eha.lie_bracket(y, x, k) if (y, x) not in brackets \
                    else brackets[(x, y)] + brackets[(y, x)]
                rep.record({"identity": "antisymmetry", "k": k, "x": x, "y": y}, anti, zero)
        for x in pts:
            for y in pts:
                bxy = brackets[(x, y)]
                for z in pts:
                    total = eha.bracket_lie_elements(bxy, gens[z], form)
                    total = total + eha.bracket_lie_elements(brackets[(y, z)], gens[x], form)
                    total = total + eha.bracket_lie_elements(brackets[(z, x)], gens[y], form)
                    rep.record({"identity": "jacobi", "k": k, "x": x, "y": y, "z": z}, total, zero)
    return rep.finish()


def violet_suite(bound=5):
    """The reducing matrix sends every linear form to the standard one."""
    rep = SuiteReport("violet", {"bound": bound})
    probes = [(1, 0), (0, 1), (2, -3), (-5, 7)]
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            gamma, k = lattice.violet_gamma((a, b))
            gi = lattice.gl2_inverse(gamma)
            got = [lattice.form_apply((a, b), lattice.gl2_apply(gi, x)) for x in probes]
            want = [k * x[1] for x in probes]
            rep.record({"a": a, "b": b}, got, want)
    return rep.finish()


def biangular_suite(smax=4, rmax=4, charges=(-2, -1, 0, 1, 2)):
    """The lower-triangular presentation relations under the bracket."""
    rep = SuiteReport("biangular", {"smax": smax, "rmax": rmax, "charges": list(charges)})
    for k in charges:
        for s in range(-smax, smax + 1):
            # [w_{s,-1}, w_{1,1}] = {s+1} w_{s+1,0} - delta_{s,-1} k
            lhs = eha.lie_bracket((s, -1), (1, 1), k)
            rhs = eha.EHElement.zero()
            if s + 1 != 0:
                rhs.add_term(((s + 1, 0),), qint(s + 1))
            if s == -1:
                rhs.add_term((), RatFunc.from_int(-k))
            rep.record({"relation": "cross-unit", "k": k, "s": s}, lhs, rhs)
            for r in range(1, rmax + 1):
                # [w_{s,+-1}, w_{-+r,0}] = {r} w_{s-+r,+-1}
                lhs = eha.lie_bracket((s, 1), (-r, 0), k)
                rhs = eha.EHElement({((s - r, 1),): qint(r)})
                rep.record({"relation": "slide-up", "k": k, "s": s, "r": r}, lhs, rhs)
                lhs = eha.lie_bracket((s, -1), (r, 0), k)
                rhs = eha.EHElement({((s + r, -1),): qint(r)})
                rep.record({"relation": "slide-down", "k": k, "s": s, "r": r}, lhs, rhs)
            for r in range(1, rmax + 1):
                for s2 in range(1, smax + 1):
                    lhs = eha.lie_bracket((r, 0), (-s2, 0), k)
                    rep.record({"relation": "level0", "k": k, "r": r, "s": s2},
                               lhs, eha.EHElement.zero())
            # general [w_{s,-1}, w_{r,1}] = {r+s} w_{r+s,0} - delta_{r,-s} k
            for r in range(-rmax, rmax + 1):
                lhs = eha.lie_bracket((s, -1), (r, 1), k)
                rhs = eha.EHElement.zero()
                if r + s != 0:
                    rhs.add_term(((r + s, 0),), qint(r + s))
                else:
                    rhs.add_term((), RatFunc.from_int(-k))
                rep.record({"relation": "cross-general", "k": k, "s": s, "r": r}, lhs, rhs)
    return rep.finish()


def confluence_suite(count=200, seed=0, maxlen=4, coord_bound=2, charges=(-2, -1, 0, 1, 2)):
    """Leftmost-first and rightmost-first straightening agree."""
    rep = SuiteReport(
        "confluence",
        {"count": count, "seed": seed, "maxlen": maxlen, "coord_bound": coord_bound})
    rng = random.Random(seed)
    pts = _points(coord_bound)
    made = 0
    while made < count:
        word = tuple(rng.choice(pts) for _ in range(rng.randint(0, maxlen)))
        k = charges[made % len(charges)]
        left = eha.pbw_normalize(word, k, "leftmost")
        right = eha.pbw_normalize(word, k, "rightmost")
        rep.record({"word": list(word), "k": k}, left, right)
        made += 1
    return rep.finish()


# ---------------------------------------------------------------------------
# Fock-module suites
# ---------------------------------------------------------------------------

def _fock_states(part_max=2, len_max=2):
    parts = [p for p in range(-part_max, part_max + 1) if p]
    seen = []
    def rec(cur, start):
        if len(cur) <= len_max:
            lam = GenPartition.of(cur)
            if lam not in seen:
                seen.append(lam)
        if len(cur) == len_max:
            return
        for i in range(start, len(parts)):
            rec(cur + [parts[i]], i)
    rec([], 0)
    return sorted(seen, key=lambda lam: lam.sort_key())


def fock_relations_suite(bound=2, charges=(-2, -1, 0, 1, 2), part_max=2, len_max=2,
                         progress=None):
    """The commutator of two generator actions equals the bracket action."""
    rep = SuiteReport(
        "fock-relations",
        {"bound": bound, "charges": list(charges), "part_max": part_max, "len_max": len_max})
    pts = _points(bound)
    states = _fock_states(part_max, len_max)
    for k in charges:
        params = fock.FockParams(k)
        for i, x in enumerate(pts):
            if progress:
                progress(f"k={k} x={x}")
            for y in pts[i:]:
                d = lattice.det2(x, y)
                s = (x[0] + y[0], x[1] + y[1])
                central = k * x[1] if (x[0] == -y[0] and x[1] == -y[1]) else 0
                for lam in states:
                    v = Sym2Element.basis(lam)
                    xy = fock.act_general(x, fock.act_general(y, v, params), params)
                    yx = fock.act_general(y, fock.act_general(x, v, params), params)
                    lhs = xy - yx
                    rhs = Sym2Element.zero()
                    if d and s != (0, 0):
                        rhs = rhs + fock.act_general(s, v, params).scale(qint(d))
                    if central:
                        rhs = rhs + v.scale(central)
                    rep.record({"k": k, "x": x, "y": y, "state": str(lam)}, lhs, rhs)
                    if y != x:
                        lhs2 = yx - xy
                        rhs2 = rhs.scale(-1) if not rhs.is_zero() else rhs
                        rep.record({"k": k, "x": y, "y": x, "state": str(lam)}, lhs2, rhs2)
    return rep.finish()


def mouse_suite(nmax=4, kn_range=(1, 2, 3)):
    """Eigenvalues of the vertical generators on the vacuum vector."""
    rep = SuiteReport("mouse", {"nmax": nmax, "kn_range": list(kn_range)})
    vac = Sym2Element.vacuum()
    for n in range(-nmax, nmax + 1):
        if n == 0:
            continue
        got = fock.act_general((0, n), vac, fock.FockParams(0))
        want = vac.scale((tpow(n) - tpow(-n)) / qint(n))
        rep.record({"k": 0, "n": n}, got, want)
    for k in kn_range:
        for n in kn_range:
            got = fock.act_general((0, n), vac, fock.FockParams(k))
            rep.record({"k": k, "n": n}, got, vac.scale(tpow(n) / qint(n)))
            got = fock.act_general((0, -n), vac, fock.FockParams(-k))
            rep.record({"k": -k, "n": -n}, got, vac.scale(tpow(-n) / qint(-n)))
    return rep.finish()


# ---------------------------------------------------------------------------
# Hecke suites
# ---------------------------------------------------------------------------

def _default_l1():
    return hecke.CyclotomicPoly([RF_ONE, tpow(2)])


def _default_l2():
    return hecke.CyclotomicPoly([RF_ONE, -(RF_ONE + tpow(2)), tpow(2)])


def hecke_suite(seed=0, triples=25):
    """Dimensions, associativity, braid relation, and basis closure."""
    rep = SuiteReport("hecke", {"seed": seed, "triples": triples, "cases": "n<=3, l<=2"})
    rng = random.Random(seed)
    f1, f2 = _default_l1(), _default_l2()
    for f in (f1, f2):
        for n in range(0, 4):
            alg = hecke.HeckeAlgebra.get(n, f)
            rep.record({"check": "dimension", "n": n, "l": f.l},
                       len(alg.basis), hecke.dimension(n, f))
    # braid relation in rank 3
    for f in (f1, f2):
        alg = hecke.HeckeAlgebra.get(3, f)
        e = [0, 0, 0]
        t1 = hecke.HeckeElement.from_word(alg, tuple(e), (2, 1, 3))
        t2 = hecke.HeckeElement.from_word(alg, tuple(e), (1, 3, 2))
        rep.record({"check": "braid", "l": f.l}, t1 * t2 * t1, t2 * t1 * t2)
    # associativity on random basis triples
    for f, n in [(f2, 1), (f1, 2), (f2, 2)]:
        alg = hecke.HeckeAlgebra.get(n, f)
        B = alg.basis
        for _ in range(triples):
            a = hecke.HeckeElement(alg, {B[rng.randrange(len(B))]: RF_ONE})
            b = hecke.HeckeElement(alg, {B[rng.randrange(len(B))]: RF_ONE})
            c = hecke.HeckeElement(alg, {B[rng.randrange(len(B))]: RF_ONE})
            rep.record(
                {"check": "associativity", "n": n, "l": f.l,
                 "a": a.to_json(), "b": b.to_json(), "c": c.to_json()},
                (a * b) * c, a * (b * c))
    # quadratic relation
    for f, n in [(f1, 2), (f2, 2)]:
        alg = hecke.HeckeAlgebra.get(n, f)
        tau = hecke.HeckeElement.from_word(alg, (0,) * n, (2, 1))
        one = hecke.HeckeElement.unit(alg)
        rep.record({"check": "quadratic", "n": n, "l": f.l},
                   tau * tau, tau.scale(hecke.Z) + one)
    return rep.finish()


def hoops_suite(f=None, rmax=None, rs_bound=2, rank_bound=2):
    """Tower-module checks for one cyclotomic polynomial (default l=1)."""
    if f is None:
        f = _default_l1()
    if rmax is None:
        rmax = 3 if f.l == 1 else 2
    rep = SuiteReport("hoops", {"f": str(f), "rmax": rmax, "rs_bound": rs_bound,
                                "rank_bound": rank_bound})
    checked, failures, info = hecke.verify_hoops(f, rmax=rmax, rs_bound=rs_bound,
                                                 rank_bound=rank_bound)
    for fl in failures:
        rep.failures.append({"inputs": {"check": fl["check"], **fl["inputs"]},
                             "lhs": fl["lhs"], "rhs": fl["rhs"]})
    rep.checked = checked
    rep.info = info
    return rep.finish()


SUITES = {
    "jacobi": jacobi_suite,
    "biangular": biangular_suite,
    "fock-relations": fock_relations_suite,
    "mouse": mouse_suite,
    "hecke": hecke_suite,
    "hoops": hoops_suite,
    "confluence": confluence_suite,
}
