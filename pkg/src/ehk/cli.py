"""Batch command-line front end.

Commands print human-readable canonical algebra syntax by default and JSON
behind --json; all output is deterministic given identical flags and seed.
The exit code is 0 exactly when no verification failures occurred.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import eha, fock, hecke, lattice, suites
from .qfield import RatFunc, qint
from .symfunc import GenPartition, Sym2Element


def _out(args, human, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_bracket(args):
    x = lattice.parse_point(args.x)
    y = lattice.parse_point(args.y)
    e = eha.lie_bracket(x, y, args.k)
    _out(args, str(e), e.to_json())
    return 0


def cmd_normalize(args):
    word = lattice.parse_word(args.word)
    e = eha.pbw_normalize(word, args.k, args.strategy)
    _out(args, str(e), e.to_json())
    return 0


def cmd_express(args):
    x = lattice.parse_point(args.x)
    expr = eha.express_w(x[0], x[1])
    _out(args, str(expr), expr.to_json())
    return 0


def cmd_fock(args):
    word = lattice.parse_word(args.word)
    state = Sym2Element.basis(GenPartition.parse(args.state))
    out = fock.act_word(word, state, fock.FockParams(args.k))
    _out(args, str(out), out.to_json())
    return 0


def cmd_tensor_fock(args):
    x = lattice.parse_point(args.x)
    tv = fock.Sym2Tensor.pure(
        Sym2Element.basis(GenPartition.parse(args.state1)),
        Sym2Element.basis(GenPartition.parse(args.state2)),
    )
    out = fock.tensor_act(x, tv, fock.FockParams(args.k1), fock.FockParams(args.k2))
    payload = [
        {"left": str(lam), "right": str(mu), "coeff": str(c)}
        for (lam, mu), c in out.sorted_terms()
    ]
    _out(args, str(out), payload)
    return 0


def cmd_hecke_dim(args):
    f = hecke.CyclotomicPoly.parse(args.f)
    d = hecke.dimension(args.n, f)
    _out(args, str(d), {"n": args.n, "l": f.l, "dimension": d})
    return 0


def cmd_hecke_mul(args):
    f = hecke.CyclotomicPoly.parse(args.f)
    alg = hecke.HeckeAlgebra.get(args.n, f)
    a = hecke.HeckeElement.from_json(alg, args.a)
    b = hecke.HeckeElement.from_json(alg, args.b)
    out = a * b
    _out(args, str(out), out.to_json())
    return 0


def cmd_cocenter(args):
    f = hecke.CyclotomicPoly.parse(args.f)
    co, dim = hecke.cocenter(args.n, f)
    words = []
    for col in co.quotient_indices:
        exps, perm = co.algebra.basis[col]
        words.append({"exponents": list(exps), "perm": list(perm)})
    _out(args, f"dimension {dim}", {"n": args.n, "dimension": dim, "basis": words})
    return 0


def cmd_vf_act(args):
    f = hecke.CyclotomicPoly.parse(args.f)
    word = lattice.parse_word(args.word)
    v = hecke.VfVector.vacuum(f).act_word(word)
    _out(args, str(v), v.to_json())
    return 0


def cmd_hoop_scalars(args):
    f = hecke.CyclotomicPoly.parse(args.f)
    up, down = hecke.hoop_scalars(f, args.rmax)
    lines = []
    payload = {"up": [], "down": []}
    for r in range(1, args.rmax + 1):
        lines.append(f"w[{r},0] v_f = {up[r - 1]}")
        lines.append(f"w[{-r},0] v_f = {down[r - 1]}")
        payload["up"].append(str(up[r - 1]))
        payload["down"].append(str(down[r - 1]))
    _out(args, "\n".join(lines), payload)
    return 0


def cmd_verify(args):
    name = args.suite
    if name not in suites.SUITES:
        print(f"unknown suite {name!r}; choose from {sorted(suites.SUITES)}", file=sys.stderr)
        return 2
    kwargs = {}
    if name == "jacobi":
        kwargs["bound"] = args.bound if args.bound is not None else 3
    elif name == "fock-relations":
        kwargs["bound"] = args.bound if args.bound is not None else 2
    elif name in ("hecke", "confluence"):
        kwargs["seed"] = args.seed
    elif name == "hoops":
        if args.f:
            kwargs["f"] = hecke.CyclotomicPoly.parse(args.f)
        if args.rmax is not None:
            kwargs["rmax"] = args.rmax
    rep = suites.SUITES[name](**kwargs)
    if args.json:
        print(json.dumps(rep.to_json(), sort_keys=True))
    else:
        print(rep.summary())
        for fl in rep.failures:
            print(f"  FAIL {json.dumps(fl['inputs'], sort_keys=True)}")
            print(f"    lhs: {fl['lhs']}")
            print(f"    rhs: {fl['rhs']}")
        if rep.info:
            print(f"  info: {json.dumps(rep.info, sort_keys=True)}")
    return 0 if rep.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ehk",
        description="Exact computations in central extensions of the elliptic "
                    "Hall algebra, its Fock modules, and cocenters of "
                    "cyclotomic Hecke algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("bracket", cmd_bracket, help="Lie bracket of two generators")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--x", required=True, metavar="r,n")
    p.add_argument("--y", required=True, metavar="r,n")

    p = add("normalize", cmd_normalize, help="PBW normal form of a word")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--word", required=True, metavar='"r,n r,n ..."')
    p.add_argument("--strategy", choices=["leftmost", "rightmost"], default="leftmost")

    p = add("express", cmd_express, help="bracket expression through level +-1")
    p.add_argument("--x", required=True, metavar="r,n")

    p = add("fock", cmd_fock, help="act on a Fock basis vector")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--word", required=True, metavar='"r,n r,n ..."')
    p.add_argument("--state", default="[]", metavar="[-1|2,3]")

    p = add("tensor-fock", cmd_tensor_fock, help="act on a tensor of Fock vectors")
    p.add_argument("--k1", type=int, default=0)
    p.add_argument("--k2", type=int, default=0)
    p.add_argument("--x", required=True, metavar="r,n")
    p.add_argument("--state1", default="[]")
    p.add_argument("--state2", default="[]")

    p = add("hecke-dim", cmd_hecke_dim, help="dimension of the cyclotomic quotient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", required=True, metavar='"1,...,t^2"')

    p = add("hecke-mul", cmd_hecke_mul, help="product of two elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--a", required=True, help="JSON element")
    p.add_argument("--b", required=True, help="JSON element")

    p = add("cocenter", cmd_cocenter, help="cocenter dimension and basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--f", required=True)

    p = add("vf-act", cmd_vf_act, help="act on the cyclic tower vector")
    p.add_argument("--f", required=True)
    p.add_argument("--word", required=True, metavar='"r,n ..." with n in {-1,0,1}')

    p = add("hoop-scalars", cmd_hoop_scalars, help="level-0 scalars on the cyclic vector")
    p.add_argument("--f", required=True)
    p.add_argument("--rmax", type=int, default=3)

    p = add("verify", cmd_verify, help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--f", default=None)
    p.add_argument("--rmax", type=int, default=None)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, hecke.SizeCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
