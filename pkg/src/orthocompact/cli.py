"""Command line front end.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import charring as C
from . import compactify as K
from . import lattice as L
from . import orders as O
from . import posets as P
from . import triviality as T
from . import verify as V
from .errors import OrthoError
from .textio import ParseError, fmt_alpha, fmt_weight, parse_index_list, parse_rootvec, parse_weight

SCHEMA = "orthocompact/1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _emit(out, args, payload: dict, text: str):
    if getattr(args, "format", "text") == "json":
        d = {"schema": SCHEMA, "r": args.r}
        d.update(payload)
        out.write(json.dumps(d) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _alpha_arg(text: str, r: int) -> tuple:
    """Root-lattice vector given as ``a:[...]`` (or a weight ``w:[...]``)."""
    if text.strip().startswith("w:"):
        return L.alpha_ints(L.omega_to_alpha(L.RankedContext(r), parse_weight(text)), r)
    return L.alpha_ints(parse_rootvec(text), r)


def _load_subset(path: str, ctx) -> K.SimpleSubset:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read simple subset from {path}: {e}") from None
    if not isinstance(data, dict) or "weights" not in data:
        raise ParseError(f"{path}: expected an object with 'weights'")
    data.setdefault("r", ctx.r)
    if int(data["r"]) != ctx.r:
        raise OrthoError(f"{path} has rank {data['r']}, expected {ctx.r}")
    return K.SimpleSubset.from_dict(data)


def cmd_trivial(ctx, args, out):
    lam, mu = parse_weight(args.lam), parse_weight(args.mu)
    tr = T.trivial_trace(ctx, lam, mu)
    text = (f"{str(tr['trivial']).lower()}\n"
            f"a = {fmt_alpha(tr['a'])}  q(lambda) = {tr['q_lambda']}  q(mu) = {tr['q_mu']}")
    _emit(out, args, tr, text)
    return 0


def cmd_omega(ctx, args, out):
    lam = parse_weight(args.lam)
    theta = _alpha_arg(args.theta, ctx.r)
    res = T.in_neg_omega(ctx, lam, theta)
    _emit(out, args, {"member": res, "l": T.l_index(ctx, theta)}, str(res).lower())
    return 0


def cmd_leq(ctx, args, out):
    lam, nu, mu = parse_weight(args.lam), parse_weight(args.nu), parse_weight(args.mu)
    wit = O.lambda_leq_witness(ctx, lam, nu, mu)
    roots = [list(v) for v in wit] if wit is not None else None
    text = str(wit is not None).lower()
    if wit:
        text += "\n" + " + ".join(fmt_alpha(v) for v in wit)
    _emit(out, args, {"leq": wit is not None, "witness": roots}, text)
    return 0


def cmd_xi(ctx, args, out):
    lam = parse_weight(args.lam)
    tau = _alpha_arg(args.tau, ctx.r)
    mem = O.xi_membership(ctx, lam, tau)
    payload = {"member": mem}
    text = str(mem).lower()
    if args.decompose and mem:
        roots = O.xi_decompose(ctx, lam, tau)
        payload["roots"] = [list(rt.vec) for rt in roots]
        text += "\n" + "\n".join(f"{fmt_alpha(rt.vec)} {rt.length}" for rt in roots)
    _emit(out, args, payload, text)
    return 0


def _subset_text(s: K.SimpleSubset) -> str:
    return "{" + ", ".join(fmt_weight(w) for w in s.weights) + "}"


def cmd_subset(ctx, args, out):
    pi = _load_subset(args.pi, ctx)
    if args.command == "reduce":
        red = K.reduce(ctx, pi)
        _emit(out, args, {"reduced": red.to_dict()}, _subset_text(red))
        return 0
    if args.command == "normal":
        res = K.is_normal(ctx, pi)
        lb = sorted(T.little_brothers(ctx, pi.max))
        text = str(res).lower() + ("" if not lb else "\nlittle brother " + fmt_weight(lb[0]))
        _emit(out, args, {"normal": res, "little_brothers": [list(w) for w in lb]}, text)
        return 0
    if args.pi2 is None:
        raise ParseError(f"{args.command} needs --pi2")
    pi2 = _load_subset(args.pi2, ctx)
    if args.command == "morphism":
        res = K.morphism_exists(ctx, pi, pi2)
        _emit(out, args, {"morphism": res}, str(res).lower())
    else:
        res = K.isomorphic(ctx, pi, pi2)
        _emit(out, args, {"isomorphic": res}, str(res).lower())
    return 0


def cmd_poset(ctx, args, out):
    I = parse_index_list(args.support)
    poset = P.T2_poset(ctx, I, args.bound)
    fmt = args.format
    if fmt == "json":
        d = {"schema": SCHEMA}
        d.update(poset.to_dict())
        out.write(json.dumps(d) + "\n")
    else:
        out.write(P.render(poset, fmt))
    return 0


def cmd_tensor(ctx, args, out):
    lam, mu = parse_weight(args.lam), parse_weight(args.mu)
    t = C.tensor(ctx, lam, mu)
    lines = [f"{fmt_weight(w)} : {m}" for w, m in t.items()]
    payload = {"summands": [{"weight": list(w), "mult": m} for w, m in t.items()]}
    _emit(out, args, payload, "\n".join(lines))
    return 0


def cmd_oracle_trivial(ctx, args, out):
    lam, mu = parse_weight(args.lam), parse_weight(args.mu)
    w = C.oracle_trivial(ctx, lam, mu, args.nmax)
    _emit(out, args, {"found": w.found, "n": w.n, "searched": w.searched}, str(w))
    return 0


def cmd_verify(ctx, args, out):
    res = V.SUITES[args.suite](args.r, args.bound)
    payload = {"suite": args.suite, "checked": res.checked, "mismatches": res.mismatches}
    text = res.summary()
    if res.mismatches:
        text += "\n" + "\n".join(json.dumps(m, default=list) for m in res.mismatches[:20])
    if args.format == "json":
        out.write(json.dumps({"schema": SCHEMA, "r": args.r, **payload}, default=list) + "\n")
    else:
        out.write(text + "\n")
    return 0 if res.ok else 3


COMMANDS = {
    "trivial": cmd_trivial,
    "omega": cmd_omega,
    "leq": cmd_leq,
    "xi": cmd_xi,
    "reduce": cmd_subset,
    "normal": cmd_subset,
    "morphism": cmd_subset,
    "iso": cmd_subset,
    "poset": cmd_poset,
    "tensor": cmd_tensor,
    "oracle-trivial": cmd_oracle_trivial,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orthocompact", description="Simple linear compactifications of SO(2r+1).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, *opts, formats=("text", "json")):
        sp = sub.add_parser(name)
        sp.add_argument("--r", type=int, required=True)
        for o in opts:
            dest = {"--lambda": "lam"}.get(o, None)
            kw = {"dest": dest} if dest else {}
            sp.add_argument(o, required=True, **kw)
        sp.add_argument("--format", choices=formats, default="text")
        return sp

    add("trivial", "--lambda", "--mu")
    add("omega", "--lambda", "--theta")
    add("leq", "--lambda", "--nu", "--mu")
    add("xi", "--lambda", "--tau").add_argument("--decompose", action="store_true")
    for name in ("reduce", "normal", "morphism", "iso"):
        sp = add(name, "--pi")
        sp.add_argument("--pi2")
    sp = add("poset", "--support", formats=("text", "dot", "json"))
    sp.add_argument("--bound", type=int, required=True)
    add("tensor", "--lambda", "--mu")
    add("oracle-trivial", "--lambda", "--mu").add_argument("--nmax", type=int, default=C.DEFAULT_N_MAX)
    sp = sub.add_parser("verify")
    sp.add_argument("--suite", choices=sorted(V.SUITES), required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        ctx = L.RankedContext(args.r)
        return COMMANDS[args.command](ctx, args, out)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return 2
    except OrthoError as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
