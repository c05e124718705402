"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 failed check.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .constructions import build_constructions, theorem_suite
from .decomp import DEFAULT_BUDGET, BudgetExceeded, complete_decompositions
from .expr import parse_function
from .galois import EnumerationTooLarge, fixed_field, fixing_group, joint_generator
from .gf import FieldCtx, is_prime, make_field, prime_power
from .moebius import (GroupTooLarge, Moebius, chain_length_counts, closure,
                      enumerate_gamma, enumerate_subgroups)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_FAILED = 0, 1, 2, 3


class InputError(ValueError):
    pass


def field_from_args(args) -> FieldCtx:
    if args.q is None and args.p is None:
        raise InputError("a field is required: --q N or --p P [--m M]")
    if args.q is not None:
        try:
            p, m = prime_power(args.q)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if args.p is not None and args.p != p:
            raise InputError(f"--p {args.p} conflicts with --q {args.q}")
        if args.m is not None and args.m != m:
            raise InputError(f"--m {args.m} conflicts with --q {args.q}")
    else:
        p, m = args.p, args.m or 1
        if not is_prime(p):
            raise InputError(f"--p {p} is not prime")
    try:
        return make_field(p, m, args.modulus)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _field_json(ctx):
    return {"p": ctx.p, "m": ctx.m, "modulus": ctx.modulus_str()}


def _parse(text, ctx):
    try:
        return parse_function(text, ctx)
    except ValueError as exc:
        raise InputError(f"cannot parse {text!r}: {exc}") from None


def _nonconstant(f, text):
    if f.is_constant():
        raise InputError(f"{text!r} is constant")
    return f


def cmd_decompose(args, ctx):
    f = _nonconstant(_parse(args.function, ctx), args.function)
    if f.degree == 1:
        raise InputError(f"{f} is a unit; it has no complete decomposition")
    decs = complete_decompositions(f, args.budget)
    lines = [str(d) for d in decs]
    return {"input": str(f), "result": [[str(c) for c in d.components] for d in decs]}, lines


def cmd_group(args, ctx):
    f = _nonconstant(_parse(args.function, ctx), args.function)
    G = fixing_group(f)
    elems = G.to_strings()
    return ({"input": str(f), "result": {"order": G.order, "elements": elems}},
            [f"order: {G.order}"] + elems)


def cmd_fixfield(args, ctx):
    gens = []
    for text in args.generators:
        u = _parse(text, ctx)
        if u.degree != 1:
            raise InputError(f"{text!r} is not a unit (degree {u.degree})")
        gens.append(Moebius.from_ratfunc(u))
    H = closure(ctx, gens)
    ff = fixed_field(H)
    return ({"input": [str(g) for g in gens],
             "result": {"group_order": H.order, "generator": str(ff.generator),
                        "symmetric_index": ff.witness}},
            [str(ff.generator)])


def _chain_summary(counts: Counter) -> str:
    if len(counts) == 1:
        (n,) = counts
        return f"all maximal chains: {n} groups"
    parts = ", ".join(f"{n} groups x{k}" for n, k in sorted(counts.items()))
    return f"maximal chains: {parts}"


def cmd_chains(args, ctx):
    which = "full" if args.full else "affine"
    L = enumerate_subgroups(enumerate_gamma(ctx, which))
    counts = chain_length_counts(L)
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            json.dump(L.to_json(), fh, indent=1, ensure_ascii=False)
            fh.write("\n")
    result = {"group": "Gamma" if args.full else "Gamma_0", "subgroups": len(L),
              "chain_lengths": {str(k): v for k, v in sorted(counts.items())}}
    return {"input": which, "result": result}, [_chain_summary(counts)]


def cmd_construct(args, ctx):
    cs = build_constructions(ctx)
    res = {"P_q": str(cs.P_q), "h_q": str(cs.h_q), "f_q": str(cs.f_q)}
    return {"input": ctx.q, "result": res}, [f"{k} = {v}" for k, v in res.items()]


def cmd_joint(args, ctx):
    f = _nonconstant(_parse(args.f, ctx), args.f)
    g = _nonconstant(_parse(args.g, ctx), args.g)
    j = joint_generator(f, g)
    return {"input": [str(f), str(g)], "result": str(j)}, [str(j)]


def cmd_verify(args, ctx):
    results = theorem_suite(ctx)
    rows = [r.as_dict() for r in results]
    lines = [f"{r.status:16s} {r.check}" for r in results]
    failed = any(r.status == "fail" for r in results)
    budget = any(r.status == "budget_exceeded" for r in results)
    code = EXIT_FAILED if failed else (EXIT_BUDGET if budget else EXIT_OK)
    return {"input": ctx.q, "result": rows}, lines, code


COMMANDS = {
    "decompose": cmd_decompose,
    "group": cmd_group,
    "fixfield": cmd_fixfield,
    "chains": cmd_chains,
    "construct": cmd_construct,
    "joint": cmd_joint,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="field size (a prime power)")
    common.add_argument("--p", type=int, help="characteristic")
    common.add_argument("--m", type=int, help="extension degree")
    common.add_argument("--modulus", help='irreducible modulus in t, e.g. "t^2+t+1"')
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = argparse.ArgumentParser(
        prog="fqdecomp",
        description="Decomposition of rational functions over finite fields.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("decompose", parents=[common], help="all complete decompositions")
    p.add_argument("function")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="candidate cap per component search")
    p = sub.add_parser("group", parents=[common], help="fixing group G(f)")
    p.add_argument("function")
    p = sub.add_parser("fixfield", parents=[common],
                       help="generator of the fixed field of the group generated by units")
    p.add_argument("generators", nargs="+")
    p = sub.add_parser("chains", parents=[common], help="maximal subgroup chains of Gamma_0")
    p.add_argument("--full", action="store_true", help="use all of Gamma instead")
    p.add_argument("--export", metavar="FILE", help="write the lattice as JSON")
    sub.add_parser("construct", parents=[common], help="expand P_q, h_q, f_q")
    p = sub.add_parser("joint", parents=[common], help="generator of F_q(f, g)")
    p.add_argument("f")
    p.add_argument("g")
    sub.add_parser("verify", parents=[common], help="run the theorem checks for q")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that code means "budget" here
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    out = sys.stdout
    try:
        ctx = field_from_args(args)
        ret = COMMANDS[args.verb](args, ctx)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceeded, EnumerationTooLarge, GroupTooLarge) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload, lines = ret[0], ret[1]
    code = ret[2] if len(ret) > 2 else EXIT_OK
    if args.json:
        doc = {"field": _field_json(ctx), "command": args.verb}
        doc.update(payload)
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
    if code == EXIT_FAILED:
        print("error: at least one check failed", file=sys.stderr)
    elif code == EXIT_BUDGET:
        print("note: some checks exceeded their budget", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
