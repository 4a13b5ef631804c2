"""Command-line interface: one verb per invocation, JSON on stdout.

Exit codes: 0 success; 1 the artifact is invalid/infeasible or a
counterexample was found; 2 usage error; 3 budget exceeded.  Identical
inputs produce byte-identical outputs.  ICX_THREADS caps the numeric
backend's thread pool (results are deterministic regardless).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

if "ICX_THREADS" in os.environ:  # must happen before numpy is first imported
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(var, os.environ["ICX_THREADS"])

from . import alignment, bounds, model, oracle, scheme as schemes, symmetric, unicast
from .errors import BudgetExceeded, IcxError
from .galois import BinaryField, PrimeField

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _parse_field(text):
    kind, _, value = text.partition("=")
    if kind == "p":
        return PrimeField(int(value))
    if kind == "gf2m":
        return BinaryField(int(value))
    raise argparse.ArgumentTypeError(f"field must be p=<prime> or gf2m=<m>, got {text!r}")


def _emit(obj, out_path):
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_instance(path):
    return model.load_instance(path)


def _build_parser():
    top = argparse.ArgumentParser(prog="icx", description=__doc__)
    sub = top.add_subparsers(dest="verb", required=True)

    def add_out(p):
        p.add_argument("--out", help="write JSON here instead of stdout")

    p = sub.add_parser("gen", help="generate a symmetric family instance")
    p.add_argument("--family", required=True, choices=["antidotes", "interference", "xnetwork"])
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--U", type=int, default=0)
    p.add_argument("--D", type=int, default=0)
    p.add_argument("--L", type=int, default=1)
    add_out(p)

    p = sub.add_parser("validate", help="check instance file invariants")
    p.add_argument("instance")
    add_out(p)

    p = sub.add_parser("check-feasibility", help="decide rate 1/(L+1) feasibility")
    p.add_argument("instance")
    p.add_argument("--L", type=int, required=True)
    add_out(p)

    p = sub.add_parser("scheme", help="construct a scheme (family or alignment based)")
    p.add_argument("--family", choices=["antidotes", "interference", "xnetwork"])
    p.add_argument("--K", type=int)
    p.add_argument("--U", type=int, default=0)
    p.add_argument("--D", type=int, default=0)
    p.add_argument("--L", type=int, default=1)
    p.add_argument("--instance", help="build for an instance file instead of a family")
    p.add_argument(
        "--construction",
        choices=["scalar", "spread"],
        default="scalar",
        help="with --instance: scalar (n=L+1, prime field) or spread (GF(2), L=1)",
    )
    p.add_argument("--verify", action="store_true")
    p.add_argument("--simulate", action="store_true")
    p.add_argument("--budget", type=int, default=schemes.DEFAULT_SIMULATION_BUDGET)
    p.add_argument(
        "--sample",
        type=int,
        metavar="N",
        help="when the tuple space exceeds the budget, check N seeded random tuples instead",
    )
    add_out(p)

    p = sub.add_parser("verify", help="verify a scheme file against an instance file")
    p.add_argument("instance")
    p.add_argument("scheme")
    p.add_argument("--mode", choices=["auto", "rank", "decoder"], default="auto")
    add_out(p)

    p = sub.add_parser("simulate", help="exhaustive zero-error simulation")
    p.add_argument("instance")
    p.add_argument("scheme")
    p.add_argument("--budget", type=int, default=schemes.DEFAULT_SIMULATION_BUDGET)
    p.add_argument(
        "--sample",
        type=int,
        metavar="N",
        help="when the tuple space exceeds the budget, check N seeded random tuples instead",
    )
    add_out(p)

    p = sub.add_parser("transform", help="groupcast -> equivalent multiple unicast")
    p.add_argument("instance")
    p.add_argument("--L", type=int, required=True)
    p.add_argument(
        "--no-aux",
        action="store_true",
        help="drop auxiliary messages/destinations (experimental, no equivalence claim)",
    )
    add_out(p)

    p = sub.add_parser("bounds", help="emit outer-bound certificates")
    p.add_argument("instance")
    p.add_argument("--simple", action="store_true")
    p.add_argument("--chain", action="store_true")
    p.add_argument("--family", action="store_true")
    p.add_argument("--L", type=int, help="demand size for chain bounds")
    p.add_argument("--maxN", type=int, default=bounds.DEFAULT_CHAIN_MAX_N)
    p.add_argument("--budget", type=int, default=bounds.DEFAULT_CHAIN_BUDGET)
    add_out(p)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("instance")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--minrank", action="store_true")
    g.add_argument("--scalar-search", action="store_true")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_ORACLE_BUDGET)
    add_out(p)

    p = sub.add_parser("example", help="built-in worked examples 1..3")
    p.add_argument("id", type=int, choices=[1, 2, 3])
    p.add_argument("--field", type=_parse_field, default=None)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--simulate", action="store_true")
    p.add_argument("--budget", type=int, default=schemes.DEFAULT_SIMULATION_BUDGET)
    add_out(p)

    return top


def _cmd_gen(args):
    if args.family == "antidotes":
        inst = model.gen_neighboring_antidotes(args.K, args.U, args.D)
    elif args.family == "interference":
        inst = model.gen_neighboring_interference(args.K, args.U, args.D)
    else:
        inst = model.gen_x_network(args.K, args.L)
    return model.instance_to_json(inst), EXIT_OK


def _cmd_validate(args):
    with open(args.instance, "r", encoding="utf-8") as fh:
        inst = model.parse_instance(fh.read(), check=False)
    problems = model.validate(inst)
    out = {"valid": not problems, "violations": problems, "messages": inst.num_messages}
    return out, EXIT_OK if not problems else EXIT_NEGATIVE


def _cmd_check_feasibility(args):
    inst = _load_instance(args.instance)
    verdict = alignment.check_feasibility(inst, args.L)
    return verdict.to_json(), EXIT_OK if verdict.feasible else EXIT_NEGATIVE


def _family_scheme(args):
    if args.family == "antidotes":
        inst = model.gen_neighboring_antidotes(args.K, args.U, args.D)
        built = symmetric.build_antidote_scheme(args.K, args.U, args.D)
    elif args.family == "interference":
        inst = model.gen_neighboring_interference(args.K, args.U, args.D)
        built = symmetric.build_interference_scheme(args.K, args.U, args.D)
    else:
        inst = model.gen_x_network(args.K, args.L)
        built = symmetric.build_x_scheme(args.K, args.L)
    return inst, built


def _cmd_scheme(args):
    if bool(args.family) == bool(args.instance):
        raise IcxError("pass exactly one of --family or --instance")
    if args.family:
        if args.K is None:
            raise IcxError("--family needs --K")
        inst, built = _family_scheme(args)
    else:
        inst = _load_instance(args.instance)
        if args.construction == "scalar":
            built = alignment.build_scalar_scheme(inst, args.L)
        else:
            built = alignment.build_rate_half_vector_scheme(inst, args.L)
    out = {"scheme": schemes.scheme_to_json(built)}
    code = EXIT_OK
    if args.verify:
        target = inst if args.family else model.normalize(inst, args.L)
        report = schemes.verify(target, built)
        out["verification"] = report.to_json()
        if not report.valid:
            code = EXIT_NEGATIVE
    if args.simulate:
        target = inst if args.family else model.normalize(inst, args.L)
        try:
            result = schemes.simulate_exhaustive(target, built, budget=args.budget)
            out["simulation"] = result.to_json()
            out["simulation"]["mode"] = "exhaustive"
        except BudgetExceeded as exc:
            if args.sample is None:
                out["simulation"] = {"error": str(exc)}
                return out, EXIT_BUDGET
            result = schemes.simulate_sampled(target, built, args.sample)
            out["simulation"] = result.to_json()
            out["simulation"]["mode"] = "sampled"
        if not result.ok:
            code = EXIT_NEGATIVE
    return out, code


def _cmd_verify(args):
    inst = _load_instance(args.instance)
    sch = schemes.load_scheme(args.scheme)
    report = schemes.verify(inst, sch, mode=args.mode)
    return report.to_json(), EXIT_OK if report.valid else EXIT_NEGATIVE


def _cmd_simulate(args):
    inst = _load_instance(args.instance)
    sch = schemes.load_scheme(args.scheme)
    try:
        result = schemes.simulate_exhaustive(inst, sch, budget=args.budget)
        mode = "exhaustive"
    except BudgetExceeded:
        if args.sample is None:
            raise
        result = schemes.simulate_sampled(inst, sch, args.sample)
        mode = "sampled"
    out = result.to_json()
    out["mode"] = mode
    return out, EXIT_OK if result.ok else EXIT_NEGATIVE


def _cmd_transform(args):
    inst = _load_instance(args.instance)
    umap = unicast.to_unicast(inst, args.L, with_auxiliaries=not args.no_aux)
    return unicast.unicast_transform_report(umap), EXIT_OK


def _cmd_bounds(args):
    inst = _load_instance(args.instance)
    want_all = not (args.simple or args.chain or args.family)
    out = {}
    code = EXIT_OK
    if args.simple or want_all:
        out["simple"] = [c.to_json() for c in bounds.simple_bounds(inst)]
    if args.chain or want_all:
        L = args.L
        if L is None:
            sizes = inst.demand_sizes()
            if len(sizes) == 1:
                L = sizes.pop()
        if L is not None:
            out["chain"] = [
                c.to_json() for c in bounds.chain_bounds(inst, L, maxN=args.maxN, budget=args.budget)
            ]
        elif args.chain:
            raise IcxError("chain bounds need --L for non-uniform instances")
    if args.family or (want_all and inst.family is not None and inst.family.kind != "custom"):
        value, cert = bounds.symmetric_capacity(inst)
        out["family"] = {
            "capacity_per_message": f"{value.numerator}/{value.denominator}",
            "certificate": cert.to_json(),
        }
    return out, code


def _cmd_oracle(args):
    inst = _load_instance(args.instance)
    if args.minrank:
        res = oracle.minrank_gf2(inst, budget=args.budget)
    else:
        res = oracle.best_scalar_scheme(inst, args.q, args.n_max, budget=args.budget)
    code = EXIT_OK if res.value is not None else EXIT_NEGATIVE
    return res.to_json(), code


def _cmd_example(args):
    ex = symmetric.builtin_example(args.id, args.field)
    rate = ex.claimed_rate
    out = {
        "id": ex.id,
        "claimed_rate": f"{rate.numerator}/{rate.denominator}",
        "instance": model.instance_to_json(ex.instance),
        "scheme": schemes.scheme_to_json(ex.scheme),
    }
    code = EXIT_OK
    if args.verify:
        report = schemes.verify(ex.instance, ex.scheme)
        out["verification"] = report.to_json()
        if not report.valid:
            code = EXIT_NEGATIVE
    if args.simulate:
        result = schemes.simulate_exhaustive(ex.instance, ex.scheme, budget=args.budget)
        out["simulation"] = result.to_json()
        if not result.ok:
            code = EXIT_NEGATIVE
    return out, code


_HANDLERS = {
    "gen": _cmd_gen,
    "validate": _cmd_validate,
    "check-feasibility": _cmd_check_feasibility,
    "scheme": _cmd_scheme,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
    "transform": _cmd_transform,
    "bounds": _cmd_bounds,
    "oracle": _cmd_oracle,
    "example": _cmd_example,
}


def run(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        obj, code = _HANDLERS[args.verb](args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except IcxError as exc:
        # validation failures and infeasibility carry a verdict, not a crash
        from .errors import Infeasible, ParseError

        if isinstance(exc, Infeasible):
            _emit({"feasible": False, "witness": list(exc.witness)}, getattr(args, "out", None))
            return EXIT_NEGATIVE
        if isinstance(exc, ParseError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(obj, getattr(args, "out", None))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
