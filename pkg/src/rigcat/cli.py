"""Command line: structural permutations, verification suites, homomorphisms."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import finperm as fp
from . import skelrig as sk
from .canhom import (
    DescriptorError,
    canonical_hom,
    check_transformation,
    hom_data,
    hom_to_dict,
    load_hom,
    monoidality_from_tau,
    tau_transformation,
    unique_iso,
    verify_hom_axioms,
)
from .canhom.hom import plus_indices
from .rigiface import instance_by_name, target_names
from .suites import run_suite

SCHEMA = 1

_STRUCTURAL = {
    "add-comm": (("m", "n"), sk.add_commutator),
    "mul-comm": (("m", "n"), sk.mult_commutator),
    "rdist": (("m", "n", "p"), sk.right_distributor),
}


def _nat(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a natural number") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigcat", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    for kind, (names, _) in _STRUCTURAL.items():
        sp = sub.add_parser(kind, help=f"print the {kind} permutation in cycle notation")
        for n in names:
            sp.add_argument(n, type=_nat)
        sp.add_argument("--order", action="store_true", help="also print the order")
    sp = sub.add_parser("sigma", help="σ_{i,p}, or the product σ_{2,p}...σ_{p,p} when only p is given")
    sp.add_argument("sizes", type=_nat, nargs="+", metavar="N")
    sp.add_argument("--order", action="store_true")

    def common(sp):
        sp.add_argument("--target", default="fset", choices=target_names())
        sp.add_argument("--max", type=_nat, default=None, help="size bound (4 for fset, 3 for mat)")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    vp = sub.add_parser("verify", help="run a verification suite")
    vp.add_argument("suite", choices=("laplaza", "oracle", "fcan", "hom", "unique", "all"))
    common(vp)
    vp.add_argument("--seed", type=_nat, default=0)
    vp.add_argument("--samples", type=_nat, default=200)
    vp.add_argument("--homs", type=_nat, default=20, help="random homomorphisms for the hom suite")

    hp = sub.add_parser("hom", help="build, inspect or compare homomorphism descriptors")
    hp.add_argument("action", choices=("build", "inspect", "compare"))
    hp.add_argument("descriptors", nargs="+", help="JSON file, @fcan or @random:SEED")
    common(hp)
    return p


def _default_bound(args) -> int:
    if args.max is not None:
        return args.max
    return 3 if args.target == "mat" else 4


def _emit(args, command: str, reports, extra: dict | None = None, out=None) -> int:
    out = out or sys.stdout
    failures = [r for r in reports if r.failed]
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": command}
        doc.update(extra or {})
        doc["reports"] = [r.to_dict() for r in reports]
        doc["failures"] = len(failures)
        json.dump(doc, out, indent=2, ensure_ascii=False)
        out.write("\n")
    else:
        for key, val in (extra or {}).items():
            if isinstance(val, list):
                out.write(f"{key}:\n")
                for item in val:
                    out.write(f"  {item}\n")
            else:
                out.write(f"{key}: {val}\n")
        for r in reports:
            out.write(r.line() + "\n")
        passed = sum(1 for r in reports if r.verdict == "pass")
        out.write(f"{len(reports)} checks, {passed} passed, {len(failures)} failed\n")
        if failures:
            first = failures[0]
            out.write(f"first failure: {first.axiom} at {first.witness.objects}\n")
    return 1 if failures else 0


def cmd_structural(args, out=None) -> int:
    if args.command == "sigma":
        if len(args.sizes) == 1:
            p = sk.distributor_via_sigma(args.sizes[0])
        elif len(args.sizes) == 2:
            p = sk.sigma_factor(*args.sizes)
        else:
            raise SystemExit("rigcat sigma: expected P or I P")
    else:
        names, fn = _STRUCTURAL[args.command]
        p = fn(*(getattr(args, n) for n in names))
    out = out or sys.stdout
    out.write(f"{p}\n")
    if args.order:
        out.write(f"order {fp.order(p)}\n")
    return 0


def cmd_verify(args, out=None) -> int:
    seed = int(os.environ.get("RIGCAT_SEED", args.seed))
    S = instance_by_name(args.target)
    bound = _default_bound(args)
    reports = run_suite(args.suite, S, bound, samples=args.samples, seed=seed, homs=args.homs)
    config = {"suite": args.suite, "target": args.target, "max": bound, "seed": seed, "samples": args.samples}
    return _emit(args, "verify", reports, {"config": config}, out)


def cmd_hom(args, out=None) -> int:
    bound = _default_bound(args)
    homs = [load_hom(d, args.target, bound) for d in args.descriptors]
    h = homs[0]
    S = h.target
    if args.action == "build":
        reports = verify_hom_axioms(h) + check_transformation(tau_transformation(h))
        same = hom_data(h) == hom_data(canonical_hom(S, h.bound))
        extra = {"target": S.name, "bound": h.bound,
                 "fcan": "equals F_can at all checked indices" if same else "differs from F_can"}
        return _emit(args, "hom build", reports, extra, out)
    if args.action == "inspect":
        extra = hom_to_dict(h)
        extra["phi_plus"] = [f"({m},{n}) {S.show(monoidality_from_tau(h, m, n)[0])}" for m, n in plus_indices(h.bound)]
        return _emit(args, "hom inspect", [], extra, out)
    if len(homs) != 2:
        raise SystemExit("rigcat hom compare: expected two descriptors")
    xi = unique_iso(homs[0], homs[1])
    reports = check_transformation(xi)
    extra = {"target": S.name, "bound": xi.bound, "components": xi.describe()}
    return _emit(args, "hom compare", reports, extra, out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("add-comm", "mul-comm", "rdist", "sigma"):
            return cmd_structural(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_hom(args)
    except (DescriptorError, fp.IndexOutOfRange) as exc:
        print(f"rigcat: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"rigcat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
