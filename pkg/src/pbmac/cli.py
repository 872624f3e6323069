"""Command-line front end: ``pbmac naf|poly|expand|verify``."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .combinat import check_composition, check_permutation, longest
from .expansions import hall_littlewood_expand, macdonald_P_expand, schur_in_atoms
from .fillings import coinv, enumerate_naf, maj
from .formats import poly_latex, scalar_latex, to_json_text
from .macdonald import macdonald_E
from .verify import SWEEP_HELP, SWEEPS, run_sweep


class UsageError(Exception):
    """Semantically invalid arguments; reported with exit status 2."""


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _shape_and_basement(shape, basement):
    try:
        shape = check_composition(shape)
        basement = longest(len(shape)) if basement is None else check_permutation(basement)
    except ValueError as e:
        raise UsageError(str(e))
    if len(shape) != len(basement):
        raise UsageError(f"shape has {len(shape)} parts but basement has {len(basement)}")
    return shape, basement


def _print_poly(f, fmt, out):
    if fmt == "json":
        out.write(to_json_text({"n": f.n, "terms": f.to_json()}) + "\n")
    elif fmt == "latex":
        out.write(poly_latex(f) + "\n")
    else:
        out.write(str(f) + "\n")


def cmd_naf(args, out):
    shape, basement = _shape_and_basement(args.shape, args.basement)
    fillings = enumerate_naf(shape, basement)
    if args.format == "json":
        for F in fillings:
            rec = F.to_json()
            rec["maj"] = maj(F)
            rec["coinv"] = coinv(F)
            out.write(to_json_text(rec) + "\n")
    else:
        for k, F in enumerate(fillings, start=1):
            out.write(f"# filling {k}: maj={maj(F)} coinv={coinv(F)}\n{F}\n\n")
        out.write(f"{len(fillings)} fillings\n")
    return 0


def cmd_poly(args, out):
    shape, basement = _shape_and_basement(args.shape, args.basement)
    f = macdonald_E(shape, basement)
    if args.q0t0:
        f = f.specialize(q_zero=True, t_zero=True)
    elif args.q0:
        f = f.specialize(q_zero=True)
    _print_poly(f, args.format, out)
    return 0


def cmd_expand(args, out):
    lam = args.lam
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(p < 0 for p in lam):
        raise UsageError(f"{lam} is not a partition")
    basement = args.basement
    if basement is None:
        basement = tuple(range(1, len(lam) + 1))
    try:
        basement = check_permutation(basement)
    except ValueError as e:
        raise UsageError(str(e))
    if len(lam) > len(basement):
        if any(lam[len(basement):]):
            raise UsageError("partition has more nonzero parts than the basement has rows")
        lam = lam[: len(basement)]
    lam = lam + (0,) * (len(basement) - len(lam))
    fn = {"P": macdonald_P_expand, "HL": hall_littlewood_expand, "schur": schur_in_atoms}[args.family]
    res = fn(lam, basement)
    if args.format == "json":
        out.write(to_json_text(res.to_json()) + "\n")
    else:
        out.write(f"basis: {res.basis_tag}\n")
        for idx, c in res.sorted_items():
            body = scalar_latex(c) if args.format == "latex" else str(c)
            out.write(f"{','.join(map(str, idx))}: {body}\n")
    return 0


def cmd_verify(args, out):
    if args.list:
        width = max(map(len, SWEEPS))
        for name in SWEEPS:
            out.write(f"{name:<{width}}  {SWEEP_HELP[name]}\n")
        return 0
    if args.name is None:
        raise UsageError("verify needs a sweep name (or --list)")
    if args.name not in SWEEPS:
        raise UsageError(f"unknown sweep {args.name!r}; try 'verify --list'")
    if args.n < 1 or args.max_weight < 0:
        raise UsageError("--n must be >= 1 and --max-weight >= 0")
    bad = run_sweep(args.name, args.n, args.max_weight)
    for item in bad:
        out.write(to_json_text({"sweep": args.name, "counterexample": item}) + "\n")
    if bad:
        print(f"{args.name}: {len(bad)} counterexample(s)", file=sys.stderr)
        return 1
    out.write(f"{args.name}: ok (n={args.n}, max-weight={args.max_weight})\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pbmac", description="Permuted-basement Macdonald polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("naf", help="enumerate non-attacking fillings")
    s.add_argument("--shape", type=_int_list, required=True)
    s.add_argument("--basement", type=_int_list)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_naf)

    s = sub.add_parser("poly", help="print E^sigma_alpha or a specialization")
    s.add_argument("kind", choices=("E",))
    s.add_argument("--shape", type=_int_list, required=True)
    s.add_argument("--basement", type=_int_list, help="defaults to n,...,1")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--q0", action="store_true", help="set q = 0 (t-atom)")
    g.add_argument("--q0t0", action="store_true", help="set q = t = 0 (atom)")
    s.add_argument("--format", choices=("text", "json", "latex"), default="text")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("expand", help="expand P, Hall-Littlewood or Schur polynomials")
    s.add_argument("family", choices=("P", "HL", "schur"))
    s.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    s.add_argument("--basement", type=_int_list, help="defaults to the identity")
    s.add_argument("--format", choices=("text", "json", "latex"), default="json")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("verify", help="run an identity sweep")
    s.add_argument("name", nargs="?")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--max-weight", type=int, default=3)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    try:
        return args.func(args, sys.stdout)
    except UsageError as e:
        print(f"pbmac: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
