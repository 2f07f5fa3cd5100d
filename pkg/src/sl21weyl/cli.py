"""Command-line front end: ``sl21weyl <subcommand> ...``.

Exit codes: 0 success or all checks passed, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import verifier
from .algebra import AlgebraError, load_table, parse_algebra, validate_table
from .parser import ParseError, ParseWarning, parse_multiset, parse_tuple, parse_uelem
from .pbw import format_uelem
from .scalars import fmt_rat
from .tensor_rep import NotInTSError, WeylIndex, act_elem, express_in_ts_basis, highest_weight_vector, ts_basis
from .weyl_ops import p, p1, q1

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_CHECKS = (
    "degp1", "degp2", "degp3", "degp4", "degp5", "degp6", "degp7",
    "deltap", "p1v", "pv", "spanning", "relations", "structural", "pbw", "tensor", "all",
)


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _algebra(args, default: str):
    return parse_algebra(args.algebra or default)


def _window(alg, args):
    if args.window is not None:
        return alg.basis_window(args.window)
    if alg.dim is None:
        raise UsageError(f"{alg.spec} is infinite-dimensional; pass --window N")
    return alg.basis_window()


def format_ms(alg, ms) -> str:
    return "{" + ", ".join(f"{alg.label(k)}:{v}" for k, v in ms.items()) + "}"


def format_index(alg, idx: WeylIndex) -> str:
    xi = ", ".join(alg.label(k) for k in idx.xi)
    return f"p({format_ms(alg, idx.phi1)}, {format_ms(alg, idx.phi2)}, ({xi}))"


def _print_uelem(u, args):
    print(_dump(u.to_json()) if args.json else format_uelem(u))


# subcommands -------------------------------------------------------------

def cmd_nf(args) -> int:
    alg = _algebra(args, "poly")
    _print_uelem(parse_uelem(args.expr, alg), args)
    return EXIT_OK


def cmd_p1(args) -> int:
    alg = _algebra(args, "poly")
    fn = p1 if args.command == "p1" else q1
    _print_uelem(fn(alg, parse_multiset(args.phi, alg), parse_multiset(args.chi, alg)), args)
    return EXIT_OK


def cmd_p(args) -> int:
    alg = _algebra(args, "poly")
    u = p(alg, parse_multiset(args.phi1, alg), parse_multiset(args.phi2, alg), parse_tuple(args.xi, alg))
    _print_uelem(u, args)
    return EXIT_OK


def cmd_p_act(args) -> int:
    alg = _algebra(args, "poly")
    u = parse_uelem(args.expr, alg)
    t = act_elem(u, highest_weight_vector(args.m))
    win = _window(alg, args) if (args.window is not None or alg.dim is not None) else None
    coords = express_in_ts_basis(alg, t, win)
    if args.json:
        print(_dump({
            "m": args.m,
            "coords": [{"index": idx.to_json(), "coeff": fmt_rat(c)} for idx, c in coords.items()],
        }))
    elif not coords:
        print("0")
    else:
        for idx, c in coords.items():
            print(f"{fmt_rat(c)}\t{format_index(alg, idx)}")
    return EXIT_OK


def cmd_basis(args) -> int:
    alg = _algebra(args, "poly")
    basis = ts_basis(alg, args.m, _window(alg, args))
    if args.json:
        print(_dump([idx.to_json() for idx in basis]))
    else:
        for idx in basis:
            print(format_index(alg, idx))
    return EXIT_OK


def cmd_dim(args) -> int:
    alg = _algebra(args, "poly")
    print(len(ts_basis(alg, args.m, _window(alg, args))))
    return EXIT_OK


def _run_verify(args) -> list:
    alg = _algebra(args, "trunc:2")
    win = _window(alg, args)
    check, size = args.check, args.max_size
    if check.startswith("degp"):
        kw = {"window": win, "as_printed": args.as_printed}
        if size is not None:
            kw["max_size"] = size
        return [verifier.verify_degp(int(check[4:]), alg, **kw)]
    if check == "deltap":
        return [verifier.verify_deltap_range(alg, 3 if size is None else size, window=win)]
    if check == "p1v":
        return [verifier.verify_p1v_range(alg, 3 if size is None else size, window=win)]
    if check == "pv":
        return [verifier.verify_pv_and_basis(alg, m, win) for m in range(args.m + 1)]
    if check == "spanning":
        return [verifier.verify_spanning_lemmas(alg, m, win) for m in range(1, args.m + 1)]
    if check == "relations":
        return [verifier.verify_relations(alg, m, win) for m in range(args.m + 1)]
    if check == "structural":
        return verifier.verify_structural()
    if check == "pbw":
        return [verifier.verify_pbw(alg, seed=args.seed, window=win)]
    if check == "tensor":
        return [verifier.verify_tensor_structure(alg, max_m=args.m, seed=args.seed, window=win)]
    return verifier.verify_all(args.profile, alg, seed=args.seed)


def cmd_verify(args) -> int:
    reports = _run_verify(args)
    if args.json:
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.line())
            for params, diag in r.failures[:5]:
                print(f"    {verifier._jsonable(params)}: {diag}")
        failed = sum(1 for r in reports if not r.passed)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_validate_table(args) -> int:
    alg = load_table(args.path)
    report = validate_table(alg)
    if args.json:
        print(_dump({"valid": report.valid, "violations": report.violations}))
    else:
        print("valid" if report.valid else "invalid")
        for v in report.violations:
            print(f"  {v}")
    return EXIT_OK if report.valid else EXIT_FAIL


# argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="poly | trunc:N | table:PATH")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--window", type=int, help="basis window size (needed for poly)")

    ap = argparse.ArgumentParser(prog="sl21weyl", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_nf)

    for name in ("p1", "q1"):
        s = sub.add_parser(name, parents=[common], help=f"evaluate {name}(phi, chi)")
        s.add_argument("phi", help="multiset literal, e.g. '{t:2, 1:1}'")
        s.add_argument("chi")
        s.set_defaults(func=cmd_p1)

    s = sub.add_parser("p", parents=[common], help="evaluate p(phi1, phi2, xi)")
    s.add_argument("phi1")
    s.add_argument("phi2")
    s.add_argument("xi", help="tuple literal, e.g. '(t, t^2)'")
    s.set_defaults(func=cmd_p)

    s = sub.add_parser("p-act", parents=[common], help="act on v1^m and print TS^m coordinates")
    s.add_argument("expr")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_p_act)

    for name, func in (("basis", cmd_basis), ("dim", cmd_dim)):
        s = sub.add_parser(name, parents=[common], help=f"{name} of TS^m(V (x) A)")
        s.add_argument("--m", type=int, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("verify", parents=[common], help="run verification checks")
    s.add_argument("check", choices=VERIFY_CHECKS)
    s.add_argument("--m", type=int, default=2, help="largest m for pv/spanning/relations/tensor")
    s.add_argument("--max-size", type=int, help="bound on multiset sizes")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--profile", choices=sorted(verifier.PROFILES), default="quick")
    s.add_argument("--as-printed", action="store_true",
                   help="check items 2 and 5 of the p1/q1 list in their uncorrected form")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("validate-table", help="check a product table file")
    s.add_argument("path")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_validate_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    with warnings.catch_warnings():
        warnings.simplefilter("always", ParseWarning)
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        try:
            return args.func(args)
        except (ParseError, AlgebraError, UsageError, NotInTSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
