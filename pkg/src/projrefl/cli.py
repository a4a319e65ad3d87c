"""Command-line interface: ``projrefl <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, diagonal, galois, group, rs, stats, tableaux, verify
from .group import CapExceeded, ParameterError


class UsageError(Exception):
    """Bad flag value; the message names the flag."""


def _params(args) -> group.GroupParams:
    if args.params is None:
        raise UsageError("--params r,p,q,n is required")
    try:
        return group.parse_params(args.params)
    except ParameterError as exc:
        raise UsageError(f"--params: {exc}") from None


def _element(text: str | None, params: group.GroupParams, flag: str = "--element") -> group.Element:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return group.parse_element(text, params)
    except ParameterError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _json_arg(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag}: invalid JSON ({exc.msg})") from None


def _emit(payload, args) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True) + "\n"
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_group(args) -> int:
    params = _params(args)
    if args.action == "enumerate":
        if args.count_only:
            count = sum(1 for _ in group.enumerate_group(params, args.max_order))
            _emit(str(count), args)
        else:
            _emit([group.element_to_json(g) for g in group.enumerate_group(params, args.max_order)], args)
    elif args.action == "info":
        info = {
            "params": params.as_dict(),
            "order": params.order(),
            "dual": params.dual().as_dict(),
            "scalar_count": group.scalar_count(params),
            "dual_scalar_count": group.scalar_count(params.dual()),
            "isomorphic_to_dual": None if params.n == 2 else group.is_isomorphic_to_dual(params),
        }
        _emit(info, args)
    elif args.action == "multiply":
        if not args.element or len(args.element) != 2:
            raise UsageError("--element must be given exactly twice for multiply")
        a = _element(args.element[0], params)
        b = _element(args.element[1], params)
        _emit(group.element_to_json(group.multiply(a, b)), args)
    elif args.action == "inverse":
        g = _element(args.element[0] if args.element else None, params)
        _emit(group.element_to_json(group.inverse(g)), args)
    elif args.action == "liftings":
        g = _element(args.element[0] if args.element else None, params)
        if args.p_prime is None:
            raise UsageError("--p-prime is required for liftings")
        try:
            lifts = group.liftings(g, args.p_prime)
        except ParameterError as exc:
            raise UsageError(f"--p-prime: {exc}") from None
        _emit([{"sigma": [s + 1 for s in sg], "colors": list(c)} for sg, c in lifts], args)
    return 0


def cmd_stats(args) -> int:
    params = _params(args)
    if args.poly:
        poly = stats.fmaj_generating_poly(params, over_dual=args.over_dual, cap=args.max_order)
        _emit({"poly": stats.format_poly(poly), "coefficients": stats.poly_coefficients(poly)}, args)
        return 0
    g = _element(args.element, params)
    _emit(stats.stat_profile(g).to_json(), args)
    return 0


def cmd_rs(args) -> int:
    params = _params(args)
    g = _element(args.element, params)
    P, Q, mu = rs.projective_rs(g)
    _emit(
        {
            "P": tableaux.tableau_to_json(P),
            "Q": tableaux.tableau_to_json(Q),
            "shape_class": mu.to_json(),
            "stabilizer_order": mu.stabilizer_order,
        },
        args,
    )
    return 0


def cmd_hilbert(args) -> int:
    params = _params(args)
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    if args.bound < 0:
        raise UsageError("--bound must be nonnegative")
    if args.kind == "diagonal":
        series = diagonal.hilb_diag(params, args.k, args.bound)
    elif args.kind == "tensor":
        series = diagonal.hilb_tensor(params, args.k, args.bound)
    else:
        series = diagonal.uou_rhs(params, args.k, args.bound)
    if args.collapse:
        _emit([{"degrees": list(e), "coef": c} for e, c in series.collapse().items()], args)
    else:
        _emit(series.to_json(), args)
    return 0


def _load_shapes(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"--shapes: cannot read {path} ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"--shapes: invalid JSON ({exc.msg})") from None
    if isinstance(data, dict):
        data = data.get("shapes")
    if not isinstance(data, list):
        raise UsageError("--shapes: expected a list of shapes or {\"shapes\": [...]}")
    out = []
    for item in data:
        shape = item["shape"] if isinstance(item, dict) else item
        out.append(tuple(tuple(lam) for lam in shape))
    return out


def cmd_kronecker(args) -> int:
    params = _params(args)
    if args.shapes is None:
        raise UsageError("--shapes FILE is required")
    shapes = _load_shapes(args.shapes)
    if args.k is not None and args.k != len(shapes):
        raise UsageError(f"--k={args.k} but --shapes lists {len(shapes)} shapes")
    try:
        value = characters.coarse_kronecker(params, shapes)
    except ParameterError as exc:
        raise UsageError(f"--shapes: {exc}") from None
    _emit({"coarse_kronecker": value}, args)
    return 0


def cmd_character(args) -> int:
    if args.shape is None or args.type is None:
        raise UsageError("--shape and --type are required")
    shape = _json_arg(args.shape, "--shape")
    try:
        ctype = characters.character_from_type_string(args.type)
    except ValueError:
        raise UsageError("--type: expected 'length:color,...'") from None
    try:
        value = characters.wreath_character(shape, ctype)
    except ValueError as exc:
        raise UsageError(f"--shape/--type: {exc}") from None
    _emit({"r": value.r, "coeffs": list(value.coeffs)}, args)
    return 0


def cmd_galois(args) -> int:
    params = _params(args)
    try:
        left = galois.gsigma_combinatorial(params, args.d)
        right = galois.gsigma_representation(params, args.d)
    except ParameterError as exc:
        raise UsageError(f"--d: {exc}") from None
    equal = left == right
    if args.collapse:
        payload = {
            "combinatorial": [{"degrees": list(e), "coef": c} for e, c in left.collapse().items()],
            "representation": [{"degrees": list(e), "coef": c} for e, c in right.collapse().items()],
        }
    else:
        payload = {"combinatorial": left.to_json(), "representation": right.to_json()}
    payload["equal"] = equal
    _emit(payload, args)
    return 0 if equal else 1


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"--config: cannot read {path} ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"--config: invalid JSON ({exc.msg})") from None
    unknown = set(data) - set(verify.DEFAULTS)
    if unknown:
        raise UsageError(f"--config: unknown keys {sorted(unknown)}")
    return data


def cmd_verify(args) -> int:
    config = _load_config(args.config)
    for key in ("max_order", "max_r", "bound"):
        value = getattr(args, key)
        if value is not None:
            config[key] = value
    if args.no_timing:
        config["timing"] = False
    params = _params(args) if args.params else None
    try:
        report = verify.run_verify(args.suite, config, params)
    except KeyError as exc:
        raise UsageError(f"suite: {exc.args[0]}") from None
    _emit(verify.dumps(report), args)
    return 0 if verify.report_ok(report) else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    withparams = argparse.ArgumentParser(add_help=False, parents=[common])
    withparams.add_argument("--params", metavar="r,p,q,n", help="group parameters")

    parser = argparse.ArgumentParser(prog="projrefl", description="Projective reflection groups G(r,p,q,n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", parents=[withparams], help="enumerate or query a group")
    p.add_argument("action", choices=["enumerate", "info", "multiply", "inverse", "liftings"])
    p.add_argument("--element", action="append", help="element 's1 .. sn; c1 .. cn' (repeatable)")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--p-prime", type=int)
    p.add_argument("--max-order", type=int, help="enumeration cap")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("stats", parents=[withparams], help="descent statistics of an element")
    p.add_argument("--element")
    p.add_argument("--poly", action="store_true", help="print the fmaj generating polynomial instead")
    p.add_argument("--over-dual", action="store_true")
    p.add_argument("--max-order", type=int)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("rs", parents=[withparams], help="projective Robinson-Schensted")
    p.add_argument("--element")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("hilbert", parents=[withparams], help="truncated diagonal-invariant series")
    p.add_argument("kind", choices=["diagonal", "tensor", "rhs"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--collapse", action="store_true", help="total degree per block")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("kronecker", parents=[withparams], help="coarse Kronecker coefficient")
    p.add_argument("--shapes", metavar="FILE")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("character", parents=[common], help="wreath-product character value")
    p.add_argument("--shape", help="JSON r-tuple of partitions, e.g. '[[2],[1]]'")
    p.add_argument("--type", help="cycle type 'length:color,...'")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("galois", parents=[withparams], help="Galois-twisted bigraded series")
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--collapse", action="store_true")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("verify", parents=[withparams], help="run identity suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--max-order", type=int)
    p.add_argument("--max-r", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--config", metavar="FILE", help="JSON file with verify settings")
    p.add_argument("--no-timing", action="store_true", help="report ms as 0 for byte-identical output")
    p.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"projrefl {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"projrefl {args.command}: error: --max-order: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
