"""Command-line interface.

Exit codes: 0 success, 2 usage or domain error, 3 verification failure.
All dimensions are printed as exact decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from math import comb

from . import closed_forms, verify
from .bott import CohomologyProfile, grassmannian_cohomology, vanishing_threshold
from .errors import BBWError, TooLarge
from .oracle import bounded_shape_word_count, ssyt_count
from .weights import Partition, format_weight, parse_weight, partitions_of, syt_count, twist
from .weyl import dimension_table, h0_dim, weyl_dim_full

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3


@dataclass
class QueryResult:
    """A query echo plus its result, serializable without loss."""

    command: str
    params: dict[str, str]
    result: str | None = None
    cohomology: CohomologyProfile | None = None
    extra: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {"command": self.command, **self.params}
        if self.result is not None:
            out["dim"] = self.result
        if self.cohomology is not None:
            out["cohomology"] = self.cohomology.to_json()
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "QueryResult":
        data = json.loads(text)
        command = data.pop("command")
        result = data.pop("dim", None)
        profile = data.pop("cohomology", None)
        if profile is not None:
            profile = CohomologyProfile(tuple((e["degree"], int(e["dim"])) for e in profile))
        extra = {key: data.pop(key) for key in ("threshold", "check") if key in data}
        return cls(command, data, result, profile, extra)


def _weight_arg(text):
    try:
        return parse_weight(text)
    except BBWError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit_scalar(args, params, value, check=None):
    if args.format == "json":
        extra = {} if check is None else {"check": check}
        print(QueryResult(args.command, params, str(value), extra=extra).to_json())
    else:
        print(value)
        if check is not None:
            print(f"check: {check}")


def cmd_dim(args):
    value = h0_dim(args.lam, args.k, args.m)
    _emit_scalar(args, {"k": str(args.k), "m": str(args.m), "lambda": str(args.lam)}, value)
    return EXIT_OK


def cmd_cohomology(args):
    profile = grassmannian_cohomology(args.lam, args.k, args.m)
    res = QueryResult(
        "cohomology",
        {"k": str(args.k), "m": str(args.m), "lambda": str(args.lam)},
        cohomology=profile,
    )
    if args.lam.lowest < 0:
        res.extra["threshold"] = str(vanishing_threshold(args.lam, args.k))
    print(res.to_json())
    return EXIT_OK


def _padded(parts, k, m):
    return tuple(parts) + (0,) * (m - len(parts))


def _recheck(args):
    """Independent recomputation for ``--check``: (label, value)."""
    k, m = args.k, args.m
    if args.command == "det-power":
        return "weyl-dim", weyl_dim_full(_padded((args.l,) * k, k, m))
    if args.command == "sym":
        return "weyl-dim", weyl_dim_full(_padded((args.r,), k, m))
    if args.command == "sym-det":
        head = (args.r + args.l,) + (args.l,) * (k - 1)
        return "weyl-dim", weyl_dim_full(_padded(head, k, m))
    if args.command == "pluecker":
        forms = comb(comb(m, k) + args.l - 1, args.l)
        return "weyl-dim", forms - weyl_dim_full(_padded((args.l,) * k, k, m))
    if args.command == "tensor":
        if args.l == 0:
            try:
                return "rsk-words", bounded_shape_word_count(k, m, args.d)
            except TooLarge:
                pass
        total = 0
        for lam in partitions_of(args.d, k):
            shifted = twist(lam.to_weight(k), args.l)
            total += syt_count(lam) * ssyt_count(Partition.from_weight(shifted), m)
        return "ssyt", total
    raise AssertionError(args.command)


def cmd_formula(args):
    if args.command == "det-power":
        value = closed_forms.det_power_dim(args.k, args.m, args.l)
        params = {"k": args.k, "m": args.m, "l": args.l}
    elif args.command == "sym":
        value = closed_forms.sym_dim(args.k, args.m, args.r)
        params = {"k": args.k, "m": args.m, "r": args.r}
    elif args.command == "sym-det":
        value = closed_forms.sym_det_dim(args.k, args.m, args.r, args.l)
        params = {"k": args.k, "m": args.m, "r": args.r, "l": args.l}
    elif args.command == "pluecker":
        value = closed_forms.pluecker_relations_dim(args.k, args.m, args.l)
        params = {"k": args.k, "m": args.m, "l": args.l}
    else:
        value = closed_forms.tensor_det_dim(args.k, args.m, args.d, args.l)
        params = {"k": args.k, "m": args.m, "d": args.d, "l": args.l}
    params = {key: str(v) for key, v in params.items()}
    if not args.check:
        _emit_scalar(args, params, value)
        return EXIT_OK
    label, other = _recheck(args)
    agree = other == value
    verdict = f"agree ({label})" if agree else f"DISAGREE ({label} gives {other})"
    _emit_scalar(args, params, value, verdict)
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_table(args):
    rows = dimension_table(args.lam, args.k, args.m_max)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "dim"])
        writer.writerows((m, str(d)) for m, d in rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps([{"m": m, "dim": str(d)} for m, d in rows]))
    return EXIT_OK


def cmd_verify(args):
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    reports = verify.run(
        names,
        k_max=args.k_max,
        l_max=args.l_max,
        size_max=args.size_max,
        d_max=args.d_max,
        m_max=args.m_max,
    )
    for rep in reports:
        print(rep.summary())
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbwdim",
        description="Exact cohomology of homogeneous vector bundles on Grassmannians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def km(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--m", type=int, required=True)

    def scalar_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("dim", help="dim H^0(Gr(k,m), V_lambda) for lambda_k >= 0")
    km(p)
    p.add_argument("--lambda", dest="lam", type=_weight_arg, required=True)
    scalar_format(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("cohomology", help="full cohomology profile (any integer weight)")
    km(p)
    p.add_argument("--lambda", dest="lam", type=_weight_arg, required=True)
    p.set_defaults(func=cmd_cohomology)

    formulas = {
        "det-power": ("l",),
        "sym": ("r",),
        "sym-det": ("r", "l"),
        "pluecker": ("l",),
        "tensor": ("d", "l"),
    }
    for name, extra in formulas.items():
        p = sub.add_parser(name, help=f"closed-form dimension: {name}")
        km(p)
        for opt in extra:
            p.add_argument(f"--{opt}", type=int, required=True)
        p.add_argument("--check", action="store_true",
                       help="recompute independently and report agreement")
        scalar_format(p)
        p.set_defaults(func=cmd_formula)

    p = sub.add_parser("table", help="H^0 dimensions for m = k .. m-max")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_weight_arg, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification grid")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    for opt in ("k-max", "l-max", "size-max", "d-max", "m-max"):
        p.add_argument(f"--{opt}", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def _glue_lambda(argv):
    # "--lambda -1,-2" would otherwise be read as an option
    out, it = [], iter(argv)
    for tok in it:
        if tok == "--lambda":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--lambda={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_glue_lambda(argv))
    try:
        return args.func(args)
    except BBWError as exc:
        print(f"bbwdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
