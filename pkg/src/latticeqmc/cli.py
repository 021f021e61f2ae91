"""Command-line front end.

Subcommands: points, wce, bound, cbc, experiment, verify-appendix.
Exit codes: 0 success, 1 failed verification, 2 precondition violation,
3 numerical/size guard tripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

import numpy as np

from .cbc import CbcCriterion, cbc_fast, cbc_plain
from .errors import DomainError, GuardError
from .experiments import PRESET_NAMES, experiment_config, fitted_slopes, run_experiment
from .fourier import run_appendix_checks
from .kernels import KernelSpec
from .lattice import LatticeRule, rank1_points, symmetrize, tent_transform
from .weights import WeightScheme
from .worst_case_error import (
    corollary_bound,
    wce_sq_korobov_lattice,
    wce_sq_quadratic_form,
    wce_sym_exact,
)


def _load_weights(arg: str) -> WeightScheme:
    if os.path.exists(arg):
        with open(arg) as fh:
            return WeightScheme.from_dict(json.load(fh))
    return WeightScheme.from_json(arg)


def _parse_z(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse generating vector {text!r}") from exc


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _cmd_points(args) -> int:
    rule = LatticeRule(N=args.n, z=_parse_z(args.z))
    ps = rank1_points(rule)
    if args.transform == "tent":
        ps = tent_transform(ps)
    elif args.transform == "sym":
        ps = symmetrize(ps)
    if args.format == "json":
        _emit(ps.to_json(), args.out)
    else:
        if args.out is None or args.out == "-":
            np.savetxt(sys.stdout, ps.points, delimiter=",", fmt="%.17g")
        else:
            ps.to_csv(args.out)
    return 0


def _cmd_wce(args) -> int:
    rule = LatticeRule(N=args.n, z=_parse_z(args.z))
    weights = _load_weights(args.weights)
    if weights.s != rule.s:
        raise DomainError(f"weights cover {weights.s} coordinates, rule has {rule.s}")
    if args.space == "korobov":
        report = wce_sq_korobov_lattice(args.alpha if args.alpha is not None else 1, weights, rule)
    elif args.space == "sob2-tent":
        if args.alpha not in (None, 2):
            raise DomainError("the tent error is computed in the smoothness-2 space")
        spec = KernelSpec(family="sobolev", alpha=2, weights=weights)
        report = wce_sq_quadratic_form(spec, tent_transform(rank1_points(rule)))
    elif args.space == "sym":
        report = wce_sym_exact(args.alpha if args.alpha is not None else 2, weights, rule)
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown space {args.space!r}")
    payload = report.to_dict()
    payload.update({"space": args.space, "n": args.n, "z": list(rule.z), "root": report.root})
    _emit(json.dumps(payload), args.out)
    print(f"squared worst-case error: {report.value:.12e}  (root {report.root:.12e})",
          file=sys.stderr)
    return 0


def _cmd_bound(args) -> int:
    weights = _load_weights(args.weights)
    report = corollary_bound(args.kind, weights, args.n, args.lam, alpha=args.alpha)
    payload = report.to_dict()
    payload.update({"bound_kind": args.kind, "n": args.n, "root": report.root})
    _emit(json.dumps(payload), None)
    return 0


def _cmd_cbc(args) -> int:
    weights = _load_weights(args.weights)
    crit = CbcCriterion(kind=args.criterion, base_weights=weights,
                        alpha=args.alpha if args.criterion == "sym" else None)
    runner = cbc_plain if args.plain else cbc_fast
    result = runner(args.n, args.dims, crit)
    _emit(json.dumps(result.to_dict()), args.out)
    return 0


def _cmd_experiment(args) -> int:
    cfg = experiment_config(args.name)
    if args.n_list:
        cfg = replace(cfg, N_list=tuple(int(t) for t in args.n_list.split(",")))
    external = None
    if args.external_points:
        external = np.loadtxt(args.external_points, delimiter=",", ndmin=2)
    result = run_experiment(cfg, external_points=external)
    _emit(result.to_csv_text(), args.out)
    for rule_name, slope in fitted_slopes(result).items():
        print(f"fitted slope ({rule_name}): {slope:+.3f}", file=sys.stderr)
    return 0


def _cmd_verify_appendix(args) -> int:
    rows = run_appendix_checks()
    width = max(len(name) for name, _, _ in rows)
    ok_all = True
    for name, ok, detail in rows:
        status = "PASS" if ok else "FAIL"
        ok_all &= ok
        print(f"{name:<{width}}  {status}  {detail}")
    return 0 if ok_all else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticeqmc",
        description="rank-1 lattice rules, worst-case errors, and CBC construction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="export a (transformed) lattice point set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", type=str, required=True, help="comma-separated generating vector")
    p.add_argument("--transform", choices=["none", "tent", "sym"], default="none")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("wce", help="squared worst-case error of a rule")
    p.add_argument("--space", choices=["korobov", "sob2-tent", "sym"], required=True)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", type=str, required=True)
    p.add_argument("--weights", type=str, required=True, help="JSON text or file")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=_cmd_wce)

    p = sub.add_parser("bound", help="prime-N construction bound at a given lambda")
    p.add_argument("--kind", choices=["tent", "sym"], required=True)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--weights", type=str, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("cbc", help="component-by-component construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dims", type=int, required=True)
    p.add_argument("--criterion", choices=["tent", "sym"], required=True)
    p.add_argument("--alpha", type=int, default=None, help="even smoothness for --criterion sym")
    p.add_argument("--weights", type=str, required=True, help="JSON file with the base weights")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true", default=True)
    mode.add_argument("--plain", action="store_true", default=False)
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=_cmd_cbc)

    p = sub.add_parser("experiment", help="run a named convergence experiment")
    p.add_argument("--name", choices=list(PRESET_NAMES), required=True)
    p.add_argument("--external-points", type=str, default=None,
                   help="CSV of competitor points; first N rows serve each N")
    p.add_argument("--n-list", type=str, default=None, help="override the N grid")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("verify-appendix", help="run the coefficient-identity checks")
    p.set_defaults(func=_cmd_verify_appendix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
