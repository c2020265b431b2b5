"""Command-line front end.

Subcommands: ``plan``, ``strata``, ``gamma``, ``verify``, ``kodaira``,
``realize``.  Reports go to standard output (or ``--out FILE``) in a
deterministic human-readable form, or as JSON with ``--json``.  Exit codes:
0 success / all cases agree, 1 usage or input error, 2 a verification
disagreement was found, 3 an infeasible plan was requested together with
``--require-feasible``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .errors import DimensionCalculusError
from .hecke_groups import gamma_gamma_codim, max_product_dim, sp_total_dim
from .moduli import GroupExpr, SpAtom, SUFormAtom
from .partitions import SetPartition, integer_partitions
from .planner import (
    SymplecticFamily,
    UnitaryFamily,
    kodaira_budget,
    plan_family,
    realize_group,
    spec_to_dict,
    validate_spec,
)
from .strata import (
    DecompositionShape,
    mdec_codim_fixedpart,
    mdec_codim_product,
    mdec_codim_unitary,
    strata_of_shape,
    strata_of_unitary,
)
from .verify import CHECKS, run_check

TOOL_NAME = "moduli-strata"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_INFEASIBLE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that raises instead of exiting with code 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _dims(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc
    if not values:
        raise UsageError(f"empty dimension list: {text!r}")
    return values


def _pq(text: str) -> tuple[int, int]:
    values = _dims(text)
    if len(values) != 2:
        raise UsageError(f"--unitary expects p,q, got {text!r}")
    return values[0], values[1]


def build_parser() -> _Parser:
    parser = _Parser(prog=TOOL_NAME, description="dimension calculus for complete families")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
        p.add_argument("--timing", action="store_true", help="include elapsed milliseconds")
        p.add_argument("--witness-all", action="store_true", help="list every tied witness")

    p = sub.add_parser("plan", help="dimension budget and monodromy for a family spec")
    p.add_argument("--fixed", type=_dims, default=(), help="fixed factor dimensions a,b,...")
    p.add_argument("--varying", type=_dims, help="varying factor dimensions a,b,...")
    p.add_argument("--unitary", type=_pq, help="unitary parameters p,q")
    p.add_argument("--elliptic", type=int, default=0, help="fixed elliptic factor count (unitary)")
    p.add_argument("--require-feasible", action="store_true")
    common(p)

    p = sub.add_parser("strata", help="enumerate repeated-factor strata")
    p.add_argument("--fixed", type=_dims, default=())
    p.add_argument("--varying", type=_dims)
    p.add_argument("--unitary", type=_pq)
    common(p)

    p = sub.add_parser("gamma", help="subgroup dimension calculus on a ground set")
    p.add_argument("--g", type=int, required=True, help="ground set size")
    common(p)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("lemma_id", choices=sorted(CHECKS), help="suite to run")
    p.add_argument("--g-max", type=int, default=None, help="override the parameter box")
    common(p)

    p = sub.add_parser("kodaira", help="complete-curve-family budget at a fiber genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--require-feasible", action="store_true")
    common(p)

    p = sub.add_parser("realize", help="family spec realizing a target monodromy group")
    p.add_argument("--varying", type=_dims, help="symplectic target ranks a,b,...")
    p.add_argument("--unitary", type=_pq, help="unitary target parameters p,q")
    p.add_argument("--g", type=int, required=True, help="total dimension g'")
    common(p)

    return parser


def _emit(payload: dict, args: argparse.Namespace) -> None:
    if args.json:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_lines(value: object, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key in value:
            inner = value[key]
            if isinstance(inner, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_lines(inner, indent + 1))
            else:
                lines.append(f"{pad}{key}: {inner}")
    elif isinstance(value, list):
        for inner in value:
            if isinstance(inner, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_lines(inner, indent + 1))
            else:
                lines.append(f"{pad}- {inner}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def _render_text(payload: dict) -> str:
    head = f"{payload['tool']} {payload['version']} :: {payload['command']}"
    body = _render_lines({"input": payload["input"], "result": payload["result"]})
    notes = payload.get("notes", [])
    lines = [head, *body]
    if notes:
        lines.append("notes:")
        lines.extend(f"  - {n}" for n in notes)
    return "\n".join(lines) + "\n"


def _payload(command: str, inputs: dict, result: dict, notes: list[str]) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": __version__,
        "command": command,
        "input": inputs,
        "result": result,
        "notes": notes,
    }


def _build_spec(args: argparse.Namespace):
    if args.unitary is not None and args.varying is not None:
        raise UsageError("give either --varying or --unitary, not both")
    if args.unitary is not None:
        p, q = args.unitary
        return UnitaryFamily(elliptic_count=args.elliptic, p=p, q=q)
    if args.varying is not None:
        return SymplecticFamily(fixed_dims=args.fixed, varying_dims=args.varying)
    raise UsageError("a family spec needs --varying or --unitary")


def _cmd_plan(args: argparse.Namespace) -> int:
    spec = _build_spec(args)
    violations = validate_spec(spec)
    if violations:
        raise UsageError("invalid family spec: " + "; ".join(violations))
    report = plan_family(spec)
    payload = _payload("plan", spec_to_dict(spec), report.to_dict(), list(report.notes))
    _emit(payload, args)
    if args.require_feasible and not report.feasible:
        return EXIT_INFEASIBLE
    return EXIT_OK


def _cmd_strata(args: argparse.Namespace) -> int:
    if args.unitary is not None:
        p, q = args.unitary
        strata = strata_of_unitary(p, q)
        minimum = mdec_codim_unitary(p, q)
        inputs = {"flavor": "unitary", "p": p, "q": q}
    elif args.varying is not None:
        if args.fixed:
            shape = DecompositionShape(args.fixed, args.varying)
            strata = strata_of_shape(shape)
            minimum = mdec_codim_fixedpart(shape)
        else:
            strata = strata_of_shape(DecompositionShape((), args.varying))
            minimum = mdec_codim_product(args.varying)
        inputs = {
            "flavor": "symplectic",
            "fixed_dims": list(args.fixed),
            "varying_dims": sorted(args.varying),
        }
    else:
        raise UsageError("strata needs --varying or --unitary")
    result = {
        "ambient_dim": strata[0].ambient_dim if strata else 0,
        "count": len(strata),
        "strata": [s.to_dict() for s in strata],
        "min_codim": minimum.codim,
        "witness": minimum.witness.to_dict(),
        "closed_form": minimum.closed_form,
        "agrees": minimum.agrees,
    }
    if args.witness_all:
        result["minimizers"] = [s.to_dict() for s in strata if s.codim == minimum.codim]
    payload = _payload("strata", inputs, result, list(minimum.notes))
    _emit(payload, args)
    return EXIT_OK if minimum.agrees else EXIT_DISAGREEMENT


def _cmd_gamma(args: argparse.Namespace) -> int:
    g = args.g
    if g < 2:
        raise UsageError("gamma needs --g >= 2")
    maximum = max_product_dim(g, collect_all=args.witness_all)
    classes = []
    for sizes in integer_partitions(g):
        if len(sizes) < 2:
            continue
        blocks = []
        start = 1
        for s in sizes:
            blocks.append(tuple(range(start, start + s)))
            start += s
        lam = SetPartition.from_blocks(blocks, g)
        classes.append(
            {
                "block_sizes": list(sizes),
                "gamma_dim": sum(l * (2 * l + 1) for l in sizes),
                "translate_codim": gamma_gamma_codim(g, lam),
            }
        )
    result = {
        "ground_size": g,
        "ambient_group_dim": sp_total_dim(g),
        "max_product_dim": maximum.value,
        "closed_form": sp_total_dim(g) - 4,
        "agrees": maximum.value == sp_total_dim(g) - 4,
        "witness": [list(r) for r in maximum.witness.entries],
        "partition_classes": classes,
    }
    if args.witness_all:
        result["maximizers"] = [[list(r) for r in m.entries] for m in maximum.all_witnesses]
    notes = ["translate codimensions depend only on the block-size multiset"]
    payload = _payload("gamma", {"g": g}, result, notes)
    _emit(payload, args)
    return EXIT_OK if result["agrees"] else EXIT_DISAGREEMENT


def _cmd_verify(args: argparse.Namespace) -> int:
    run = run_check(args.lemma_id, args.g_max)
    if args.json:
        result = run.to_dict(timing=args.timing)
    else:
        # human digest: summary plus every disagreement, verbatim
        result = {
            "lemma_id": run.lemma_id,
            "parameter_range": run.parameter_range,
            "summary": run.summary(timing=args.timing),
            "disagreements": [c.to_dict() for c in run.disagreements],
        }
    payload = _payload("verify", {"lemma_id": args.lemma_id, "g_max": args.g_max}, result, run.notes)
    _emit(payload, args)
    return EXIT_DISAGREEMENT if run.disagreements else EXIT_OK


def _cmd_kodaira(args: argparse.Namespace) -> int:
    report = kodaira_budget(args.genus)
    payload = _payload("kodaira", {"genus": args.genus}, report.to_dict(), list(report.notes))
    _emit(payload, args)
    if args.require_feasible and not report.feasible:
        return EXIT_INFEASIBLE
    return EXIT_OK


def _cmd_realize(args: argparse.Namespace) -> int:
    if args.unitary is not None and args.varying is not None:
        raise UsageError("give either --varying or --unitary, not both")
    if args.unitary is not None:
        p, q = args.unitary
        target = GroupExpr.of([SUFormAtom(p, q)])
        inputs = {"target": target.label, "flavor": "unitary", "g_prime": args.g}
    elif args.varying is not None:
        target = GroupExpr.of(SpAtom(r) for r in args.varying)
        inputs = {"target": target.label, "flavor": "symplectic", "g_prime": args.g}
    else:
        raise UsageError("realize needs --varying (ranks) or --unitary p,q")
    spec = realize_group(target, args.g)
    report = plan_family(spec)
    result = {
        "spec": spec_to_dict(spec),
        "monodromy": report.monodromy.label,
        "round_trip_ok": report.monodromy == target,
        "d_max": report.d_max,
        "total_g": report.total_g,
    }
    payload = _payload("realize", inputs, result, list(report.notes))
    _emit(payload, args)
    return EXIT_OK


_COMMANDS = {
    "plan": _cmd_plan,
    "strata": _cmd_strata,
    "gamma": _cmd_gamma,
    "verify": _cmd_verify,
    "kodaira": _cmd_kodaira,
    "realize": _cmd_realize,
}


def run(argv: Sequence[str]) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"{TOOL_NAME}: error: {exc}\n")
        return EXIT_USAGE
    except DimensionCalculusError as exc:
        sys.stderr.write(f"{TOOL_NAME}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
