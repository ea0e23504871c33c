"""Command-line entry point: ``resolvesets <subcommand> ...``.

Exit codes: 0 resolved / success, 1 not resolved, 2 usage or input error,
3 solver timeout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .bounds import bound_table, exact_metric_dimension, format_bound_table
from .constructions import ConstructionPlan, construct
from .designs import (
    IncidenceStructure,
    affine_plane,
    hadamard_design,
    load_incidence_structure,
    projective_plane,
    save_incidence_structure,
    steiner_triple_system,
    infer_partial_geometry,
    validate_t_design,
)
from .exceptions import ParameterError
from .graphs import Family, GraphInstance
from .verify import format_candidate_set, load_candidate_set, verify_resolving

EXIT_OK, EXIT_UNRESOLVED, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

SOURCES = {
    "johnson_partition": "partition of [n] into (k+1)-sets",
    "kneser_partition": "partition of [n] into (2k-1)-sets plus one overlapping part",
    "kneser_diam3": "two overlapping windows, diameter-3 Kneser graphs",
    "matrix_basic": "k-set system with invertible incidence matrix",
    "toroidal": "straight k-paths of a toroidal grid",
}


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_method(text: str) -> tuple[str, dict]:
    name, _, rest = text.partition(":")
    name = name.replace("-", "_")
    if name != "toroidal":
        if rest:
            raise ParameterError(f"method {name} takes no parameters")
        return name, {}
    try:
        a, b = (int(x) for x in rest.split(","))
    except ValueError:
        raise ParameterError(f"toroidal needs sides as toroidal:a,b, got {text!r}") from None
    return name, {"a": a, "b": b}


def cmd_construct(args: argparse.Namespace) -> int:
    name, extra = _parse_method(args.method)
    plan: ConstructionPlan = construct(name, args.n, args.k, **extra)
    g = plan.instance
    if args.family is not None:
        wanted = Family.parse(args.family)
        if wanted is not plan.family:
            if plan.family is Family.KNESER and wanted is Family.JOHNSON:
                # Kneser resolving sets also resolve the Johnson graph on the same k-sets
                g = GraphInstance.johnson(plan.n, plan.k)
            else:
                raise ParameterError(f"{name} builds a resolving set for {plan.family.value} graphs only")
    _emit(format_candidate_set(g, plan.subsets), args.output)
    summary = {
        "method": plan.method,
        "instance": str(g),
        "size": plan.size,
        "predicted_size": plan.predicted_size,
        "family_count": plan.family_count,
        "source": SOURCES[plan.method],
    }
    out = sys.stdout if args.output not in (None, "-") else sys.stderr
    if args.json:
        print(json.dumps(summary, indent=2), file=out)
    else:
        for key, value in summary.items():
            print(f"{key}={value}", file=out)
    return EXIT_OK


def _build_design(kind: str) -> IncidenceStructure:
    name, _, arg = kind.partition(":")
    try:
        value = int(arg)
    except ValueError:
        raise ParameterError(f"design kind must look like pg:q, ag:q, hadamard:m or sts:n, got {kind!r}") from None
    if name == "pg":
        return projective_plane(value)
    if name == "ag":
        return affine_plane(value)
    if name == "hadamard":
        return hadamard_design(value)
    if name == "sts":
        return steiner_triple_system(value)
    raise ParameterError(f"unknown design kind {name!r}")


def design_claims(ic: IncidenceStructure) -> list[str]:
    """Instances whose resolving sets this structure provides, from its parameters."""
    v, size = ic.n_points, ic.block_size
    claims: list[str] = []
    if size is None or size < 2:
        return claims
    k = size
    if ic.n_blocks == v:
        for lam in range(1, k):
            if validate_t_design(ic, 2, lam)[0]:
                claims.append(f"resolves J({v},{k}) (blocks of a symmetric ({v},{k},{lam}) design)")
                if v == 2 * k + 1:
                    claims.append(f"resolves K({v},{k}) (odd graph, same distances as J({v},{k}))")
                break
    pg = infer_partial_geometry(ic)
    if pg is not None and pg.t > pg.s and v > 2 * k:
        claims.append(f"resolves K({v},{k}) (lines of a pg({pg.s},{pg.t},{pg.alpha}) with t > s)")
    if k >= 3 and v >= 4 * k - 2 and validate_t_design(ic, k - 1, 1)[0]:
        claims.append(f"resolves K({v},{k}) (Steiner system S({k - 1},{k},{v}))")
    return claims


def cmd_design(args: argparse.Namespace) -> int:
    if args.load:
        ic = load_incidence_structure(args.load)
        label = f"file {args.load}"
    else:
        if not args.kind:
            raise ParameterError("design needs --kind or --load")
        ic = _build_design(args.kind)
        label = args.kind
    if args.output:
        save_incidence_structure(ic, args.output)
    elif not args.json:
        sys.stdout.write(ic.to_text())
    claims = design_claims(ic)
    info = {
        "design": label,
        "points": ic.n_points,
        "blocks": ic.n_blocks,
        "block_size": ic.block_size,
        "claims": claims,
    }
    out = sys.stdout if args.output or args.json else sys.stderr
    if args.json:
        print(json.dumps(info, indent=2), file=out)
    else:
        print(f"design={label} points={ic.n_points} blocks={ic.n_blocks} block_size={ic.block_size}", file=out)
        for claim in claims or ["no resolving-set result applies"]:
            print(f"  {claim}", file=out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.design:
        ic = load_incidence_structure(args.design)
        if args.family is None or ic.block_size is None:
            raise ParameterError("--design needs --family and blocks of one size")
        g = GraphInstance(Family.parse(args.family), ic.n_points, ic.block_size)
        landmarks = list(ic.blocks)
    elif args.candidates:
        g, landmarks = load_candidate_set(args.candidates)
        if args.family is not None:
            g = GraphInstance(Family.parse(args.family), g.n, g.k)
    else:
        raise ParameterError("verify needs a candidate file or --design FILE")
    report = verify_resolving(g, landmarks, oracle=args.oracle, budget=args.budget)
    text = report.to_json() + "\n" if args.json else report.to_text()
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text)
    return EXIT_OK if report.resolved else EXIT_UNRESOLVED


def cmd_exact(args: argparse.Namespace) -> int:
    g = GraphInstance(Family.parse(args.family), args.n, args.k)
    res = exact_metric_dimension(
        g,
        timeout=args.timeout,
        limit=args.limit,
        use_formula_bound=not args.no_formula_bound,
        symmetry=args.symmetry,
    )
    if args.json:
        print(json.dumps({"instance": str(g), **res.to_dict()}, indent=2))
    else:
        print(f"instance={g}")
        print(f"dimension={res.dimension}")
        print(f"proof={res.proof}")
        print(f"nodes_explored={res.nodes_explored}")
        print(f"elapsed={res.elapsed:.3f}")
        print("basis=" + "; ".join(map(str, res.basis)))
    return EXIT_OK if res.exhaustive else EXIT_TIMEOUT


def cmd_bounds(args: argparse.Namespace) -> int:
    records = bound_table(args.family, args.n, args.k)
    if args.json:
        print(json.dumps([r.to_dict() for r in records], indent=2))
    else:
        sys.stdout.write(format_bound_table(records))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resolvesets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p, required=True):
        p.add_argument("--family", choices=[f.value for f in Family], required=required)
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--k", type=int, required=required)

    p = sub.add_parser("construct", help="build a candidate resolving set")
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", required=True,
                   help="johnson-partition, kneser-partition, kneser-diam3, matrix-basic or toroidal:a,b")
    p.add_argument("-o", "--output", help="candidate-set file (default stdout)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("design", help="build or load a design and list what it resolves")
    p.add_argument("--kind", help="pg:q, ag:q, hadamard:m or sts:n")
    p.add_argument("--load", help="incidence-structure file to validate instead")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("verify", help="check a candidate set exhaustively")
    p.add_argument("candidates", nargs="?", help="candidate-set file")
    p.add_argument("--design", help="use the blocks of an incidence-structure file")
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--oracle", choices=["formula", "bfs"], default="formula")
    p.add_argument("--budget", type=int, help="vertex budget (default from the library)")
    p.add_argument("--report", help="also write the report here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact metric dimension by branch and bound")
    instance_args(p)
    p.add_argument("--timeout", type=float)
    p.add_argument("--limit", type=int, help="refuse graphs with more vertices")
    p.add_argument("--no-formula-bound", action="store_true",
                   help="do not stop early at the determining-number lower bound")
    p.add_argument("--symmetry", action="store_true",
                   help="fix the first two landmarks up to relabelling of [n]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="table of known bounds")
    instance_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
