"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
guard.  Everything written to stdout is deterministic for fixed inputs;
timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .campaign import CHECKS, DEFAULT_DENSITIES, CampaignConfig, run_campaign
from .complex import SimplicialComplex, complex_to_dot, complex_to_json, strong_collapse
from .concepts import enumerate_concepts
from .dowker import DEFAULT_MAX_DIMENSION, dowker_complex, rectangle_complex
from .errors import DimensionGuard, DowkerError
from .homology import DEFAULT_MAX_SIMPLICES, check_fiber_hypothesis, homology, parse_coeff
from .relation import Relation, load_relation, transpose

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
KINDS = ("dowker", "dowker-transpose", "rectangle")


class InputError(Exception):
    pass


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _load(args) -> Relation:
    try:
        return load_relation(args.input, args.format)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror or exc}") from exc


def _complex(R: Relation, kind: str, max_dimension: int) -> SimplicialComplex:
    if kind == "dowker":
        return dowker_complex(R)
    if kind == "dowker-transpose":
        return dowker_complex(transpose(R))
    return rectangle_complex(R, max_dimension)


def _emit(text: str, output: str | None, summary: str | None = None):
    """Write ``text`` to ``output`` (summary on stdout) or to stdout (summary on stderr)."""
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        if summary:
            print(summary)
    else:
        sys.stdout.write(text)
        if summary:
            print(summary, file=sys.stderr)


def cmd_build(args) -> int:
    K = _complex(_load(args), args.kind, args.max_dimension)
    summary = f"{len(K.facets)} facets, {len(K.vertex_set)} vertices, dimension {K.dimension}"
    _emit(complex_to_json(K), args.output, summary)
    return EXIT_OK


def cmd_homology(args) -> int:
    try:
        coeff = parse_coeff(args.coeff)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    K = _complex(_load(args), args.kind, args.max_dimension)
    if args.collapse:
        K, _ = strong_collapse(K)
    H = homology(
        K,
        reduced=args.reduced,
        coeff=coeff,
        max_dimension=args.max_dimension,
        max_simplices=args.max_simplices,
    )
    sys.stdout.write(H.to_json())
    return EXIT_OK


def cmd_concepts(args) -> int:
    cs = enumerate_concepts(_load(args))
    doc = {"count": len(cs), "concepts": [c.to_dict() for c in cs]}
    _emit(_dumps(doc), args.output, f"{len(cs)} concepts")
    return EXIT_OK


def cmd_fiber(args) -> int:
    R = _load(args)
    sigma = [v for v in args.simplex.split(",") if v]
    if not sigma:
        raise InputError("--simplex needs at least one vertex")
    rep = check_fiber_hypothesis(
        R, sigma, max_dimension=args.max_dimension, max_simplices=args.max_simplices
    )
    doc = {
        "sigma": list(rep.sigma),
        "fiber": {"vertices": sorted(rep.fiber.support), "facets": [list(f) for f in rep.fiber.facets]},
        "fiber_reduced_homology": rep.fiber_homology.to_dict(),
        "fiber_acyclic": rep.fiber_acyclic,
        "witnesses": sorted(rep.witnesses),
        "inverse_image": list(rep.inverse_image),
        "inverse_image_is_simplex": rep.inverse_image_ok,
        "cover": [list(t) for t in rep.cover],
        "cover_generates_fiber": rep.cover_ok,
        "nerve_facets": [list(f) for f in rep.nerve.facets],
        "sigma_vertex": rep.sigma_vertex,
        "sigma_is_cone_point": rep.sigma_is_cone_point,
        "passed": rep.passed,
    }
    sys.stdout.write(_dumps(doc))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _float_list(text: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from exc
    if not vals or any(not 0.0 <= v <= 1.0 for v in vals):
        raise argparse.ArgumentTypeError("densities must lie in [0, 1]")
    return vals


def _check_list(text: str) -> tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [n for n in names if n not in CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown checks {unknown}; choose from {', '.join(CHECKS)}"
        )
    return names


def _non_negative(text: str) -> int:
    try:
        n = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def _positive(text: str) -> int:
    n = _non_negative(text)
    if n == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def cmd_verify(args) -> int:
    config = CampaignConfig(
        trials=args.trials,
        seed=args.seed,
        max_x=args.max_x,
        max_y=args.max_y,
        densities=args.density_grid,
        checks=args.checks,
        fiber_max_dim=args.fiber_max_dim,
        max_simplices=args.max_simplices,
        max_dimension=args.max_dimension,
        shrink=not args.no_shrink,
    )
    report = run_campaign(config, threads=args.threads)
    text = report.to_json()
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    sys.stdout.write(text)
    print(
        f"{report.trials} trials, {len(report.failures)} failures, "
        f"{len(report.skipped)} skipped, {report.elapsed:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_export_dot(args) -> int:
    K = _complex(_load(args), args.kind, args.max_dimension)
    _emit(complex_to_dot(K, name=args.kind), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dowkerlab",
        description="Dowker and rectangle complexes of finite relations, with exact homology checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def relation_input(p):
        p.add_argument("input", help="relation file (.json or .csv)")
        p.add_argument("--format", choices=("json", "csv"), help="override the file extension")

    def kind(p):
        p.add_argument("--kind", choices=KINDS, default="dowker")

    def guards(p, simplices=True):
        p.add_argument("--max-dimension", type=_non_negative, default=DEFAULT_MAX_DIMENSION)
        if simplices:
            p.add_argument("--max-simplices", type=_positive, default=DEFAULT_MAX_SIMPLICES)

    p = sub.add_parser("build", help="build a complex and write its canonical JSON")
    relation_input(p)
    kind(p)
    guards(p, simplices=False)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("homology", help="homology of a complex built from a relation")
    relation_input(p)
    kind(p)
    guards(p)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--coeff", default="z", help="z, q, z2 or zp:<prime> (default z)")
    p.add_argument("--collapse", action="store_true", help="compute on the strong-collapse core")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("concepts", help="all formal concepts in lectic order")
    relation_input(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_concepts)

    p = sub.add_parser("fiber", help="fiber of the projection onto the Dowker complex over one simplex")
    relation_input(p)
    guards(p)
    p.add_argument("--simplex", required=True, help="comma-separated x labels, e.g. a,b")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("verify", help="randomized verification campaign")
    p.add_argument("--trials", type=_non_negative, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-x", type=_positive, default=5)
    p.add_argument("--max-y", type=_positive, default=5)
    p.add_argument(
        "--density-grid",
        type=_float_list,
        default=DEFAULT_DENSITIES,
        help="comma-separated densities (default 0.1,...,0.9)",
    )
    p.add_argument(
        "--checks",
        type=_check_list,
        default=CHECKS,
        help=f"comma-separated subset of {','.join(CHECKS)} (default all)",
    )
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--report", help="also write the JSON report to this file")
    p.add_argument("--fiber-max-dim", type=_non_negative, default=6)
    p.add_argument("--max-simplices", type=_positive, default=200_000)
    p.add_argument("--max-dimension", type=_non_negative, default=DEFAULT_MAX_DIMENSION)
    p.add_argument("--no-shrink", action="store_true", help="report failing inputs unshrunk")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="1-skeleton as an undirected Graphviz graph")
    relation_input(p)
    kind(p)
    guards(p, simplices=False)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, DowkerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
