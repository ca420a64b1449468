"""Command-line front end.

Exit status: 0 on success, 1 on usage errors (bad arguments, unreadable or
malformed input), 2 on domain errors (disconnected graph, wrong diameter, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import survey
from .balance import balance_profile, is_distance_degree_regular, w_partition
from .classifiers import classify_diameter_three_bipartite, classify_diameter_two
from .errors import DbalError, FormatError, VertexOutOfRange, WrongDiameter
from .generators import from_spec
from .graph import all_pairs_distances, bipartition, read_edge_list, require_connected


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", metavar="SPEC", help="generator string, e.g. gp:13,3")
    src.add_argument("--edges", metavar="FILE", help="edge-list file")


def _load(args):
    if args.gen is not None:
        return from_spec(args.gen)
    try:
        return read_edge_list(args.edges)
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {args.edges}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dbal", description="Distance-balance levels of finite graphs.")
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker processes for scans (default ${survey.THREADS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="balance profile, DDR and bipartite flags")
    _add_graph_source(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    p = sub.add_parser("pair", help="closer/equidistant counts for one vertex pair")
    _add_graph_source(p)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)

    p = sub.add_parser("gp-table", help="profiles of GP(n,k), 2 <= k < n/2, as CSV")
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="conjecture scanners")
    scans = p.add_subparsers(dest="scan", required=True, parser_class=_Parser)
    s = scans.add_parser("diametral", help="inner vertices at diametral distance from u_0")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--nonempty-only", action="store_true")
    s = scans.add_parser("threshold", help="check the conjectured threshold n_k")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s = scans.add_parser("highly", help="GP(n,k) balanced at every level")
    s.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("classify", help="diameter-2 or bipartite diameter-3 classification")
    _add_graph_source(p)
    return parser


def _analyze(args, out) -> None:
    g = _load(args)
    dm = require_connected(g, all_pairs_distances(g))
    prof = balance_profile(g, dm)
    ddr = is_distance_degree_regular(g, dm)
    bip = bipartition(g) is not None
    if args.csv:
        out.write(survey.profile_to_csv(prof, ddr, bip))
    elif args.json:
        out.write(json.dumps(survey.profile_to_dict(prof, ddr, bip)) + "\n")
    else:
        out.write(f"n={prof.n} diameter={prof.diameter} levels={list(prof.levels)} "
                  f"highly={prof.highly} ddr={ddr} bipartite={bip}\n")
        for lvl, pb in prof.witnesses.items():
            out.write(f"  level {lvl}: pair ({pb.u},{pb.v}) closer_u={pb.closer_to_u} "
                      f"closer_v={pb.closer_to_v}\n")


def _pair(args, out) -> None:
    g = _load(args)
    for x in (args.u, args.v):
        if not 0 <= x < g.n:
            raise VertexOutOfRange(f"vertex {x} not in [0, {g.n})")
    pb = w_partition(g, args.u, args.v)
    doc = asdict(pb)
    doc["balanced"] = pb.balanced
    out.write(json.dumps(doc) + "\n")


def _classify(args, out) -> None:
    g = _load(args)
    dm = require_connected(g, all_pairs_distances(g))
    prof = balance_profile(g, dm)
    if prof.diameter == 2:
        c = classify_diameter_two(g, dm)
        doc = {"classifier": "diameter-2", "kind": c.kind.value,
               "factors": [{"vertices": list(f.vertices), "degree": f.degree} for f in c.factors]}
    elif prof.diameter == 3 and bipartition(g) is not None:
        c = classify_diameter_three_bipartite(g, dm)
        doc = {"classifier": "bipartite-diameter-3", "case": c.case.value,
               "size_x": c.size_x, "size_y": c.size_y,
               "degree_x": c.degree_x, "degree_y": c.degree_y}
    else:
        what = "non-bipartite diameter-3" if prof.diameter == 3 else f"diameter-{prof.diameter}"
        raise WrongDiameter(f"no classifier for {what} graphs; use 'analyze' instead")
    doc["predicted_levels"] = list(c.predicted_levels)
    doc["levels"] = list(prof.levels)
    doc["agrees"] = tuple(c.predicted_levels) == prof.levels
    out.write(json.dumps(doc) + "\n")


def _scan(args, out) -> None:
    if args.scan == "diametral":
        reps = survey.scan_diametral(args.n_max, include_empty=not args.nonempty_only,
                                     workers=args.threads)
        out.write(json.dumps([asdict(r) for r in reps]) + "\n")
    elif args.scan == "threshold":
        rep = survey.scan_threshold(args.k, args.n_max, workers=args.threads)
        out.write(json.dumps(asdict(rep)) + "\n")
    else:
        pairs = survey.scan_highly_db_gp(args.n_max, workers=args.threads)
        out.write(json.dumps([list(p) for p in pairs]) + "\n")


def _gp_table(args, out) -> None:
    rows = survey.run_gp_table(args.n_min, args.n_max, workers=args.threads)
    out.write(survey.rows_to_json(rows) + "\n" if args.json else survey.rows_to_csv(rows))


_COMMANDS = {
    "analyze": _analyze,
    "pair": _pair,
    "classify": _classify,
    "scan": _scan,
    "gp-table": _gp_table,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        if args.threads is not None and args.threads < 1:
            raise UsageError("--threads must be >= 1")
        _COMMANDS[args.command](args, out)
    except (UsageError, FormatError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except DbalError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    return 0


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
