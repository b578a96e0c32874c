"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 refused because a size bound was
exceeded. ``--format kv`` prints the machine-readable report described in
docs/output-format.md.
"""
import argparse
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .coloring import (is_star_coloring, is_strongly_unigraphic_coloring, is_unigraphic_coloring,
                       minimum_vertex_cover, star_coloring_from_vertex_cover, BadColorClass,
                       NonUniqueRealization)
from .errors import GraphError, SizeBoundError
from .graph import degree_set, is_tree
from .recognize import fast_filter, is_unigraph
from .search import bounds, default_workers
from .textio import format_coloring, read_coloring, read_edge_list, to_dot
from .trees import min_edge_dominating_set_tree, tree_unigraph_number

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INVALID, EXIT_BOUND = 0, 2, 3


@dataclass
class RunReport:
    command: str
    n: int = None
    m: int = None
    degrees: tuple = ()
    result: list = field(default_factory=list)  # ordered (key, value) pairs
    notices: list = field(default_factory=list)
    seconds: float = 0.0
    exit_code: int = EXIT_OK

    def put(self, key, value):
        self.result.append((key, value))

    def fingerprint(self, G):
        self.n, self.m, self.degrees = G.n, G.m, degree_set(G)


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (tuple, list)):
        return ",".join(str(x) for x in value)
    return str(value)


def _edges_str(G):
    return " ".join(f"{u}-{v}" for u, v in G.edge_list)


def _coloring_str(c):
    return " ".join(f"{u}-{v}:{k}" for (u, v), k in zip(c.graph.edge_list, c.colors.tolist()))


def render_kv(rep):
    lines = [f"unigraph-report {SCHEMA_VERSION}", f"command={rep.command}"]
    if rep.n is not None:
        lines += [f"input.n={rep.n}", f"input.m={rep.m}", f"input.degree_set={_fmt(rep.degrees)}"]
    lines += [f"result.{k}={_fmt(v)}" for k, v in rep.result]
    lines += [f"notice={x}" for x in rep.notices]
    lines += [f"time.seconds={rep.seconds:.6f}", f"exit={rep.exit_code}", "end"]
    return "\n".join(lines) + "\n"


def render_text(rep):
    out = []
    if rep.n is not None:
        out.append(f"graph: n={rep.n} m={rep.m} degrees=({_fmt(rep.degrees)})")
    for k, v in rep.result:
        out.append(f"{k.replace('_', ' ')}: {_fmt(v)}")
    for x in rep.notices:
        out.append(f"note: {x}")
    out.append(f"({rep.seconds:.3f}s)")
    return "\n".join(out) + "\n"


def _write_coloring(path, c, rep):
    if path:
        with open(path, "w") as fh:
            fh.write(format_coloring(c))
        rep.put("coloring_file", path)


# ------------------------------------------------------------ commands

def cmd_recognize(args, rep):
    G = read_edge_list(args.graph)
    rep.fingerprint(G)
    reasons = fast_filter(G)
    rep.put("filters_failed", list(reasons) or "none")
    try:
        verdict = is_unigraph(G)
    except SizeBoundError as exc:
        if not reasons:
            raise
        rep.notices.append(f"{exc}; verdict from necessary conditions, no witness")
        rep.put("is_unigraph", False)
        rep.put("decided_by", reasons[0])
        return
    rep.put("is_unigraph", verdict.is_unigraph)
    rep.put("decided_by", verdict.filter_used)
    if verdict.witness is not None:
        rep.put("witness_edges", _edges_str(verdict.witness))


def _failure(rep, verdict):
    f = verdict.failure
    if isinstance(f, BadColorClass):
        rep.put("failed_color", f.color)
        rep.put("failure", f.reason)
    elif isinstance(f, NonUniqueRealization):
        rep.put("failure", "non-unique-realization")
        rep.put("witness_edges", _edges_str(f.witness))
        rep.put("witness_coloring", _coloring_str(f.witness_coloring))


def cmd_check_coloring(args, rep):
    G = read_edge_list(args.graph)
    rep.fingerprint(G)
    c = read_coloring(G, args.coloring)
    rep.put("k", c.k)
    rep.put("star_coloring", is_star_coloring(G, c))
    verdict = is_unigraphic_coloring(G, c)
    rep.put("unigraphic", verdict.accepted)
    if not verdict:
        _failure(rep, verdict)
        return
    if args.strong:
        strong = is_strongly_unigraphic_coloring(G, c, connected_only=args.connected_only)
        rep.put("strongly_unigraphic", strong.accepted)
        if not strong:
            _failure(rep, strong)


def cmd_decompose(args, rep):
    G = read_edge_list(args.graph)
    rep.fingerprint(G)
    if args.bounds_only:
        r = bounds(G)
    else:
        r = bounds(G, exact_w=True, exact_s=args.strong)
    rep.put("lower", [f"{b.value}:{b.source}:{b.applies_to.replace(',', '+')}" for b in r.lower_bounds])
    rep.put("upper", [f"{b.value}:{b.source}:{b.applies_to.replace(',', '+')}" for b in r.upper_bounds])
    rep.put("w", r.w)
    if r.w_witness is not None:
        rep.put("w_coloring", _coloring_str(r.w_witness))
    if args.strong or r.s is not None:
        rep.put("s", r.s)
        if r.s_witness is not None:
            rep.put("s_coloring", _coloring_str(r.s_witness))
    rep.notices.extend(r.notices)
    if args.coloring_out and r.w_witness is not None:
        _write_coloring(args.coloring_out, r.w_witness, rep)
    missing = (r.w is None and not args.bounds_only) or (args.strong and r.s is None)
    if missing and any("exceeds the supported bound" in x for x in r.notices):
        # bounds are still reported; the exact value was refused
        rep.exit_code = EXIT_BOUND


def cmd_tree(args, rep):
    T = read_edge_list(args.graph)
    rep.fingerprint(T)
    if not is_tree(T):
        raise GraphError("input is not a tree")
    k, c = tree_unigraph_number(T)
    rep.put("w", k)
    if T.n <= 2000:
        rep.put("edge_dominating_set", [f"{u}-{v}" for u, v in min_edge_dominating_set_tree(T).edges])
        rep.put("coloring", _coloring_str(c))
    else:
        rep.notices.append("coloring omitted from the report for n > 2000; use --coloring-out")
    _write_coloring(args.coloring_out, c, rep)


def cmd_star_coloring(args, rep):
    G = read_edge_list(args.graph)
    rep.fingerprint(G)
    if args.cover is not None:
        try:
            cover = frozenset(int(x) for x in args.cover.split(",") if x.strip())
        except ValueError:
            raise GraphError(f"--cover expects comma-separated integers, got {args.cover!r}") from None
        rep.put("cover_source", "given")
    else:
        cover = minimum_vertex_cover(G).vertices
        rep.put("cover_source", "minimum")
    c = star_coloring_from_vertex_cover(G, cover)
    rep.put("cover", sorted(cover))
    rep.put("k", c.k)
    rep.put("coloring", _coloring_str(c))
    _write_coloring(args.coloring_out, c, rep)


def cmd_export_dot(args, rep):
    G = read_edge_list(args.graph)
    rep.fingerprint(G)
    c = read_coloring(G, args.coloring) if args.coloring else None
    with open(args.out, "w") as fh:
        fh.write(to_dot(G, c))
    rep.put("dot_file", args.out)


def build_parser():
    p = argparse.ArgumentParser(prog="unigraph", description="Decompose graphs into unigraphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--format", choices=("text", "kv"), default="text",
                   help="report format (kv: versioned key=value lines)")
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "kv"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("recognize", parents=[common], help="decide whether a graph is a unigraph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("check-coloring", parents=[common], help="validate an edge coloring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--strong", action="store_true", help="also run the strong check")
    s.add_argument("--connected-only", action="store_true",
                   help="strong check compares against connected graphs only")
    s.set_defaults(func=cmd_check_coloring)

    s = sub.add_parser("decompose", parents=[common], help="unigraph number, optionally the strong one")
    s.add_argument("graph")
    s.add_argument("--strong", action="store_true")
    s.add_argument("--bounds-only", action="store_true")
    s.add_argument("--coloring-out", metavar="FILE")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("tree", parents=[common], help="unigraph number of a tree in linear time")
    s.add_argument("graph")
    s.add_argument("--coloring-out", metavar="FILE")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("star-coloring", parents=[common], help="star coloring from a vertex cover")
    s.add_argument("graph")
    s.add_argument("--cover", metavar="V1,V2,...")
    s.add_argument("--coloring-out", metavar="FILE")
    s.set_defaults(func=cmd_star_coloring)

    s = sub.add_parser("export-dot", parents=[common], help="write Graphviz DOT, coloured if a coloring is given")
    s.add_argument("graph")
    s.add_argument("coloring", nargs="?")
    s.add_argument("out")
    s.set_defaults(func=cmd_export_dot)
    return p


def run(argv=None):
    args = build_parser().parse_args(argv)
    rep = RunReport(args.command)
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except SizeBoundError as exc:
        rep.notices.append(str(exc))
        rep.exit_code = EXIT_BOUND
    except (GraphError, OSError) as exc:
        rep.notices.append(f"error: {exc}")
        rep.exit_code = EXIT_INVALID
    rep.seconds = time.perf_counter() - t0
    if default_workers() > 1:
        rep.notices.append(f"workers={default_workers()}")
    return rep, args.format


def main(argv=None):
    rep, fmt = run(argv)
    text = render_kv(rep) if fmt == "kv" else render_text(rep)
    stream = sys.stderr if rep.exit_code == EXIT_INVALID and fmt == "text" else sys.stdout
    stream.write(text)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
