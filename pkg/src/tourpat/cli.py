"""Command line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import counting as C
from .detect import best_spine_decomposition, detect_pattern
from .enumerator import (
    alternating_enumerator_antimatching,
    alternating_enumerator_naive,
)
from .reductions import biased_tournament, clique_color_gadget, pied_graph, signature_gadget
from .signatures import erdos_moser_signature, is_signature, min_signature
from .structures import (
    ColoredGraph,
    ColoredTournament,
    Graph,
    Tournament,
    anti_matching,
    complete_graph,
)
from .suites import SUITES, run_suite
from .textio import ParseError, read_file, serialize
from .ttunique import experiment_tt_unique, reports_to_csv, tt_gadget, verify_partition


class UsageError(Exception):
    pass


def _load(path: str, kinds, what: str):
    try:
        obj = read_file(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if not isinstance(obj, kinds):
        raise UsageError(f"{path}: expected {what}, found {type(obj).__name__}")
    return obj


def _vertex_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


# --- subcommands ----------------------------------------------------------

def cmd_count(args) -> int:
    host = _load(args.host, (Tournament, Graph, ColoredTournament, ColoredGraph), "a host")
    if args.clique is not None:
        if isinstance(host, Graph):
            value = C.count_clique(args.clique, host)
        elif isinstance(host, ColoredGraph):
            value = C.count_cf_clique(args.clique, host)
        else:
            raise UsageError("clique counts need a graph host")
    else:
        if args.pattern is None:
            raise UsageError("give --pattern or --clique")
        pat = _load(args.pattern, (Tournament, Graph), "an uncolored pattern")
        if isinstance(pat, Tournament) and isinstance(host, Tournament):
            value = C.count_indsub_to(pat, host)
        elif isinstance(pat, Tournament) and isinstance(host, ColoredTournament):
            value = C.count_cf_indsub_to(pat, host)
        elif isinstance(pat, Graph) and isinstance(host, ColoredGraph):
            fn = {
                "cp-sub": C.count_cp_sub,
                "cp-indsub": C.count_cp_indsub,
                "cf-sub": C.count_cf_sub,
                "cf-indsub": C.count_cf_indsub,
            }[args.mode]
            value = fn(pat, host)
        else:
            raise UsageError(f"no count for a {type(pat).__name__} pattern in a {type(host).__name__} host")
    print(int(value > 0) if args.decide else value)
    return 0


def cmd_ae(args) -> int:
    t = _load(args.tournament, Tournament, "a tournament")
    if args.antimatching:
        if t.order < 2:
            raise UsageError("the anti-matching needs order at least 2")
        value = alternating_enumerator_antimatching(t) if args.fast else alternating_enumerator_naive(t, anti_matching(t.order))
    elif args.complete:
        value = alternating_enumerator_naive(t, complete_graph(t.order))
    elif args.graph:
        h = _load(args.graph, Graph, "a graph")
        value = alternating_enumerator_naive(t, h)
    else:
        raise UsageError("give --graph, --antimatching or --complete")
    print(value)
    return 0


def cmd_signature(args) -> int:
    t = _load(args.tournament, Tournament, "a tournament")
    if args.check is not None:
        print(int(is_signature(t, _vertex_list(args.check))))
        return 0
    sig = erdos_moser_signature(t, args.erdos_moser) if args.erdos_moser else min_signature(t)
    print(sig.size)
    print(" ".join(str(v) for v in sig.vertices))
    return 0


def cmd_core(args) -> int:
    t = _load(args.tournament, Tournament, "a tournament")
    dec = best_spine_decomposition(t)
    print(dec.length)
    for label, part in (("R+", dec.r_plus), ("R-", dec.r_minus), ("S", dec.spine)):
        print(" ".join([label] + [str(v) for v in sorted(part)]))
    return 0


def cmd_detect(args) -> int:
    t = _load(args.pattern, Tournament, "a tournament pattern")
    host = _load(args.host, Tournament, "a tournament host")
    print(int(detect_pattern(t, host)))
    return 0


def cmd_gadget(args) -> int:
    kind = args.kind
    if kind == "biased":
        g = _load(args.graph, ColoredGraph, "a colored graph")
        out = biased_tournament(g, _load(args.tournament, Tournament, "a tournament"))
    elif kind == "pied":
        host = _load(args.host, ColoredTournament, "a colored tournament")
        out = pied_graph(host, _load(args.tournament, Tournament, "a tournament"))
    elif kind == "signature":
        g = _load(args.graph, ColoredGraph, "a colored graph")
        t = _load(args.tournament, Tournament, "a tournament")
        out = signature_gadget(t, _vertex_list(args.rset or ""), g)
    elif kind == "ttunique":
        g = _load(args.graph, ColoredGraph, "a colored graph")
        t = _load(args.tournament, Tournament, "a tournament")
        zs = _vertex_list(args.zset or "")
        part = verify_partition(t, set(t.vertices) - set(zs), zs)
        out = tt_gadget(t, part, g)
    else:
        if args.k is None:
            raise UsageError("cliquecolor needs --k")
        out = clique_color_gadget(_load(args.graph, Graph, "an uncolored graph"), args.k)
    sys.stdout.write(serialize(out))
    return 0


def cmd_verify(args) -> int:
    manifest = run_suite(args.suite, args.seed)
    # wall time goes to stderr so stdout stays byte-identical across runs
    print(manifest.to_json(wall_time=False) if args.json else "\n".join(manifest.lines()))
    print(f"wall time {manifest.wall_time:.2f}s", file=sys.stderr)
    return 0 if manifest.passed else 1


def cmd_experiment(args) -> int:
    rep = experiment_tt_unique(args.k, args.trials, args.seed, workers=args.workers)
    text = reports_to_csv([rep])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    print(f"mean TT {rep.mean_tt:.4f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tourpat", description="Tournament pattern counting and reduction gadgets.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="exact pattern counts")
    c.add_argument("--pattern")
    c.add_argument("--host", required=True)
    c.add_argument("--clique", type=int, help="count k-cliques (colorful ones in a colored host)")
    c.add_argument("--mode", choices=["cp-sub", "cp-indsub", "cf-sub", "cf-indsub"], default="cp-sub",
                   help="problem for a graph pattern in a colored graph")
    c.add_argument("--decide", action="store_true", help="print 1/0 instead of the count")
    c.set_defaults(func=cmd_count)

    a = sub.add_parser("ae", help="alternating enumerator")
    a.add_argument("--tournament", required=True)
    g = a.add_mutually_exclusive_group()
    g.add_argument("--graph")
    g.add_argument("--antimatching", action="store_true")
    g.add_argument("--complete", action="store_true")
    a.add_argument("--fast", action="store_true", help="use the matching-parity formula (anti-matching only)")
    a.set_defaults(func=cmd_ae)

    s = sub.add_parser("signature", help="minimum or constructed signatures")
    s.add_argument("--tournament", required=True)
    s.add_argument("--check", help="test whether this vertex list is a signature")
    s.add_argument("--erdos-moser", type=int, metavar="P", help="construct a signature of size k - P")
    s.set_defaults(func=cmd_signature)

    o = sub.add_parser("core", help="core length and a best spine decomposition")
    o.add_argument("--tournament", required=True)
    o.set_defaults(func=cmd_core)

    d = sub.add_parser("detect", help="decide containment by rib guessing")
    d.add_argument("--pattern", required=True)
    d.add_argument("--host", required=True)
    d.set_defaults(func=cmd_detect)

    gd = sub.add_parser("gadget", help="build a reduction gadget")
    gd.add_argument("kind", choices=["biased", "pied", "signature", "ttunique", "cliquecolor"])
    gd.add_argument("--tournament")
    gd.add_argument("--graph")
    gd.add_argument("--host")
    gd.add_argument("--rset", help="signature vertices for the signature gadget")
    gd.add_argument("--zset", help="Z vertices of a TT-unique partition")
    gd.add_argument("--k", type=int)
    gd.set_defaults(func=cmd_gadget)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES))
    v.add_argument("--seed", required=True, type=_u64)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", help="empirical experiments")
    e.add_argument("name", choices=["ttunique"])
    e.add_argument("--k", required=True, type=int)
    e.add_argument("--trials", required=True, type=int)
    e.add_argument("--seed", required=True, type=_u64)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--out")
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
