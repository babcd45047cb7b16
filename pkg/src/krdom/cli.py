"""Command-line entry point: ``krdom <command> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 infeasible or mismatch.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from . import formulas, graph, solvers, verify
from .graph import Graph, GraphError
from .predicates import Variant

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, ...]:
    """``"4..12"`` (inclusive), ``"2,3,5"`` or a single integer."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..", 1)
                a, b = int(lo), int(hi)
                if b < a:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad integer range {text!r}; use e.g. 4..12 or 2,3") from None
    return tuple(out)


# ------------------------------------------------------------------ graph building

FAMILY_ARITY = {
    "complete": 1, "cycle": 1, "path": 1, "empty": 1, "matching": 1,
    "multipartite": None, "bipartite": 2, "example48": 0,
}
DERIVED = ("complement", "prism", "corona", "kjoin")


def _ints(args: Sequence[str], family: str) -> list[int]:
    try:
        return [int(a) for a in args]
    except ValueError:
        raise UsageError(f"{family}: parameters must be integers, got {' '.join(args)}") from None


def build_family(words: Sequence[str]) -> Graph:
    """Build a base family graph from ``[name, *int params]``."""
    if not words:
        raise UsageError("missing family name")
    name, params = words[0], _ints(words[1:], words[0])
    if name not in FAMILY_ARITY:
        raise UsageError(f"unknown family {name!r}; known: {', '.join([*FAMILY_ARITY, *DERIVED])}")
    arity = FAMILY_ARITY[name]
    if arity is not None and len(params) != arity:
        raise UsageError(f"{name} takes {arity} parameter(s), got {len(params)}")
    for p in params:
        graph.check_size(p)
    match name:
        case "complete":
            return graph.complete(*params)
        case "cycle":
            return graph.cycle(*params)
        case "path":
            return graph.path(*params)
        case "empty":
            return graph.empty(*params)
        case "matching":
            return graph.perfect_matching(*params)
        case "bipartite":
            return graph.complete_bipartite(*params)
        case "multipartite":
            if not params:
                raise UsageError("multipartite needs part sizes")
            return graph.complete_multipartite(params)
        case _:
            return graph.example48()


def build_graph(family: str, params: Sequence[str], of: Sequence[str] | None,
                with_: Sequence[str] | None, k: int | None) -> Graph:
    if family not in DERIVED:
        return build_family([family, *params])
    if params:
        raise UsageError(f"{family} takes its base graph via --of, not positional parameters")
    if not of:
        raise UsageError(f"{family} needs --of FAMILY PARAMS")
    base = build_family(of)
    if family == "complement":
        return graph.complement(base)
    if family == "prism":
        return graph.complementary_prism(base)
    if family == "corona":
        return graph.corona_k1(base)
    if not with_:
        raise UsageError("kjoin needs --with FAMILY PARAMS for the second graph")
    if k is None:
        raise UsageError("kjoin needs --k")
    other = build_family(with_)
    assignment = graph.cyclic_assignment(base.n, other.n, k)
    return graph.k_join(base, other, k, assignment)


def stats_line(g: Graph) -> str:
    return f"n={g.n} m={g.m} delta={g.min_degree} Delta={g.max_degree}"


def load_graph(path: str) -> Graph:
    if path == "-":
        return graph.parse_graph(sys.stdin.read())
    return graph.read_graph(path)


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _variant(args: argparse.Namespace) -> Variant:
    if args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    return Variant(args.k, total=args.total, restrained=args.restrained)


def _set_text(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


# ------------------------------------------------------------------ commands


def cmd_gen(args: argparse.Namespace) -> int:
    g = build_graph(args.family, args.params, args.of, args.with_, args.k)
    text = graph.serialize_graph(g)
    if args.out is None:
        sys.stdout.write(text)
        print(stats_line(g), file=sys.stderr)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(stats_line(g))
    return EXIT_OK


def _print_partition(label: str, res: solvers.DomaticResult, out: TextIO) -> int:
    if not res.optimal:
        print("infeasible", file=out)
        return EXIT_FAIL
    parts = "|".join(_set_text(c) for c in res.witness)
    print(f"{label}={res.value} partition={parts}", file=out)
    return EXIT_OK


def cmd_compute(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    variant = _variant(args)
    with _output(args.out) as out:
        if args.star:
            return _print_partition("star_domatic", solvers.star_domatic(g, variant), out)
        if args.domatic:
            return _print_partition("domatic", solvers.domatic(g, variant), out)
        if args.all_min:
            sets = solvers.all_min_sets(g, variant)
            if not sets:
                print("infeasible", file=out)
                return EXIT_FAIL
            print(f"gamma={len(sets[0])} count={len(sets)}", file=out)
            for s in sets:
                print(_set_text(s), file=out)
            return EXIT_OK
        res = solvers.gamma(g, variant)
        if not res.optimal:
            print("infeasible", file=out)
            return EXIT_FAIL
        print(f"gamma={res.value} witness={_set_text(res.witness)}", file=out)
    return EXIT_OK


def cmd_domatic(args: argparse.Namespace) -> int:
    args.domatic, args.all_min = True, False
    return cmd_compute(args)


def cmd_decompose(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if args.k < 2:
        raise UsageError("decompose needs --k >= 2")
    d = solvers.decompose(g, args.k)
    with _output(args.out) as out:
        if d is None:
            print("infeasible", file=out)
            return EXIT_FAIL
        holds = solvers.decomposition_holds(g, args.k, d)
        print(f"core={_set_text(d.core)} outer={_set_text(d.outer)} m={d.m} "
              f"holds={'yes' if holds else 'no'}", file=out)
    return EXIT_OK if holds else EXIT_FAIL


_GRID_FLAGS = ("n", "m", "k", "ell", "p", "total")


def _spec_for(claim_id: str, args: argparse.Namespace) -> verify.SweepSpec:
    grid: dict[str, tuple] = {}
    for name in _GRID_FLAGS:
        value = getattr(args, f"grid_{name}", None)
        if value is not None:
            grid[name] = parse_range(value)
    if args.family:
        grid["family"] = tuple(args.family)
    if args.source:
        grid["source"] = (args.source,)
    return verify.SweepSpec(claim_id, grid, cap=args.cap, seed=args.seed, max_n=args.max_n)


def _emit_report(rep: verify.Report, args: argparse.Namespace, out: TextIO, header: bool) -> None:
    if args.format == "csv":
        text = rep.to_csv()
        out.write(text if header else text.split("\n", 1)[1])
    elif args.table:
        out.write(rep.summary() + "\n")
        out.write(rep.to_table(*args.table))
    else:
        out.write(rep.to_text(show_matches=args.show_matches))


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        with _output(args.out) as out:
            table = formulas.registry_table()
            if args.format == "csv":
                import csv
                w = csv.DictWriter(out, fieldnames=list(table[0]), lineterminator="\n")
                w.writeheader()
                w.writerows(table)
            else:
                for row in table:
                    print(f"{row['id']:<24} {row['kind']:<12} params={row['params']:<14} "
                          f"must_match={row['must_match']:<3} {row['precondition']}", file=out)
        return EXIT_OK
    if args.all == bool(args.claim):
        raise UsageError("give exactly one claim id or --all")
    ids = verify.claim_ids() if args.all else [args.claim]
    for cid in ids:
        try:
            formulas.get_claim(cid)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    status = EXIT_OK
    with _output(args.out) as out:
        for i, cid in enumerate(ids):
            rep = verify.sweep(_spec_for(cid, args))
            _emit_report(rep, args, out, header=i == 0)
            if rep.mismatches and formulas.get_claim(cid).must_match:
                status = EXIT_FAIL
            if not rep.witnesses_ok:
                status = EXIT_FAIL
    return status


def cmd_sweep(args: argparse.Namespace) -> int:
    ks = parse_range(args.k_range)
    status = EXIT_OK
    reports: list[verify.Report] = []
    if args.what in ("implications", "all"):
        reports.extend(verify.check_implications(args.source or "enumeration", ks, args.max_n,
                                                 args.count, args.seed).values())
    if args.what in ("observations", "all"):
        rep = verify.Report("observation-chain")
        if args.source == "random":
            import random
            rng = random.Random(args.seed)
            graphs = (verify.random_graph(rng.randint(1, args.max_n), rng.random(), rng)
                      for _ in range(args.count))
        else:
            graphs = verify.enumerate_graphs(args.max_n)
        for g in graphs:
            for k in ks:
                rep.extend(verify.check_observation_chain(g, k))
        reports.append(rep)
    with _output(args.out) as out:
        for i, rep in enumerate(reports):
            _emit_report(rep, args, out, header=i == 0)
            if rep.mismatches or not rep.witnesses_ok:
                status = EXIT_FAIL
    return status


def cmd_example48(args: argparse.Namespace) -> int:
    if args.graph_out:
        graph.write_graph(graph.example48(), args.graph_out)
    rep = verify.example48_report()
    with _output(args.out) as out:
        _emit_report(rep, args, out, header=True)
    return EXIT_FAIL if rep.mismatches else EXIT_OK


# ------------------------------------------------------------------ parser


def _add_variant_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=1, help="tuple parameter (default 1)")
    p.add_argument("--total", action="store_true", help="count open neighborhoods")
    p.add_argument("--restrained", action="store_true", help="add the outside-neighbor condition")


def _add_report_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out", help="write the report to this file")
    p.add_argument("--show-matches", action="store_true", help="list matching rows too")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None, help="largest instance order")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="krdom", description="k-tuple restrained domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="build a graph family and write its edge list")
    p.add_argument("family", help=f"one of {', '.join([*FAMILY_ARITY, *DERIVED])}")
    p.add_argument("params", nargs="*", help="integer family parameters")
    p.add_argument("--of", nargs="+", metavar="ARG", help="base graph for derived families")
    p.add_argument("--with", dest="with_", nargs="+", metavar="ARG", help="second graph for kjoin")
    p.add_argument("--k", type=int, default=None, help="join multiplicity for kjoin")
    p.add_argument("--out", help="edge-list file (default: stdout, stats on stderr)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compute", help="minimum set (or domatic number) of a graph file")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    _add_variant_flags(p)
    p.add_argument("--domatic", action="store_true", help="compute the domatic number instead")
    p.add_argument("--star", action="store_true", help="star domatic number")
    p.add_argument("--all-min", action="store_true", help="list every minimum set")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("domatic", help="domatic partition of a graph file")
    p.add_argument("graph")
    _add_variant_flags(p)
    p.add_argument("--star", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_domatic)

    p = sub.add_parser("decompose", help="split a graph into a minimum kRDS core and the rest")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check formula claims against the solvers")
    p.add_argument("claim", nargs="?", help="claim id (see --list)")
    p.add_argument("--all", action="store_true", help="run every registered claim")
    p.add_argument("--list", action="store_true", help="print the claim registry")
    p.add_argument("--table", nargs=2, metavar=("ROW", "COL"), help="grid view over two parameters")
    for name in _GRID_FLAGS:
        p.add_argument(f"--{name}", dest=f"grid_{name}", metavar="RANGE", help=f"values of {name}, e.g. 4..12")
    p.add_argument("--family", nargs="+", help="graph families for prism claims")
    p.add_argument("--source", choices=("exhaustive", "random"), help="graph source for domatic bounds")
    p.add_argument("--cap", type=int, default=None, help="applicable instances for random claims")
    _add_report_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="implication and observation checks over many graphs")
    p.add_argument("what", choices=("implications", "observations", "all"))
    p.add_argument("--k", dest="k_range", default="1..2", metavar="RANGE")
    p.add_argument("--source", choices=("enumeration", "random"), default=None)
    p.add_argument("--count", type=int, default=200, help="random graphs to draw")
    _add_report_flags(p)
    p.set_defaults(func=cmd_sweep, table=None)

    p = sub.add_parser("example48", help="checks on the bundled 16-vertex example")
    p.add_argument("--graph-out", help="also write the graph's edge list here")
    _add_report_flags(p)
    p.set_defaults(func=cmd_example48, table=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", None) is None and args.command == "sweep":
        args.max_n = 6
    try:
        return args.func(args)
    except (UsageError, GraphError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"krdom: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
