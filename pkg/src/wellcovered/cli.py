"""Command-line front end.

Subcommands: gen (write corpus/family graphs), wcdim, classify, mis,
compose, verify.  Exit codes: 0 success (for verify: no asserting check
failed), 1 usage or failed verification, 2 file parse error, 3 validation
error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .families import (ScsSpec, ScsValidationError, corpus_comments,
                       corpus_graph, corpus_names, complete, cycle,
                       figure1, figure2_family, figure6_composite, figure6_g1,
                       figure6_g2, path, scs_compose, scs_split, sierpinski)
from .graph import (EdgeListParseError, Graph, GraphError, format_edge_list,
                    is_chordal, is_sccg, parse_edge_list, simplicial_report)
from .harness import run_suite, suite_passed, summary_table
from .linalg import DEFAULT_FIELDS, FieldSpec, QQ
from .mis import (DEFAULT_MIS_CAP, MisCapExceededError, NotSccgError,
                  enumerate_mis, sccg_mis_count_formula)
from .wcspace import well_covered_space, wcspace_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; the contract wants 1
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _field_list(tokens: list[str] | None) -> tuple[FieldSpec, ...]:
    if not tokens:
        return DEFAULT_FIELDS
    return tuple(FieldSpec.parse(t) for t in tokens)


def _shipped_corpus_dir() -> str:
    return str(resources.files("wellcovered") / "corpus")


def _load_graph_arg(spec: str, corpus_dir: str | None) -> tuple[Graph, str]:
    """Resolve a graph argument: a readable path first, then a corpus name."""
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read()), os.path.basename(spec)
    name = spec.removesuffix(".g")
    if name in corpus_names():
        base = corpus_dir or _shipped_corpus_dir()
        file_path = os.path.join(base, name + ".g")
        if os.path.exists(file_path):
            with open(file_path, "r", encoding="utf-8") as fh:
                return parse_edge_list(fh.read()), name
        return corpus_graph(name), name
    raise GraphError(f"no such file or corpus graph: {spec}")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser, fields: bool = True) -> None:
    if fields:
        p.add_argument("--field", action="append", metavar="q|gf:<p>",
                       help="coefficient field, repeatable (default: q, gf:2, gf:3)")
    p.add_argument("--mis-cap", type=int, default=DEFAULT_MIS_CAP,
                   help="abort enumeration past this many MISs")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--corpus", metavar="DIR",
                   help="directory searched for corpus graph files")


def _build_parser() -> _Parser:
    top = _Parser(prog="wellcovered",
                  description="well-covered spaces of finite simple graphs")
    sub = top.add_subparsers(dest="command", required=True,
                         parser_class=_Parser)

    p_gen = sub.add_parser("gen",
                           help="generate a graph file (or the whole corpus)")
    p_gen.add_argument("family",
                       help="complete|path|cycle|sierpinski|figure1|figure2|"
                            "figure6-g1|figure6-g2|figure6|corpus|<corpus name>")
    p_gen.add_argument("param", nargs="?", type=int,
                       help="size parameter where the family takes one")
    p_gen.add_argument("-o", "--out", help="output file (default: stdout)")
    p_gen.add_argument("--corpus", metavar="DIR",
                       help="target directory for 'gen corpus'")

    p_dim = sub.add_parser("wcdim",
                           help="well-covered dimension per field")
    p_dim.add_argument("graph", help="edge-list file or corpus name")
    _add_common(p_dim)

    p_cls = sub.add_parser("classify",
                           help="chordal / SCCG / well-covered / splittable")
    p_cls.add_argument("graph", help="edge-list file or corpus name")
    _add_common(p_cls, fields=False)

    p_mis = sub.add_parser("mis",
                           help="count or list maximal independent sets")
    p_mis.add_argument("graph", help="edge-list file or corpus name")
    p_mis.add_argument("--mode", choices=("count", "list"), default="count")
    _add_common(p_mis, fields=False)

    p_comp = sub.add_parser("compose",
                            help="simplicial clique sum of two graphs")
    p_comp.add_argument("g1", help="first edge-list file or corpus name")
    p_comp.add_argument("g2", help="second edge-list file or corpus name")
    p_comp.add_argument("--glue", action="append", required=True,
                        metavar="U2:U1",
                        help="map g2 vertex U2 to g1 vertex U1, repeatable")
    p_comp.add_argument("-o", "--out", help="write the composite here")
    _add_common(p_comp)

    p_ver = sub.add_parser("verify",
                           help="run a verification suite")
    p_ver.add_argument("suite", nargs="?", default="default",
                       choices=("default", "full"))
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--threads", type=int, default=1)
    p_ver.add_argument("--random-count", type=int, default=120,
                       help="random connected graphs in the sweep")
    _add_common(p_ver)
    return top


def _family_graph(family: str, param: int | None) -> tuple[Graph, tuple[str, ...]]:
    sized = {"complete": complete, "path": path, "cycle": cycle}
    if family in sized:
        if param is None:
            raise GraphError(f"family {family!r} needs a size parameter")
        return sized[family](param), (f"{family} graph, n={param}",)
    if family == "sierpinski":
        if param is None:
            raise GraphError("sierpinski needs an order parameter")
        return (sierpinski(param).graph,
                (f"sierpinski_{param}: order-{param} Sierpinski gasket graph",))
    if family == "figure2":
        if param is None:
            raise GraphError("figure2 needs the clique-block parameter k")
        return (figure2_family(param),
                (f"figure2_k{param}: clique block on {param + 2} vertices"
                 " plus two-edge tail",))
    fixed = {"figure1": figure1, "figure6-g1": figure6_g1,
             "figure6-g2": figure6_g2, "figure6": figure6_composite}
    if family in fixed:
        if param is not None:
            raise GraphError(f"family {family!r} takes no parameter")
        name = family.replace("-", "_")
        return fixed[family](), corpus_comments(name)
    if family in corpus_names():
        if param is not None:
            raise GraphError(f"corpus graph {family!r} takes no parameter")
        return corpus_graph(family), corpus_comments(family)
    raise GraphError(f"unknown family {family!r}")


def _cmd_gen(args) -> int:
    if args.family == "corpus":
        target = args.corpus or "corpus"
        os.makedirs(target, exist_ok=True)
        for name in corpus_names():
            text = format_edge_list(corpus_graph(name), corpus_comments(name))
            with open(os.path.join(target, name + ".g"), "w",
                      encoding="utf-8") as fh:
                fh.write(text)
        sys.stdout.write(f"wrote {len(corpus_names())} graphs to {target}\n")
        return EXIT_OK
    g, comments = _family_graph(args.family, args.param)
    text = format_edge_list(g, comments)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_wcdim(args) -> int:
    g, graph_id = _load_graph_arg(args.graph, args.corpus)
    fields = _field_list(args.field)
    mis = enumerate_mis(g, args.mis_cap)
    rep = simplicial_report(g)
    spaces = [well_covered_space(g, f, mis=mis) for f in fields]
    dims = {s.field.label(): s.dimension for s in spaces}
    agree = len(set(dims.values())) == 1
    payload = {
        "graph": graph_id,
        "sc": rep.sc,
        "mis_count": len(mis),
        "fields_agree": agree,
        "reports": [wcspace_report(s, graph_id) for s in spaces],
    }
    dims_text = ", ".join(f"{k}={v}" for k, v in dims.items())
    text = (f"graph {graph_id}: wcdim {dims_text} "
            f"(fields {'agree' if agree else 'DISAGREE'}), sc={rep.sc}, "
            f"mis_count={len(mis)}\n")
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_classify(args) -> int:
    g, graph_id = _load_graph_arg(args.graph, args.corpus)
    rep = simplicial_report(g)
    mis = enumerate_mis(g, args.mis_cap)
    well_covered = len({len(s) for s in mis.sets}) == 1
    split = scs_split(g)
    payload = {
        "graph": graph_id,
        "n": g.n,
        "edges": len(g.edges),
        "chordal": is_chordal(g),
        "sccg": is_sccg(g),
        "well_covered": well_covered,
        "scs_splittable": split is not None,
        "sc": rep.sc,
        "simplicial_cliques": [sorted(c) for c in rep.cliques],
        "connection_set": sorted(rep.connection_set),
    }
    text = (f"graph {graph_id}: n={g.n} edges={len(g.edges)}\n"
            f"chordal={payload['chordal']} sccg={payload['sccg']} "
            f"well_covered={well_covered} scs_splittable={payload['scs_splittable']}\n"
            f"sc={rep.sc} cliques={payload['simplicial_cliques']} "
            f"connection_set={payload['connection_set']}\n")
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_mis(args) -> int:
    g, graph_id = _load_graph_arg(args.graph, args.corpus)
    capped = False
    try:
        mis = enumerate_mis(g, args.mis_cap)
        count: int | str = len(mis)
    except MisCapExceededError:
        if args.mode == "list":
            raise
        capped = True
        mis = None
        count = f">={args.mis_cap}"
    payload: dict = {"graph": graph_id, "count": count}
    lines = [f"graph {graph_id}: mis_count={count}"]
    if not capped and is_sccg(g):
        residual = sccg_mis_count_formula(g, "residual")
        simplicial = sccg_mis_count_formula(g, "simplicial")
        payload["formula_residual"] = residual.total
        payload["formula_simplicial"] = simplicial.total
        payload["formula_matches_enumeration"] = residual.total == len(mis)
        flag = "" if residual.total == len(mis) else "  [differs from enumeration]"
        lines.append(f"sccg formula: residual={residual.total} "
                     f"simplicial_only={simplicial.total}{flag}")
    if args.mode == "list" and mis is not None:
        payload["sets"] = mis.to_json()
        lines.extend(" ".join(map(str, s)) for s in mis.as_sorted_tuples())
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_RESOURCE if capped else EXIT_OK


def _parse_glue(tokens: list[str]) -> dict[int, int]:
    glue: dict[int, int] = {}
    for tok in tokens:
        try:
            u2, u1 = tok.split(":")
            glue[int(u2)] = int(u1)
        except ValueError:
            raise _UsageError(f"bad --glue token {tok!r}, expected U2:U1") from None
    return glue


def _cmd_compose(args) -> int:
    g1, id1 = _load_graph_arg(args.g1, args.corpus)
    g2, id2 = _load_graph_arg(args.g2, args.corpus)
    spec = ScsSpec(g1, g2, _parse_glue(args.glue))
    comp = scs_compose(spec)
    fields = _field_list(args.field)
    mis1 = enumerate_mis(g1, args.mis_cap)
    mis2 = enumerate_mis(g2, args.mis_cap)
    misc = enumerate_mis(comp.graph, args.mis_cap)
    dims = {}
    for f in fields:
        d1 = well_covered_space(g1, f, mis=mis1).dimension
        d2 = well_covered_space(g2, f, mis=mis2).dimension
        dc = well_covered_space(comp.graph, f, mis=misc).dimension
        dims[f.label()] = {"g1": d1, "g2": d2, "composite": dc,
                           "additive": dc == d1 + d2 - 1}
    sc = simplicial_report(comp.graph).sc
    payload = {
        "g1": id1, "g2": id2,
        "composite_n": comp.graph.n,
        "shared": sorted(comp.shared),
        "sc_composite": sc,
        "wcdim": dims,
    }
    comments = (f"simplicial clique sum of {id1} and {id2}",
                f"shared clique (composite labels): {sorted(comp.shared)}",
                f"g2 vertex map: {list(comp.g2_to_composite)}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_edge_list(comp.graph, comments))
    q = dims[QQ.label()] if QQ in fields else next(iter(dims.values()))
    text = (f"composite of {id1} and {id2}: n={comp.graph.n}, "
            f"shared={sorted(comp.shared)}\n"
            f"wcdim {q['g1']}+{q['g2']}-1={q['g1'] + q['g2'] - 1}, "
            f"computed={q['composite']}, sc={sc}\n")
    _emit(args, payload, text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    fields = _field_list(args.field)
    report = run_suite(suite=args.suite, seed=args.seed, fields=fields,
                       cap=args.mis_cap, random_count=args.random_count,
                       threads=args.threads)
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(summary_table(report))
    return EXIT_OK if suite_passed(report) else EXIT_USAGE


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "gen": _cmd_gen,
            "wcdim": _cmd_wcdim,
            "classify": _cmd_classify,
            "mis": _cmd_mis,
            "compose": _cmd_compose,
            "verify": _cmd_verify,
        }[args.command]
        return handler(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except EdgeListParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except MisCapExceededError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE
    except (ScsValidationError, NotSccgError, GraphError, ValueError) as exc:
        sys.stderr.write(f"validation error: {exc}\n")
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
