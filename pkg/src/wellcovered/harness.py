"""Executable checks for every dimension theorem, counting formula, and
structural lemma, over the named corpus and a seeded random corpus.

Each check returns a structured Verdict.  Failing verdicts always carry a
witness that can be re-verified from the primitive operations alone.  Two
checks (mis_structure, mis_count) are report-only: the counting statements
they test are known to disagree with enumeration on some corpus graphs, so
the suite records the numbers verbatim instead of asserting agreement.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from .families import (ScsSpec, ScsValidationError, figure6_spec, named_corpus,
                       scs_compose, sierpinski, triangle_pendant_spec)
from .graph import (DisconnectedGraphError, Graph, is_chordal, is_sccg,
                    simplicial_report)
from .linalg import DEFAULT_FIELDS, FieldSpec, QQ, span_equal
from .mis import (DEFAULT_MIS_CAP, MisCapExceededError, enumerate_mis, is_mis,
                  sccg_mis_count_formula, split_cliques_by_neighborhood)
from .wcspace import indicator_weighting, well_covered_space
from . import families

REPORT_ONLY_CHECKS = frozenset({"mis_structure", "mis_count"})

_SELECTION_CAP = 10**6  # guard for the exhaustive sum-selection search


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check on one input: holds, fails, or not_applicable.

    A fails verdict always carries witness data sufficient to re-run the
    underlying primitive; a not_applicable verdict names the precondition
    that did not hold.
    """

    check_id: str
    graph_ids: tuple[str, ...]
    status: str
    details: dict = dc_field(default_factory=dict)
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "inputs": list(self.graph_ids),
            "status": self.status,
            "details": self.details,
            "witness": self.witness,
        }


def _holds(check: str, ids: Sequence[str], ok: bool, details: dict,
           witness: dict | None = None) -> Verdict:
    return Verdict(check_id=check, graph_ids=tuple(ids),
                   status="holds" if ok else "fails",
                   details=details, witness=None if ok else witness)


def _na(check: str, ids: Sequence[str], reason: str,
        details: dict | None = None) -> Verdict:
    d = dict(details or {})
    d["reason"] = reason
    return Verdict(check_id=check, graph_ids=tuple(ids),
                   status="not_applicable", details=d)


@lru_cache(maxsize=None)
def _mis(g: Graph, cap: int):
    return enumerate_mis(g, cap)


@lru_cache(maxsize=None)
def _space(g: Graph, fld: FieldSpec, cap: int):
    return well_covered_space(g, fld, mis=_mis(g, cap), cap=cap)


def _sorted_sets(sets: Iterable[frozenset]) -> list[list[int]]:
    return [sorted(s) for s in sets]


# --- per-graph checks ---------------------------------------------------------

def check_lower_bound(g: Graph, graph_id: str,
                      cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """wcdim over the rationals is at least the simplicial clique number."""
    rep = simplicial_report(g)
    dim = _space(g, QQ, cap).dimension
    return _holds("lower_bound", [graph_id], dim >= rep.sc,
                  {"wcdim_q": dim, "sc": rep.sc},
                  witness={"wcdim_q": dim, "sc": rep.sc})


def check_sccg_dimension(g: Graph, graph_id: str,
                         fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
                         cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """On an SCCG, wcdim equals sc over every configured field."""
    if not is_sccg(g):
        return _na("sccg_dimension", [graph_id], "not an SCCG")
    rep = simplicial_report(g)
    dims = {f.label(): _space(g, f, cap).dimension for f in fields}
    ok = all(d == rep.sc for d in dims.values())
    return _holds("sccg_dimension", [graph_id], ok,
                  {"sc": rep.sc, "wcdim": dims},
                  witness={"sc": rep.sc, "wcdim": dims})


def _classify_mis(g: Graph, rep, clique_index: dict, m: frozenset) -> str:
    simp = rep.simplicial_vertices
    seed = m & rep.connection_set
    if not seed:
        if m <= simp and len(m) == rep.sc and \
                len({clique_index[v] for v in m}) == rep.sc:
            return "one-per-clique"
        return "neither"
    rest = m - seed
    if not rest <= simp:
        return "neither"
    split = split_cliques_by_neighborhood(g, seed, rep)
    uncovered = {i for i, c in enumerate(rep.cliques) if c in split.uncovered}
    picked = [clique_index[v] for v in rest]
    if len(set(picked)) == len(picked) and set(picked) == uncovered:
        return "seeded"
    return "neither"


def check_mis_structure(g: Graph, graph_id: str,
                        cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Report-only: every MIS of an SCCG should be either one simplicial
    vertex per clique, or a connection-set seed plus one simplicial vertex
    per clique left uncovered by the seed's closed neighborhood."""
    if not is_sccg(g):
        return _na("mis_structure", [graph_id], "not an SCCG")
    rep = simplicial_report(g)
    clique_index = {v: i for i, c in enumerate(rep.cliques)
                    for v in c & rep.simplicial_vertices}
    counts = {"one-per-clique": 0, "seeded": 0, "neither": 0}
    unclassifiable = []
    for m in _mis(g, cap):
        kind = _classify_mis(g, rep, clique_index, m)
        counts[kind] += 1
        if kind == "neither":
            unclassifiable.append(sorted(m))
    ok = counts["neither"] == 0
    return _holds("mis_structure", [graph_id], ok,
                  {"counts": counts},
                  witness={"unclassifiable": unclassifiable})


def check_mis_count(g: Graph, graph_id: str,
                    cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Report-only: the closed-form MIS count against true enumeration,
    under both residual and simplicial-only clique sizing."""
    if not is_sccg(g):
        return _na("mis_count", [graph_id], "not an SCCG")
    residual = sccg_mis_count_formula(g, "residual")
    simplicial = sccg_mis_count_formula(g, "simplicial")
    enumerated = len(_mis(g, cap))
    details = {
        "formula_residual": residual.total,
        "formula_simplicial": simplicial.total,
        "enumerated": enumerated,
        "breakdown_residual": {
            "i_count": residual.i_count,
            "product_term": residual.product_term,
            "sum_term": residual.sum_term,
        },
    }
    ok = enumerated in (residual.total, simplicial.total)
    return _holds("mis_count", [graph_id], ok, details, witness=details)


def _constant_on(values: Sequence, vertices: Iterable[int]) -> bool:
    vals = {values[v] for v in vertices}
    return len(vals) <= 1


def check_weighting_lemmas(g: Graph, graph_id: str,
                           cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Every basis weighting of an SCCG is constant on each clique residual,
    and each connection vertex's weight is some selection sum of simplicial
    weights, one per clique swallowed by its closed neighborhood."""
    if not is_sccg(g):
        return _na("weighting_lemmas", [graph_id], "not an SCCG")
    rep = simplicial_report(g)
    space = _space(g, QQ, cap)
    for b_index, w in enumerate(space.basis):
        for i, clique in enumerate(rep.cliques):
            residual = clique - rep.per_clique_w[i]
            if not _constant_on(w.values, residual):
                return _holds(
                    "weighting_lemmas", [graph_id], False,
                    {"basis_size": space.dimension},
                    witness={"clause": "constant-on-residual",
                             "basis_vector": b_index, "clique": sorted(clique),
                             "values": [str(w.values[v]) for v in sorted(residual)]})
        for conn in sorted(rep.connection_set):
            covered = split_cliques_by_neighborhood(g, [conn], rep).covered
            pools = [sorted(c & rep.simplicial_vertices) for c in covered]
            total = 1
            for p in pools:
                total *= max(len(p), 1)
            if total > _SELECTION_CAP:
                return _na("weighting_lemmas", [graph_id],
                           f"selection search above {_SELECTION_CAP}")
            target = w.values[conn]
            found = any(sum((w.values[v] for v in pick), Fraction(0)) == target
                        for pick in product(*pools))
            if not found:
                return _holds(
                    "weighting_lemmas", [graph_id], False,
                    {"basis_size": space.dimension},
                    witness={"clause": "connection-sum", "basis_vector": b_index,
                             "vertex": conn, "target": str(target)})
    return _holds("weighting_lemmas", [graph_id], True,
                  {"basis_size": space.dimension, "sc": rep.sc})


def check_neighbor_swap(g: Graph, graph_id: str,
                        cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Whenever two MISs differ in a single vertex, every basis weighting
    agrees on the swapped pair."""
    mis = _mis(g, cap)
    buckets: dict[frozenset, list[int]] = {}
    for m in mis:
        for v in m:
            buckets.setdefault(m - {v}, []).append(v)
    pairs: set[tuple[int, int]] = set()
    for stem, swaps in buckets.items():
        if len(swaps) > 1:
            ordered = sorted(swaps)
            for i in range(len(ordered)):
                for j in range(i + 1, len(ordered)):
                    pairs.add((ordered[i], ordered[j]))
    space = _space(g, QQ, cap)
    for u, v in sorted(pairs):
        for b_index, w in enumerate(space.basis):
            if w.values[u] != w.values[v]:
                return _holds(
                    "neighbor_swap", [graph_id], False,
                    {"pairs": len(pairs)},
                    witness={"pair": [u, v], "basis_vector": b_index,
                             "values": [str(w.values[u]), str(w.values[v])]})
    return _holds("neighbor_swap", [graph_id], True,
                  {"pairs": len(pairs), "vacuous": not pairs})


# --- clique-sum checks ---------------------------------------------------------

def _composite_parts(spec: ScsSpec):
    comp = scs_compose(spec)
    back1 = {c: i for i, c in enumerate(comp.g1_to_composite)}
    back2 = {c: i for i, c in enumerate(comp.g2_to_composite)}
    return comp, back1, back2


def check_scs_mis_structure(spec: ScsSpec, spec_id: str,
                            cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Composite MISs are exactly the unions of part MISs meeting in one
    shared vertex; both directions checked exhaustively."""
    try:
        comp, back1, back2 = _composite_parts(spec)
    except ScsValidationError as exc:
        return _na("scs_mis_structure", [spec_id], f"invalid clique sum: {exc}")
    g1, g2, gc = spec.g1, spec.g2, comp.graph
    v1 = set(comp.g1_to_composite)
    v2 = set(comp.g2_to_composite)
    mis_c = _mis(gc, cap)
    for m in mis_c:
        inter = m & comp.shared
        m1 = frozenset(back1[v] for v in m if v in v1)
        m2 = frozenset(back2[v] for v in m if v in v2)
        if len(inter) != 1 or not is_mis(g1, m1) or not is_mis(g2, m2):
            return _holds("scs_mis_structure", [spec_id], False,
                          {"composite_mis": len(mis_c)},
                          witness={"direction": "decompose", "mis": sorted(m),
                                   "shared_overlap": sorted(inter)})
    mis1 = _mis(g1, cap)
    mis2 = _mis(g2, cap)
    composite_sets = set(mis_c.sets)
    composed = 0
    for a in mis1:
        mapped_a = frozenset(comp.g1_to_composite[v] for v in a)
        for b in mis2:
            mapped_b = frozenset(comp.g2_to_composite[v] for v in b)
            ia = mapped_a & comp.shared
            ib = mapped_b & comp.shared
            if len(ia) == 1 and ia == ib:
                composed += 1
                if (mapped_a | mapped_b) not in composite_sets:
                    return _holds(
                        "scs_mis_structure", [spec_id], False,
                        {"composite_mis": len(mis_c)},
                        witness={"direction": "compose",
                                 "m1": sorted(a), "m2": sorted(b)})
    ok = composed == len(mis_c)
    return _holds("scs_mis_structure", [spec_id], ok,
                  {"composite_mis": len(mis_c), "composed_pairs": composed},
                  witness={"composite_mis": len(mis_c), "composed_pairs": composed})


def check_scs_count(spec: ScsSpec, spec_id: str,
                    cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Composite MIS count equals the sum over shared vertices of the product
    of per-part MIS counts through that vertex."""
    try:
        comp, _, _ = _composite_parts(spec)
    except ScsValidationError as exc:
        return _na("scs_count", [spec_id], f"invalid clique sum: {exc}")
    from .mis import scs_mis_count
    predicted = scs_mis_count(spec.g1, spec.g2, spec.glue_map(), cap=cap)
    enumerated = len(_mis(comp.graph, cap))
    details = {"predicted": predicted.total, "enumerated": enumerated,
               "per_vertex": [list(row) for row in predicted.per_vertex]}
    return _holds("scs_count", [spec_id], predicted.total == enumerated,
                  details, witness=details)


def check_scs_dimension(spec: ScsSpec, spec_id: str,
                        fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
                        cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """wcdim of the composite is wcdim(g1) + wcdim(g2) - 1 over every field;
    when one part is an SCCG and the other chordal, it also equals sc."""
    try:
        comp, _, _ = _composite_parts(spec)
    except ScsValidationError as exc:
        return _na("scs_dimension", [spec_id], f"invalid clique sum: {exc}")
    gc = comp.graph
    details: dict = {"per_field": {}}
    ok = True
    for f in fields:
        d1 = _space(spec.g1, f, cap).dimension
        d2 = _space(spec.g2, f, cap).dimension
        dc = _space(gc, f, cap).dimension
        details["per_field"][f.label()] = {"g1": d1, "g2": d2, "composite": dc}
        ok = ok and dc == d1 + d2 - 1
    mixed = (is_sccg(spec.g1) and is_chordal(spec.g2)) or \
            (is_chordal(spec.g1) and is_sccg(spec.g2))
    details["sccg_chordal_pair"] = mixed
    if mixed:
        sc = simplicial_report(gc).sc
        details["composite_sc"] = sc
        ok = ok and all(
            per["composite"] == sc for per in details["per_field"].values())
    return _holds("scs_dimension", [spec_id], ok, details, witness=details)


# --- family checks --------------------------------------------------------------

def check_sierpinski(order: int, fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
                     cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Sierpinski gasket graphs have wcdim 1 at order 1 and 3 afterwards;
    from order 3 on, every basis weighting vanishes off the corner cliques
    and is constant on each of them."""
    ids = [f"sierpinski_{order}"]
    sg = sierpinski(order)
    expected = 1 if order == 1 else 3
    try:
        mis = _mis(sg.graph, cap)
    except MisCapExceededError:
        return _na("sierpinski", ids, f"MIS count exceeds cap {cap}")
    details: dict = {"order": order, "vertices": sg.graph.n,
                     "mis_count": len(mis), "expected": expected,
                     "wcdim": {}}
    outside = set(sg.graph.vertices)
    for c in sg.corner_cliques:
        outside -= c
    for f in fields:
        space = _space(sg.graph, f, cap)
        details["wcdim"][f.label()] = space.dimension
        if space.dimension != expected:
            return _holds("sierpinski", ids, False, details, witness=details)
        if order >= 3:
            for b_index, w in enumerate(space.basis):
                zero = f.zero()
                bad_outside = [v for v in sorted(outside) if w.values[v] != zero]
                if bad_outside:
                    return _holds(
                        "sierpinski", ids, False, details,
                        witness={"clause": "zero-outside-corners",
                                 "field": f.label(), "basis_vector": b_index,
                                 "vertices": bad_outside})
                for c in sg.corner_cliques:
                    if not _constant_on(w.values, c):
                        return _holds(
                            "sierpinski", ids, False, details,
                            witness={"clause": "constant-on-corner",
                                     "field": f.label(), "basis_vector": b_index,
                                     "clique": sorted(c)})
    return _holds("sierpinski", ids, True, details)


def check_path_cycle_citations(n: int,
                               fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
                               cap: int = DEFAULT_MIS_CAP) -> Verdict:
    """Long paths have wcdim 2 with basis spanned by the two end-edge
    indicators; cycles of length at least 8 have zero well-covered space."""
    ids = [f"n_{n}"]
    if n < 5:
        return _na("path_cycle_citations", ids, "needs n >= 5")
    details: dict = {"n": n, "path_wcdim": {}, "cycle_wcdim": {}}
    ok = True
    pg = families.path(n)
    for f in fields:
        space = _space(pg, f, cap)
        details["path_wcdim"][f.label()] = space.dimension
        ok = ok and space.dimension == 2
    q_space = _space(pg, QQ, cap)
    ends = [indicator_weighting(pg, {0, 1}).values,
            indicator_weighting(pg, {n - 2, n - 1}).values]
    span_ok = span_equal(q_space.basis_vectors(), [list(e) for e in ends], QQ,
                         length=pg.n)
    details["path_basis_is_end_edges"] = span_ok
    ok = ok and span_ok
    if n >= 8:
        cg = families.cycle(n)
        for f in fields:
            space = _space(cg, f, cap)
            details["cycle_wcdim"][f.label()] = space.dimension
            ok = ok and space.dimension == 0
    return _holds("path_cycle_citations", ids, ok, details, witness=details)


# --- random corpus and suites ----------------------------------------------------

def random_connected_graphs(count: int, seed: int, max_n: int = 10,
                            p_values: Sequence[float] = (0.3, 0.5, 0.7),
                            ) -> list[tuple[str, Graph]]:
    """Seeded Erdos-Renyi sampler filtered to connected graphs."""
    rng = random.Random(seed)
    out: list[tuple[str, Graph]] = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        p = p_values[len(out) % len(p_values)]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        try:
            g = Graph(n, edges)
        except DisconnectedGraphError:
            continue
        out.append((f"random_{seed}_{len(out):03d}_n{n}_p{p}", g))
    return out


_GRAPH_CHECKS: tuple[tuple[str, Callable], ...] = (
    ("lower_bound", check_lower_bound),
    ("sccg_dimension", check_sccg_dimension),
    ("mis_structure", check_mis_structure),
    ("mis_count", check_mis_count),
    ("weighting_lemmas", check_weighting_lemmas),
    ("neighbor_swap", check_neighbor_swap),
)

_SPEC_CHECKS: tuple[tuple[str, Callable], ...] = (
    ("scs_mis_structure", check_scs_mis_structure),
    ("scs_count", check_scs_count),
    ("scs_dimension", check_scs_dimension),
)

SUITE_NAMES = ("default", "full")


def default_scs_specs() -> dict[str, ScsSpec]:
    return {"triangle_pendant_pair": triangle_pendant_spec(),
            "figure6_pair": figure6_spec()}


Task = tuple[str, tuple[str, ...], Callable[[], Verdict]]


def _suite_tasks(suite: str, seed: int, fields: tuple[FieldSpec, ...],
                 cap: int, random_count: int) -> list[Task]:
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r} (one of {SUITE_NAMES})")
    corpus = named_corpus()
    if suite == "default":
        corpus.pop("sierpinski_4", None)
    sierpinski_orders = (1, 2, 3, 4) if suite == "full" else (1, 2, 3)

    tasks: list[Task] = []
    for name in sorted(corpus):
        g = corpus[name]
        for check_id, fn in _GRAPH_CHECKS:
            if fn is check_sccg_dimension:
                call = (lambda g=g, name=name, fn=fn: fn(g, name, fields, cap))
            else:
                call = (lambda g=g, name=name, fn=fn: fn(g, name, cap))
            tasks.append((check_id, (name,), call))
    for spec_id, spec in sorted(default_scs_specs().items()):
        for check_id, fn in _SPEC_CHECKS:
            if fn is check_scs_dimension:
                call = (lambda s=spec, i=spec_id, fn=fn: fn(s, i, fields, cap))
            else:
                call = (lambda s=spec, i=spec_id, fn=fn: fn(s, i, cap))
            tasks.append((check_id, (spec_id,), call))
    for order in sierpinski_orders:
        tasks.append(("sierpinski", (f"sierpinski_{order}",),
                      lambda o=order: check_sierpinski(o, fields, cap)))
    for n in range(5, 13):
        tasks.append(("path_cycle_citations", (f"n_{n}",),
                      lambda n=n: check_path_cycle_citations(n, fields, cap)))
    for name, g in random_connected_graphs(random_count, seed):
        tasks.append(("lower_bound", (name,),
                      lambda g=g, name=name: check_lower_bound(g, name, cap)))
        tasks.append(("neighbor_swap", (name,),
                      lambda g=g, name=name: check_neighbor_swap(g, name, cap)))
    return tasks


def _run_task(task: Task) -> Verdict:
    check_id, ids, call = task
    try:
        return call()
    except MisCapExceededError as exc:
        return Verdict(check_id=check_id, graph_ids=ids,
                       status="not_applicable", details={"reason": str(exc)})
    except Exception as exc:  # a crashed check must surface, not abort the suite
        return Verdict(check_id=check_id, graph_ids=ids,
                       status="fails", details={"error": repr(exc)},
                       witness={"error": repr(exc)})


def run_suite(suite: str = "default", seed: int = 0,
              fields: Sequence[FieldSpec] = DEFAULT_FIELDS,
              cap: int = DEFAULT_MIS_CAP, random_count: int = 120,
              threads: int = 1) -> dict:
    """Run a named suite and assemble an order-normalized report.

    The report is a plain JSON-ready dict; verdicts are sorted by check id
    and inputs, so thread count never changes the output bytes.
    """
    tasks = _suite_tasks(suite, seed, tuple(fields), cap, random_count)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(_run_task, tasks))
    else:
        verdicts = [_run_task(t) for t in tasks]
    verdicts.sort(key=lambda v: (v.check_id, v.graph_ids))
    counts = {"holds": 0, "fails": 0, "not_applicable": 0}
    asserting_failures = []
    for v in verdicts:
        counts[v.status] += 1
        if v.status == "fails" and v.check_id not in REPORT_ONLY_CHECKS:
            asserting_failures.append(
                {"check_id": v.check_id, "inputs": list(v.graph_ids)})
    return {
        "suite": suite,
        "seed": seed,
        "fields": [f.label() for f in fields],
        "summary": {**counts, "asserting_failures": asserting_failures},
        "verdicts": [v.to_json() for v in verdicts],
    }


def suite_passed(report: dict) -> bool:
    return not report["summary"]["asserting_failures"]


def summary_table(report: dict) -> str:
    """Plain-text one-line-per-verdict summary."""
    lines = [f"suite={report['suite']} seed={report['seed']} "
             f"fields={','.join(report['fields'])}"]
    for v in report["verdicts"]:
        tier = "report-only" if v["check_id"] in REPORT_ONLY_CHECKS else "asserting"
        lines.append(f"{v['status']:<15} {v['check_id']:<22} "
                     f"{','.join(v['inputs']):<40} [{tier}]")
    s = report["summary"]
    lines.append(f"holds={s['holds']} fails={s['fails']} "
                 f"not_applicable={s['not_applicable']} "
                 f"asserting_failures={len(s['asserting_failures'])}")
    return "\n".join(lines) + "\n"
