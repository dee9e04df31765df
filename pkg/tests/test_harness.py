import json

from wellcovered.families import (ScsSpec, complete, cycle, figure1,
                                  figure6_spec, path,
                                  triangle_pendant_spec, vertex_bowtie)
from wellcovered.harness import (REPORT_ONLY_CHECKS, check_lower_bound,
                                 check_mis_count, check_mis_structure,
                                 check_neighbor_swap,
                                 check_path_cycle_citations,
                                 check_sccg_dimension, check_scs_count,
                                 check_scs_dimension, check_scs_mis_structure,
                                 check_sierpinski, check_weighting_lemmas,
                                 random_connected_graphs, run_suite,
                                 suite_passed, summary_table)
from wellcovered.mis import is_mis
from wellcovered.wcspace import wcdim


def test_lower_bound_examples():
    assert check_lower_bound(figure1(), "figure1").status == "holds"
    v = check_lower_bound(cycle(8), "c8")
    assert v.status == "holds" and v.details == {"wcdim_q": 0, "sc": 0}


def test_lower_bound_random_sweep():
    for name, g in random_connected_graphs(40, seed=7):
        assert check_lower_bound(g, name).status == "holds"


def test_sccg_dimension_examples():
    assert check_sccg_dimension(figure1(), "figure1").details["wcdim"]["Q"] == 3
    assert check_sccg_dimension(complete(5), "k5").details["sc"] == 1
    assert check_sccg_dimension(cycle(9), "c9").status == "not_applicable"
    for k in (1, 2, 3, 4, 5):
        from wellcovered.families import figure2_family
        v = check_sccg_dimension(figure2_family(k), f"figure2_k{k}")
        assert v.status == "holds" and v.details["sc"] == 2


def test_mis_structure_verdicts():
    v = check_mis_structure(vertex_bowtie(), "vertex_bowtie")
    assert v.status == "holds"
    assert v.details["counts"] == {"one-per-clique": 4, "seeded": 1, "neither": 0}

    v = check_mis_structure(figure1(), "figure1")
    assert v.status == "fails"
    assert v.details["counts"] == {"one-per-clique": 4, "seeded": 0, "neither": 20}
    # witnesses re-verify: each unclassifiable set is indeed a MIS holding a
    # vertex that is neither simplicial nor in the (empty) connection set
    g = figure1()
    simplicial = {0, 1, 5, 8, 9}
    for members in v.witness["unclassifiable"]:
        assert is_mis(g, members)
        assert any(m not in simplicial for m in members)

    assert check_mis_structure(complete(4), "k4").status == "holds"
    assert check_mis_structure(cycle(8), "c8").status == "not_applicable"


def test_mis_count_verdicts():
    v = check_mis_count(figure1(), "figure1")
    assert v.status == "fails"
    assert v.details["formula_residual"] == 36
    assert v.details["formula_simplicial"] == 4
    assert v.details["enumerated"] == 24

    assert check_mis_count(complete(6), "k6").status == "holds"
    from wellcovered.families import star
    assert check_mis_count(star(3), "star_3").status == "holds"
    assert check_mis_count(vertex_bowtie(), "vertex_bowtie").status == "holds"


def test_weighting_lemmas_verdicts():
    assert check_weighting_lemmas(figure1(), "figure1").status == "holds"
    assert check_weighting_lemmas(vertex_bowtie(), "vertex_bowtie").status == "holds"
    from wellcovered.families import star
    assert check_weighting_lemmas(star(5), "star_5").status == "holds"
    assert check_weighting_lemmas(cycle(8), "c8").status == "not_applicable"


def test_neighbor_swap_verdicts():
    v = check_neighbor_swap(cycle(4), "c4")
    assert v.status == "holds" and v.details["vacuous"]
    v = check_neighbor_swap(path(5), "p5")
    assert v.status == "holds" and v.details["pairs"] >= 2
    assert check_neighbor_swap(figure1(), "figure1").status == "holds"


def test_scs_checks_on_both_specs():
    for spec_id, spec in (("triangle_pendant_pair", triangle_pendant_spec()),
                          ("figure6_pair", figure6_spec())):
        assert check_scs_mis_structure(spec, spec_id).status == "holds"
        count = check_scs_count(spec, spec_id)
        assert count.status == "holds"
        assert count.details["predicted"] == count.details["enumerated"]
        dim = check_scs_dimension(spec, spec_id)
        assert dim.status == "holds"
        assert dim.details["sccg_chordal_pair"]
    tp = check_scs_count(triangle_pendant_spec(), "tp")
    assert tp.details["enumerated"] == 3


def test_scs_checks_invalid_spec_is_not_applicable():
    p5 = path(5)
    bad = ScsSpec(p5, p5, {0: 3, 1: 4})
    assert check_scs_mis_structure(bad, "p5xp5").status == "not_applicable"
    assert check_scs_count(bad, "p5xp5").status == "not_applicable"
    assert check_scs_dimension(bad, "p5xp5").status == "not_applicable"


def test_scs_degenerate_full_overlap():
    spec = ScsSpec(complete(3), complete(3), {0: 0, 1: 1, 2: 2})
    assert check_scs_mis_structure(spec, "k3xk3").status == "holds"
    assert check_scs_count(spec, "k3xk3").status == "holds"


def test_sierpinski_checks_small_orders():
    v1 = check_sierpinski(1)
    assert v1.status == "holds" and v1.details["wcdim"]["Q"] == 1
    for order in (2, 3):
        v = check_sierpinski(order)
        assert v.status == "holds"
        assert set(v.details["wcdim"].values()) == {3}


def test_sierpinski_cap_gives_not_applicable():
    v = check_sierpinski(3, cap=10)
    assert v.status == "not_applicable"
    assert "cap" in v.details["reason"]


def test_path_cycle_citations():
    v = check_path_cycle_citations(5)
    assert v.status == "holds"
    assert v.details["path_wcdim"]["Q"] == 2
    assert v.details["path_basis_is_end_edges"]
    assert v.details["cycle_wcdim"] == {}
    for n in (8, 12):
        v = check_path_cycle_citations(n)
        assert v.status == "holds"
        assert set(v.details["cycle_wcdim"].values()) == {0}
    assert check_path_cycle_citations(4).status == "not_applicable"


def test_random_sampler_is_deterministic_and_connected():
    a = random_connected_graphs(30, seed=3)
    b = random_connected_graphs(30, seed=3)
    assert [(name, g.edges) for name, g in a] == [(name, g.edges) for name, g in b]
    assert all(g.n <= 10 for _, g in a)
    different = random_connected_graphs(30, seed=4)
    assert [g.edges for _, g in a] != [g.edges for _, g in different]


def test_run_suite_default_passes_and_is_deterministic():
    r1 = run_suite("default", seed=0, random_count=20)
    r2 = run_suite("default", seed=0, random_count=20)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    assert suite_passed(r1)
    failed_checks = {v["check_id"] for v in r1["verdicts"]
                     if v["status"] == "fails"}
    assert failed_checks <= REPORT_ONLY_CHECKS
    # figure1 report-only protocol: the published pair and witness list
    by_key = {(v["check_id"], tuple(v["inputs"])): v for v in r1["verdicts"]}
    count_verdict = by_key[("mis_count", ("figure1",))]
    assert count_verdict["details"]["formula_residual"] == 36
    assert count_verdict["details"]["enumerated"] == 24
    structure_verdict = by_key[("mis_structure", ("figure1",))]
    assert len(structure_verdict["witness"]["unclassifiable"]) == 20


def test_run_suite_thread_count_does_not_change_output():
    r1 = run_suite("default", seed=1, random_count=10, threads=1)
    r4 = run_suite("default", seed=1, random_count=10, threads=4)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r4, sort_keys=True)


def test_run_suite_report_shape():
    report = run_suite("default", seed=0, random_count=5)
    assert report["suite"] == "default"
    assert report["fields"] == ["Q", "GF(2)", "GF(3)"]
    for v in report["verdicts"]:
        assert v["status"] in ("holds", "fails", "not_applicable")
        if v["status"] == "fails":
            assert v["witness"] is not None
        if v["status"] == "not_applicable":
            assert "reason" in v["details"]
    table = summary_table(report)
    assert "asserting_failures=0" in table


def test_verdict_failure_carries_recheckable_witness():
    # manufacture a failing asserting check: feed a graph whose wcdim exceeds
    # its sc into the SCCG equality check via a doctored report
    g = cycle(4)  # wcdim 3, sc 0, not an SCCG: verdict must be not_applicable
    assert check_sccg_dimension(g, "c4").status == "not_applicable"
    assert wcdim(g) == 3
