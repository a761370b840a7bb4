"""Packing solver: sequences, verifier, exact decisions, pipeline, assembly."""

from __future__ import annotations

import random

import pytest

from edgepack import (EdgeColoring, Graph, PackingSequence, SEQ_12_24,
                      assemble, build_conflict_graph, color_exact,
                      exact_max_union, generate_named, local_search,
                      max_induced_matching, parse_edge_list, random_cubic,
                      solve_exact, solve_pipeline, verify)
from oracles import enumerate_packing_colorable, sample_subcubic_instances


# -- PackingSequence -------------------------------------------------------------

def test_sequence_parse_sugar():
    assert PackingSequence.parse("1^2,2^4").values == (1, 1, 2, 2, 2, 2)
    assert PackingSequence.parse("1,1,2").values == (1, 1, 2)
    assert PackingSequence.parse("1^3,3").values == (1, 1, 1, 3)
    assert str(SEQ_12_24) == "(1^2,2^4)"


def test_sequence_rejects_bad_input():
    with pytest.raises(ValueError):
        PackingSequence.parse("2,1")
    with pytest.raises(ValueError):
        PackingSequence.parse("")
    with pytest.raises(ValueError):
        PackingSequence((1, 0))


# -- verify -----------------------------------------------------------------------

def test_verify_c6_alternating_matchings():
    g = generate_named("c6")
    alt = [g.edge_id(0, 1), g.edge_id(2, 3), g.edge_id(4, 5)]
    coloring = EdgeColoring.from_classes(
        [alt, [e for e in range(6) if e not in alt]], g.m)
    assert verify(g, PackingSequence((1, 1)), coloring) == []


def test_verify_flags_adjacent_same_class_edges():
    g = parse_edge_list("0 1\n1 2")
    coloring = EdgeColoring.from_classes([[0, 1]], g.m)
    violations = verify(g, PackingSequence((1,)), coloring)
    assert len(violations) == 1
    v = violations[0]
    assert (v.class_index, v.e1, v.e2, v.distance, v.required) == (0, 0, 1, 1, 2)


def test_verify_rejects_partial_coloring():
    g = parse_edge_list("0 1\n1 2")
    with pytest.raises(ValueError, match="partial"):
        verify(g, PackingSequence((1, 1)), EdgeColoring((0, -1)))


def test_verify_rejects_out_of_range_class():
    g = parse_edge_list("0 1")
    with pytest.raises(ValueError):
        verify(g, PackingSequence((1,)), EdgeColoring((3,)))


def test_verify_distance_three_classes():
    g = generate_named("c7")
    one_class = EdgeColoring(tuple(0 for _ in range(g.m)))
    assert verify(g, PackingSequence((3,)), one_class)
    spaced = EdgeColoring.from_classes([[0], list(range(1, g.m))], g.m)
    # edges at distance >= 4 from edge 0 do exist on C7 for no pair; class s=3 of size 1 is fine
    assert not [v for v in verify(g, PackingSequence((3, 3)), spaced) if v.class_index == 0]


# -- solve_exact -------------------------------------------------------------------

def test_sharp_example_unsat_then_sat():
    g = generate_named("subdivided_k33")
    assert solve_exact(g, PackingSequence.parse("1^2,2^3")).status == "unsat"
    res = solve_exact(g, SEQ_12_24)
    assert res.status == "sat"
    assert verify(g, SEQ_12_24, res.coloring) == []


def test_petersen_checks():
    g = generate_named("petersen")
    assert solve_exact(g, PackingSequence.parse("1^3")).status == "unsat"
    assert solve_exact(g, PackingSequence.parse("1^4")).status == "sat"
    assert solve_exact(g, PackingSequence.parse("1^3,3")).status == "unsat"
    res = solve_exact(g, PackingSequence.parse("1^3,2"))
    assert res.status == "sat"
    assert verify(g, PackingSequence.parse("1^3,2"), res.coloring) == []


def test_unknown_on_tiny_budget():
    g = random_cubic(30, 2)
    res = solve_exact(g, SEQ_12_24, budget=5)
    assert res.status == "unknown"
    assert res.nodes > 5


def test_exact_agrees_with_plain_enumeration_small():
    seqs = [PackingSequence.parse(s) for s in ("1^2,2^3", "1^2,2^4", "1^3")]
    for n, edges in sample_subcubic_instances(40, m_max=7, seed=5):
        g = Graph(edges, n=n)
        for seq in seqs:
            got = solve_exact(g, seq)
            want = enumerate_packing_colorable(n, edges, seq.values)
            assert got.status == ("sat" if want else "unsat"), (edges, seq.values)
            if got.sat:
                assert verify(g, seq, got.coloring) == []


def test_exact_agrees_with_enumeration_on_tight_sequence():
    seq = PackingSequence.parse("1,2^2")
    unsat = 0
    for n, edges in sample_subcubic_instances(30, m_max=10, seed=6):
        g = Graph(edges, n=n)
        got = solve_exact(g, seq)
        want = enumerate_packing_colorable(n, edges, seq.values)
        assert got.status == ("sat" if want else "unsat"), edges
        unsat += not want
    assert unsat > 0


def test_solve_exact_empty_graph():
    g = Graph([], n=3)
    res = solve_exact(g, SEQ_12_24)
    assert res.status == "sat"
    assert verify(g, SEQ_12_24, res.coloring) == []


def test_monotonicity_on_sampled_instances():
    rng = random.Random(9)
    for n, edges in sample_subcubic_instances(12, m_max=8, seed=19):
        g = Graph(edges, n=n)
        seq = PackingSequence.parse("1^2,2^3")
        res = solve_exact(g, seq)
        if res.status != "sat":
            continue
        # appending classes keeps SAT
        assert solve_exact(g, PackingSequence.parse("1^2,2^4")).status == "sat"
        # decreasing an s value keeps SAT
        weaker = sorted(seq.values)
        idx = rng.randrange(len(weaker))
        weaker[idx] = 1
        assert solve_exact(g, PackingSequence(tuple(sorted(weaker)))).status == "sat"


# -- assemble and pipeline ----------------------------------------------------------

def test_assemble_empty_leftover_is_two_matchings():
    g = generate_named("c6")
    res = local_search(g, 0)
    coloring = assemble(res.pair, ())
    classes = coloring.classes(6)
    assert sorted(classes[0]) == sorted(res.pair.m1)
    assert sorted(classes[1]) == sorted(res.pair.m2)
    assert all(not classes[i] for i in range(2, 6))


def test_assemble_subdivided_k33_uses_all_classes():
    g = generate_named("subdivided_k33")
    pair, _ = exact_max_union(g)
    h = build_conflict_graph(g, pair)
    col = color_exact(h, 4)
    assert col.sat
    coloring = assemble(pair, col.colors)
    assert verify(g, SEQ_12_24, coloring) == []
    assert all(coloring.classes(6))


def test_assemble_rejects_improper_coloring():
    g = generate_named("subdivided_k33")
    pair, _ = exact_max_union(g)
    with pytest.raises(ValueError):
        assemble(pair, (0, 0, 0, 0))   # H is K4: two equal colors collide


def test_pipeline_c6_uses_only_matchings():
    g = generate_named("c6")
    res = solve_pipeline(g, 0)
    assert res.status == "sat" and res.method == "pipeline"
    classes = res.coloring.classes(6)
    assert all(not classes[i] for i in range(2, 6))


def test_pipeline_petersen_verified():
    g = generate_named("petersen")
    res = solve_pipeline(g, 0)
    assert res.status == "sat"
    assert verify(g, SEQ_12_24, res.coloring) == []


def test_pipeline_random_cubics_verified():
    for seed in range(10):
        g = random_cubic(24, seed)
        res = solve_pipeline(g, seed)
        assert res.status == "sat"
        assert verify(g, SEQ_12_24, res.coloring) == []


def test_pipeline_requires_connected_subcubic():
    with pytest.raises(ValueError):
        solve_pipeline(parse_edge_list("0 1\n2 3"), 0)


def test_pipeline_exact_agreement():
    # whenever the pipeline says SAT, exact must not say UNSAT
    for seed in range(4):
        g = random_cubic(12, seed)
        pres = solve_pipeline(g, seed)
        if pres.status == "sat":
            assert solve_exact(g, SEQ_12_24).status == "sat"


def test_pipeline_fallback_path():
    g = random_cubic(14, 1)
    res = solve_pipeline(g, 1, retries=0)
    assert res.status == "sat" and res.method == "fallback"
    assert verify(g, SEQ_12_24, res.coloring) == []
    res = solve_pipeline(g, 1, retries=0, exact_budget=3)
    assert res.status == "fail" and res.method == "fallback"
    assert res.coloring is None


# -- max_induced_matching -------------------------------------------------------------

def test_max_induced_matching_examples():
    assert max_induced_matching(generate_named("subdivided_k33")) == 1
    assert max_induced_matching(generate_named("c6")) == 2
    assert max_induced_matching(parse_edge_list("0 1")) == 1


def test_max_induced_matching_guard():
    with pytest.raises(ValueError):
        max_induced_matching(random_cubic(20, 0))


def test_max_induced_matching_matches_oracle():
    from oracles import brute_max_induced_matching
    for n, edges in sample_subcubic_instances(25, m_max=10, seed=3):
        g = Graph(edges, n=n)
        assert max_induced_matching(g) == brute_max_induced_matching(n, edges)
