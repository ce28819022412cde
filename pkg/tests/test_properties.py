"""Property-based checks over randomly generated groups and parameters."""

from __future__ import annotations

import pytest
from hypothesis import assume, given, settings, strategies as st

import regsets as rs
from conftest import closure_images, is_inverse_closed, naive_neighbor_counts


@st.composite
def permutation_groups(draw, max_degree=5):
    degree = draw(st.integers(min_value=3, max_value=max_degree))
    n_gens = draw(st.integers(min_value=1, max_value=2))
    images = [tuple(draw(st.permutations(range(degree)))) for _ in range(n_gens)]
    return rs.from_permutation_generators(degree, images), images


@st.composite
def groups_with_subgroup(draw, max_degree=5):
    g, _ = draw(permutation_groups(max_degree=max_degree))
    assume(g.order > 3)
    seed = draw(st.integers(min_value=1, max_value=g.order - 1))
    h = rs.subgroup_closure(g, [seed])
    assume(1 < h.order < g.order)
    return g, h


@given(permutation_groups())
@settings(max_examples=40, deadline=None)
def test_generated_group_matches_independent_closure(data):
    g, images = data
    assert g.order == len(closure_images(len(images[0]), images))
    for x in range(g.order):
        assert sorted(g.table[x]) == list(range(g.order))
        assert sorted(g.table[:, x]) == list(range(g.order))
        assert g.table[0, x] == x == g.table[x, 0]
        assert g.table[x, g.inv[x]] == 0 == g.table[g.inv[x], x]


@given(permutation_groups(), st.data())
@settings(max_examples=40, deadline=None)
def test_table_matches_permutation_composition(data, picks):
    g, _ = data
    x = picks.draw(st.integers(min_value=0, max_value=g.order - 1))
    y = picks.draw(st.integers(min_value=0, max_value=g.order - 1))
    composed = tuple(g.perm_images[y][v] for v in g.perm_images[x])
    assert g.perm_images[g.multiply(x, y)] == composed


@given(groups_with_subgroup())
@settings(max_examples=30, deadline=None)
def test_decomposition_partitions_complement(data):
    g, h = data
    dec = rs.class_decomposition(h)
    seen: set[int] = set()
    for block in dec.blocks:
        ids = set(block.element_ids())
        assert not ids & seen
        assert len(block.cosets) == (block.t if block.self_paired else 2 * block.t)
        assert len(ids) == len(block.cosets) * h.order
        seen |= ids
    assert seen == set(range(g.order)) - set(h.members)


@given(groups_with_subgroup())
@settings(max_examples=30, deadline=None)
def test_eligible_pair_crossing_counts_equal_m(data):
    g, h = data
    for block in rs.class_decomposition(h).blocks:
        members = [block.coset_members(k) for k in range(block.n_cosets)]
        if block.self_paired:
            pairs = [(i, j) for i in range(block.t) for j in range(block.t) if i < j]
            for coset in members:
                inside = set(coset)
                assert sum(1 for w in coset if g.inv[w] in inside) == block.m
        else:
            pairs = [(i, block.t + j) for i in range(block.t) for j in range(block.t)]
        for u, v in pairs:
            target = set(members[v])
            assert sum(1 for w in members[u] if g.inv[w] in target) == block.m


@given(groups_with_subgroup(), st.data())
@settings(max_examples=30, deadline=None)
def test_inner_set_is_valid_for_every_feasible_size(data, picks):
    g, h = data
    step = 2 if h.order % 2 else 1
    a = picks.draw(st.integers(min_value=0, max_value=(h.order - 1) // step)) * step
    inner = rs.inner_set(h, a)
    assert len(inner) == len(set(inner)) == a
    assert set(inner) <= set(h.members) - {0}
    assert is_inverse_closed(g, inner)
    assert inner == rs.inner_set(h, a)


@given(groups_with_subgroup(), st.data())
@settings(max_examples=30, deadline=None)
def test_block_bundles_are_disjoint_transversals(data, picks):
    g, h = data
    block = picks.draw(st.sampled_from(rs.class_decomposition(h).blocks))
    b = picks.draw(st.integers(min_value=0, max_value=h.order))
    graph = rs.build_layered_graph(block)
    try:
        bundle = rs.bundle_for_block(graph, b)
    except rs.OddBNeedsInvolution:
        assert b % 2 == 1 and block.self_paired and block.t % 2 == 1 and block.c == 0
        return
    assert len(bundle.parts) == b
    assert len(bundle.elements) == b * block.n_cosets
    for part in bundle.parts:
        for k in range(block.n_cosets):
            assert len(set(part) & set(block.coset_members(k))) == 1
    assert is_inverse_closed(g, bundle.elements)


@given(groups_with_subgroup(), st.data())
@settings(max_examples=30, deadline=None)
def test_built_sets_verify_or_demand_a_perfect_code(data, picks):
    g, h = data
    step = 2 if h.order % 2 else 1
    a = picks.draw(st.integers(min_value=0, max_value=(h.order - 1) // step)) * step
    b = picks.draw(st.integers(min_value=0, max_value=h.order))
    verdict = rs.is_perfect_code(h)
    try:
        cs = rs.build_connection_set(h, a, b)
    except rs.PerfectCodeRequired:
        assert b % 2 == 1 and not verdict.is_perfect_code
        return
    assert b % 2 == 0 or verdict.is_perfect_code
    assert len(cs.elements) == a + b * (h.index - 1)
    assert rs.check_regular_set(g, cs.elements, h, a, b).ok


@given(st.integers(min_value=1, max_value=16))
def test_bipartite_factors_partition_all_pairs(t):
    seen = set()
    for k in range(t):
        factor = rs.one_factorize_bipartite(t)[k]
        assert sorted(left for left, _ in factor) == list(range(t))
        assert sorted(right for _, right in factor) == list(range(t))
        seen.update(factor)
    assert len(seen) == t * t


@given(st.integers(min_value=1, max_value=8).map(lambda n: 2 * n))
def test_circle_factors_partition_complete_graph(order):
    rounds = rs.one_factorize_complete_even(order)
    assert len(rounds) == order - 1
    seen = set()
    for factor in rounds:
        assert sorted(v for edge in factor for v in edge) == sorted(range(order))
        seen.update(tuple(sorted(edge)) for edge in factor)
    assert len(seen) == order * (order - 1) // 2


@given(st.data())
def test_near_factorization_avoids_only_the_missing_vertex(picks):
    order = 2 * picks.draw(st.integers(min_value=0, max_value=7)) + 1
    missing = picks.draw(st.integers(min_value=0, max_value=order - 1))
    factor = rs.near_one_factorization_odd(order, missing)
    touched = sorted(v for edge in factor for v in edge)
    assert touched == sorted(set(range(order)) - {missing})


@given(groups_with_subgroup(), st.data())
@settings(max_examples=30, deadline=None)
def test_verifier_agrees_with_naive_counting(data, picks):
    g, h = data
    orbits = rs.inverse_orbits(g)
    chosen = [orb for orb in orbits if picks.draw(st.booleans())]
    s_ids = sorted(v for orb in chosen for v in orb)
    counts = naive_neighbor_counts(g, s_ids, h.members)
    inner = {counts[v] for v in h.members}
    outer = {counts[v] for v in range(g.order) if v not in h.member_set}
    a, b = min(inner), min(outer)
    report = rs.check_regular_set(g, s_ids, h, a, b)
    assert report.degree == len(s_ids)
    assert report.ok == (len(inner) == 1 and len(outer) == 1)
    if not report.ok:
        assert report.violations


@given(groups_with_subgroup(max_degree=4), st.data())
@settings(max_examples=20, deadline=None)
def test_search_finds_a_set_whenever_the_builder_does(data, picks):
    g, h = data
    assume(g.order <= 16)
    step = 2 if h.order % 2 else 1
    a = picks.draw(st.integers(min_value=0, max_value=(h.order - 1) // step)) * step
    b = picks.draw(st.integers(min_value=0, max_value=min(2, h.order)))
    try:
        rs.build_connection_set(h, a, b)
    except rs.PerfectCodeRequired:
        return
    found = rs.exhaustive_regular_search(g, h, a, b, cap=g.order)
    assert found is not None
    assert len(found) == a + b * (h.index - 1)
    assert rs.check_regular_set(g, found, h, a, b).ok


@pytest.mark.parametrize("name", ["cyclic:12", "dihedral:8", "quaternion:8"])
def test_builder_output_is_reproducible(name):
    g = rs.catalog(name)
    for h in rs.all_subgroups(g):
        if h.order in (1, g.order):
            continue
        first = rs.build_connection_set(h, 0, 2)
        second = rs.build_connection_set(h, 0, 2)
        assert first.elements == second.elements
        assert first.to_json() == second.to_json()
