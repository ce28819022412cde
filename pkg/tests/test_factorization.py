"""Layered coset graphs, matchings, and the closed-form factorizations."""

from __future__ import annotations

import pytest

import regsets as rs
from conftest import proper_subgroups


def _cover_check(order: int, rounds) -> None:
    seen = set()
    for edges in rounds:
        touched = set()
        for u, v in edges:
            assert 0 <= u < order and 0 <= v < order and u != v
            key = (u, v) if u < v else (v, u)
            assert key not in seen
            seen.add(key)
            assert u not in touched and v not in touched
            touched.update((u, v))
    assert len(seen) == order * (order - 1) // 2


def test_z6_block_graph(z6_h):
    block = rs.class_decomposition(z6_h).blocks[0]
    graph = rs.build_layered_graph(block)
    assert graph.vertices == ((1, 4), (2, 5))
    assert graph.n_layers == 2
    assert graph.eligible_pairs() == ((0, 1),)
    assert graph.pair_edges[(0, 1)] == ((1, 5), (4, 2))
    assert graph.cores == ()


def test_element_pair_lookup(z6_h):
    graph = rs.build_layered_graph(rs.class_decomposition(z6_h).blocks[0])
    assert graph.element_pair(0, 1, 0) == (1, 5)
    assert graph.element_pair(1, 0, 1) == (4, 2)
    with pytest.raises(rs.EdgeNotFound):
        graph.element_pair(0, 0, 0)
    with pytest.raises(rs.IndexOutOfRange):
        graph.element_pair(0, 1, 2)


def test_q8_block_has_core_only(q8, q8_center):
    block = rs.class_decomposition(q8_center).blocks[0]
    graph = rs.build_layered_graph(block)
    assert graph.pair_edges == {}
    assert len(graph.cores) == 1
    core = graph.cores[0]
    assert len(core) == 2
    assert q8.inv[core[0]] == core[1] and core[0] < core[1]


def test_s4_block_layers_are_triangles(s4):
    h = next(sg for sg in rs.all_subgroups(s4) if sg.order == 3)
    block = next(b for b in rs.class_decomposition(h).blocks if b.t == 3)
    graph = rs.build_layered_graph(block)
    assert graph.n_layers == 1
    assert graph.eligible_pairs() == ((0, 1), (0, 2), (1, 2))
    assert len(graph.layer_edges(0)) == 3
    # cores hold one involution per coset
    for k, core in enumerate(graph.cores):
        assert len(core) == 1
        assert s4.inv[core[0]] == core[0]


def test_core_ordering_involutions_then_pairs(d8):
    h = next(sg for sg in rs.all_subgroups(d8) if sg.order == 4 and any(d8.inv[v] == v for v in sg.members[1:]))
    for block in rs.class_decomposition(h).blocks:
        if not block.self_paired:
            continue
        graph = rs.build_layered_graph(block)
        for core in graph.cores:
            invols = [w for w in core if d8.inv[w] == w]
            assert core[: len(invols)] == tuple(sorted(invols))
            rest = core[len(invols):]
            assert all(d8.inv[rest[i]] == rest[i + 1] for i in range(0, len(rest), 2))


def test_sl23_core_is_an_inverse_pair(sl23, sl23_z6_block):
    graph = rs.build_layered_graph(sl23_z6_block)
    assert len(graph.cores) == 3
    for core in graph.cores:
        s, si = core
        assert s != si and sl23.inv[s] == si and s < si


def test_layer_edges_partition_cross_pairs():
    for name in ("dihedral:12", "symmetric:4", "cyclic:2xcyclic:4"):
        g = rs.catalog(name)
        for h in proper_subgroups(g):
            for block in rs.class_decomposition(h).blocks:
                graph = rs.build_layered_graph(block)
                elems: list[int] = []
                for layer in range(graph.n_layers):
                    for _, (w, wi) in graph.layer_edges(layer):
                        assert g.inv[w] == wi
                        elems.extend((w, wi))
                for core in graph.cores:
                    elems.extend(core)
                # together the labelled edges and cores cover the block exactly
                assert sorted(elems) == list(block.element_ids())


def test_resolve_matching_and_elements(z6_h):
    graph = rs.build_layered_graph(rs.class_decomposition(z6_h).blocks[0])
    matching = rs.resolve_matching(graph, [(1, 0, 1)])
    assert matching.edges == ((0, 1, 1),)
    assert matching.element_pairs == ((4, 2),)
    assert rs.matching_to_elements(graph, matching) == (2, 4)
    empty = rs.resolve_matching(graph, [])
    assert rs.matching_to_elements(graph, empty) == ()


def test_resolve_matching_rejects_overlap(s4):
    h = next(sg for sg in rs.all_subgroups(s4) if sg.order == 3)
    block = next(b for b in rs.class_decomposition(h).blocks if b.t == 3)
    graph = rs.build_layered_graph(block)
    with pytest.raises(ValueError):
        rs.resolve_matching(graph, [(0, 1, 0), (1, 2, 0)])


def test_matching_to_elements_rejects_stale_pairs(z6_h):
    graph = rs.build_layered_graph(rs.class_decomposition(z6_h).blocks[0])
    stale = rs.Matching(edges=((0, 1, 0),), element_pairs=((4, 2),))
    with pytest.raises(rs.EdgeNotFound):
        rs.matching_to_elements(graph, stale)


def test_one_factorize_bipartite_small():
    assert rs.one_factorize_bipartite(1) == [[(0, 0)]]
    assert rs.one_factorize_bipartite(2) == [[(0, 0), (1, 1)], [(0, 1), (1, 0)]]


@pytest.mark.parametrize("t", range(1, 13))
def test_one_factorize_bipartite_covers(t):
    factors = rs.one_factorize_bipartite(t)
    assert len(factors) == t
    seen = set()
    for factor in factors:
        assert sorted(i for i, _ in factor) == list(range(t))
        assert sorted(j for _, j in factor) == list(range(t))
        seen.update(factor)
    assert len(seen) == t * t


def test_one_factorize_complete_even_small():
    assert rs.one_factorize_complete_even(2) == [[(0, 1)]]
    rounds = rs.one_factorize_complete_even(4)
    assert len(rounds) == 3
    _cover_check(4, rounds)


@pytest.mark.parametrize("order", range(2, 13, 2))
def test_one_factorize_complete_even_covers(order):
    rounds = rs.one_factorize_complete_even(order)
    assert len(rounds) == order - 1
    assert all(len(r) == order // 2 for r in rounds)
    _cover_check(order, rounds)


def test_one_factorize_complete_rejects_odd():
    with pytest.raises(ValueError):
        rs.one_factorize_complete_even(5)
    with pytest.raises(ValueError):
        rs.one_factorize_complete_even(0)


def test_near_one_factorization_smallest():
    assert rs.near_one_factorization_odd(1, 0) == []
    assert rs.near_one_factorization_odd(3, 0) == [(1, 2)]
    assert rs.near_one_factorization_odd(3, 1) == [(0, 2)]


@pytest.mark.parametrize("order", range(1, 12, 2))
def test_near_one_factorization_covers(order):
    rounds = [rs.near_one_factorization_odd(order, i) for i in range(order)]
    for i, edges in enumerate(rounds):
        assert len(edges) == order // 2
        touched = {v for e in edges for v in e}
        assert i not in touched
        assert len(touched) == order - 1
    _cover_check(order, rounds)


def test_near_one_factorization_rejects_bad_input():
    with pytest.raises(ValueError):
        rs.near_one_factorization_odd(4, 0)
    with pytest.raises(rs.IndexOutOfRange):
        rs.near_one_factorization_odd(5, 5)
    with pytest.raises(rs.IndexOutOfRange):
        rs.near_one_factorization_odd(5, -1)
