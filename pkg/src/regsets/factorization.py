"""Layered coset graphs and the matchings that slice them into transversals.

Any two right cosets of a block that exchange inverses do so through
exactly m elements; listing those by increasing id splits the block's
inverse pairs into m simple layers. Each layer is a complete graph on the
block's cosets when the block is self-paired and a complete bipartite
graph between the two halves otherwise. The closed-form factorizations
below cut layers into matchings, and a matching pulls back to an
inverse-closed element set touching each matched coset exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cosets import ClassBlock
from .errors import EdgeNotFound, IndexOutOfRange

__all__ = [
    "LayeredCosetGraph",
    "Matching",
    "build_layered_graph",
    "matching_to_elements",
    "near_one_factorization_odd",
    "one_factorize_bipartite",
    "one_factorize_complete_even",
    "resolve_matching",
]


class LayeredCosetGraph:
    """Cosets of one block as vertices, inverse pairs as labelled edges.

    ``pair_edges`` maps each eligible vertex pair (i, j), i < j, to the m
    inverse pairs (w, w^{-1}) with w in coset i and w^{-1} in coset j,
    ordered by increasing w. Layer l consists of edge l of every pair.
    For self-paired blocks ``cores`` additionally records each coset's
    same-coset inverse content: involutions by increasing id, then inverse
    pairs (s, s^{-1}) consecutively by increasing smaller member.
    """

    __slots__ = ("block", "vertices", "pair_edges", "cores")

    def __init__(self, block: ClassBlock):
        inv = block.subgroup.group.inv
        vertices = tuple(block.coset_members(k) for k in range(block.n_cosets))
        vertex_sets = [set(v) for v in vertices]
        t = block.t
        if block.self_paired:
            eligible = [(i, j) for i in range(t) for j in range(i + 1, t)]
        else:
            eligible = [(i, t + j) for i in range(t) for j in range(t)]
        pair_edges: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        for i, j in eligible:
            crossing = tuple((w, inv[w]) for w in vertices[i] if inv[w] in vertex_sets[j])
            if len(crossing) != block.m:
                raise AssertionError(
                    f"cosets {i} and {j} exchange {len(crossing)} inverses, expected {block.m}"
                )
            pair_edges[(i, j)] = crossing

        cores: tuple[tuple[int, ...], ...] = ()
        if block.self_paired:
            ordered_cores = []
            for k in range(t):
                inside = [w for w in vertices[k] if inv[w] in vertex_sets[k]]
                ordered = sorted(w for w in inside if inv[w] == w)
                for s in sorted(w for w in inside if w < inv[w]):
                    ordered.append(s)
                    ordered.append(inv[s])
                if len(ordered) != block.m:
                    raise AssertionError(f"core of coset {k} has size {len(ordered)}, expected {block.m}")
                ordered_cores.append(tuple(ordered))
            cores = tuple(ordered_cores)

        self.block = block
        self.vertices = vertices
        self.pair_edges = pair_edges
        self.cores = cores

    @property
    def n_layers(self) -> int:
        return self.block.m

    def eligible_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.pair_edges))

    def _check_layer(self, layer: int) -> None:
        if not 0 <= layer < self.block.m:
            raise IndexOutOfRange(f"layer {layer} is not in [0, {self.block.m})")

    def element_pair(self, u: int, v: int, layer: int) -> tuple[int, int]:
        """The inverse pair on edge number `layer` between cosets u and v."""
        self._check_layer(layer)
        key = (u, v) if u < v else (v, u)
        edges = self.pair_edges.get(key)
        if edges is None:
            raise EdgeNotFound(f"cosets {u} and {v} exchange no inverses")
        return edges[layer]

    def layer_edges(self, layer: int) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        """All ((u, v), (w, w_inverse)) entries of one simple layer."""
        self._check_layer(layer)
        return tuple((key, self.pair_edges[key][layer]) for key in sorted(self.pair_edges))

    def __repr__(self) -> str:
        shape = "self-paired" if self.block.self_paired else "bipartite"
        return f"LayeredCosetGraph({shape}, vertices={len(self.vertices)}, layers={self.block.m})"


def build_layered_graph(block: ClassBlock) -> LayeredCosetGraph:
    """Slice a block into its labelled coset graph."""
    return LayeredCosetGraph(block)


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint labelled edges of a layered coset graph."""

    edges: tuple[tuple[int, int, int], ...]
    element_pairs: tuple[tuple[int, int], ...]

    def element_ids(self) -> tuple[int, ...]:
        out: list[int] = []
        for w, wi in self.element_pairs:
            out.append(w)
            out.append(wi)
        return tuple(sorted(out))


def resolve_matching(graph: LayeredCosetGraph, edges: Iterable[tuple[int, int, int]]) -> Matching:
    """Normalize (u, v, layer) triples into a Matching, enforcing disjointness."""
    resolved: list[tuple[tuple[int, int, int], tuple[int, int]]] = []
    used: set[int] = set()
    for u, v, layer in edges:
        pair = graph.element_pair(u, v, layer)
        lo, hi = (u, v) if u < v else (v, u)
        if lo in used or hi in used:
            raise ValueError(f"coset repeats in matching at edge ({u}, {v})")
        used.add(lo)
        used.add(hi)
        resolved.append(((lo, hi, layer), pair))
    resolved.sort()
    return Matching(
        edges=tuple(e for e, _ in resolved),
        element_pairs=tuple(p for _, p in resolved),
    )


def matching_to_elements(graph: LayeredCosetGraph, matching: Matching) -> tuple[int, ...]:
    """Union of the element pairs a matching carries, as a sorted id tuple."""
    for (u, v, layer), pair in zip(matching.edges, matching.element_pairs):
        if graph.element_pair(u, v, layer) != pair:
            raise EdgeNotFound(f"edge ({u}, {v}, {layer}) does not carry {pair}")
    return matching.element_ids()


def one_factorize_bipartite(t: int) -> list[list[tuple[int, int]]]:
    """The t shift factors of K_{t,t}; factor k pairs left i with right (i+k) mod t."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    return [[(i, (i + k) % t) for i in range(t)] for k in range(t)]


def one_factorize_complete_even(order: int) -> list[list[tuple[int, int]]]:
    """Circle-method perfect matchings of K_order for even order.

    Vertex order-1 sits at the hub; round r pairs it with r and folds the
    remaining vertices symmetrically around r. The order-1 rounds are
    pairwise edge-disjoint and cover every edge.
    """
    if order < 2 or order % 2:
        raise ValueError(f"order must be even and at least 2, got {order}")
    n = order // 2
    rounds: list[list[tuple[int, int]]] = []
    for r in range(order - 1):
        edges = [(r, order - 1)]
        for i in range(1, n):
            u = (r + i) % (order - 1)
            v = (r - i) % (order - 1)
            edges.append((u, v) if u < v else (v, u))
        rounds.append(sorted(edges))
    return rounds


def near_one_factorization_odd(order: int, missing: int) -> list[tuple[int, int]]:
    """The near-perfect matching of K_order (order odd) that misses one vertex.

    Edge l joins (missing - l) and (missing + l) mod order for 1 <= l <= n;
    distinct missing vertices give edge-disjoint matchings that together
    cover every edge.
    """
    if order < 1 or order % 2 == 0:
        raise ValueError(f"order must be odd and at least 1, got {order}")
    if not 0 <= missing < order:
        raise IndexOutOfRange(f"vertex {missing} is not in [0, {order})")
    n = order // 2
    edges = []
    for l in range(1, n + 1):
        u = (missing - l) % order
        v = (missing + l) % order
        edges.append((u, v) if u < v else (v, u))
    return sorted(edges)
