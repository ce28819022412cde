"""Bundles of disjoint inverse-closed transversals inside one block.

Per block the goal is b pairwise disjoint right transversals of H whose
union is inverse-closed. A block that is not self-paired always admits
|H| of them, each one individually inverse-closed. A self-paired block
with evenly many cosets admits |H| - m before topping up with the
diagonal cores; with oddly many cosets the bundle mixes
involution-anchored transversals (worth one part each) with
pair-anchored ones (worth two), and an odd b is feasible exactly when
the cosets carry involutions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import ClassBlock
from .errors import BOutOfRange, OddBNeedsInvolution, TOddInternal
from .factorization import (
    LayeredCosetGraph,
    near_one_factorization_odd,
    one_factorize_bipartite,
    one_factorize_complete_even,
)

__all__ = [
    "TransversalBundle",
    "bundle_for_block",
    "bundle_non_self_paired",
    "bundle_self_paired_even",
    "bundle_self_paired_odd",
]


@dataclass(frozen=True)
class TransversalBundle:
    """b disjoint right transversals of one block whose union is inverse-closed."""

    block: ClassBlock
    b: int
    parts: tuple[tuple[int, ...], ...]
    elements: tuple[int, ...]


def _check_b(block: ClassBlock, b: int) -> None:
    order = block.subgroup.order
    if not 0 <= b <= order:
        raise BOutOfRange(f"b must be in [0, {order}], got {b}")


def _assemble(graph: LayeredCosetGraph, b: int, parts: list[tuple[int, ...]]) -> TransversalBundle:
    """Package parts after re-checking the bundle invariants."""
    block = graph.block
    coset_of = {w: k for k, members in enumerate(graph.vertices) for w in members}
    inv = block.subgroup.group.inv
    seen: set[int] = set()
    for part in parts:
        cosets_hit = {coset_of[w] for w in part}
        if len(part) != len(graph.vertices) or cosets_hit != set(range(len(graph.vertices))):
            raise AssertionError("a part is not a transversal of the block's cosets")
        overlap = seen.intersection(part)
        if overlap:
            raise AssertionError(f"parts overlap at element {min(overlap)}")
        seen.update(part)
    if any(inv[w] not in seen for w in seen):
        raise AssertionError("bundle union is not inverse-closed")
    return TransversalBundle(block=block, b=b, parts=tuple(parts), elements=tuple(sorted(seen)))


def _all_parts_non_self_paired(graph: LayeredCosetGraph) -> list[tuple[int, ...]]:
    t = graph.block.t
    parts: list[tuple[int, ...]] = []
    for layer in range(graph.block.m):
        for factor in one_factorize_bipartite(t):
            ids: list[int] = []
            for i, j in factor:
                w, wi = graph.element_pair(i, t + j, layer)
                ids.extend((w, wi))
            parts.append(tuple(sorted(ids)))
    return parts


def bundle_non_self_paired(graph: LayeredCosetGraph, b: int) -> TransversalBundle:
    """First b of the |H| transversals threading both halves of the block.

    Part (layer, factor) matches each coset of the first half with one of
    the second half and takes the inverse pair on that edge, so every part
    is inverse-closed by itself. Enumeration is layer-major.
    """
    block = graph.block
    _check_b(block, b)
    if block.self_paired:
        raise AssertionError("paired-halves builder got a self-paired block")
    return _assemble(graph, b, _all_parts_non_self_paired(graph)[:b])


def _factorized_parts_self_paired_even(graph: LayeredCosetGraph) -> list[tuple[int, ...]]:
    t = graph.block.t
    rounds = one_factorize_complete_even(t)
    parts: list[tuple[int, ...]] = []
    for layer in range(graph.block.m):
        for rnd in rounds:
            ids: list[int] = []
            for u, v in rnd:
                w, wi = graph.element_pair(u, v, layer)
                ids.extend((w, wi))
            parts.append(tuple(sorted(ids)))
    return parts


def bundle_self_paired_even(graph: LayeredCosetGraph, b: int) -> TransversalBundle:
    """Circle-method transversals, topped up with the diagonal cores.

    The m(t-1) = |H| - m base parts (layer-major, round-minor) are each
    inverse-closed. When b exceeds that, the remainder of the block is
    exactly the union of the cosets' diagonal cores, which splits into m
    further transversals by core position; those are appended after the
    first b - m base parts, and only their union is inverse-closed.
    """
    block = graph.block
    _check_b(block, b)
    if not block.self_paired:
        raise AssertionError("self-paired builder got an unpaired block")
    if block.t % 2:
        raise TOddInternal(f"even-coset builder got t = {block.t}")
    base = _factorized_parts_self_paired_even(graph)
    if b <= len(base):
        return _assemble(graph, b, base[:b])
    parts = base[: b - block.m]
    for k in range(block.m):
        parts.append(tuple(sorted(graph.cores[i][k] for i in range(block.t))))
    return _assemble(graph, b, parts)


def bundle_self_paired_odd(graph: LayeredCosetGraph, b: int, require_odd_ok: bool = True) -> TransversalBundle:
    """Near-matching transversals anchored on the diagonal cores.

    With t = 2n+1 cosets, anchor element i of core position j and route
    the near-perfect matching that misses coset i through layer j. An
    involution anchor (positions 0..c-1) yields one inverse-closed part;
    an inverse-pair anchor (positions c+2l, c+2l+1) yields two parts whose
    union is inverse-closed. Pair-anchored parts are taken first, two at a
    time in (l, i) order, then involution-anchored ones in (j, i) order.
    An odd b spends the first involution-anchored part up front, which is
    possible only when c >= 1.
    """
    block = graph.block
    _check_b(block, b)
    if not block.self_paired:
        raise AssertionError("self-paired builder got an unpaired block")
    if block.t % 2 == 0:
        raise TOddInternal(f"odd-coset builder got t = {block.t}")
    if b % 2:
        if block.c == 0:
            raise OddBNeedsInvolution(
                f"b = {b} is odd but cosets of the block at {block.rep_x} hold no involutions",
                block=block,
            )
        if not require_odd_ok:
            raise OddBNeedsInvolution(
                f"odd b = {b} was not cleared for the block at {block.rep_x}",
                block=block,
            )

    t = block.t
    matchings = [near_one_factorization_odd(t, i) for i in range(t)]

    def routed(i: int, layer: int) -> list[int]:
        ids: list[int] = []
        for u, v in matchings[i]:
            w, wi = graph.element_pair(u, v, layer)
            ids.extend((w, wi))
        return ids

    def anchored(i: int, j: int) -> tuple[int, ...]:
        return tuple(sorted([graph.cores[i][j], *routed(i, j)]))

    parts: list[tuple[int, ...]] = []
    remaining = b
    skip_first_anchor = False
    if b % 2:
        parts.append(anchored(0, 0))
        remaining -= 1
        skip_first_anchor = True
    for l in range(block.d):
        if remaining < 2:
            break
        for i in range(t):
            if remaining < 2:
                break
            parts.append(anchored(i, block.c + 2 * l))
            parts.append(anchored(i, block.c + 2 * l + 1))
            remaining -= 2
    for j in range(block.c):
        if remaining == 0:
            break
        for i in range(t):
            if remaining == 0:
                break
            if skip_first_anchor and j == 0 and i == 0:
                continue
            parts.append(anchored(i, j))
            remaining -= 1
    if remaining:
        raise AssertionError(f"could not assemble {b} parts in the block at {block.rep_x}")
    return _assemble(graph, b, parts)


def bundle_for_block(graph: LayeredCosetGraph, b: int) -> TransversalBundle:
    """Route to the right bundle builder for the block's shape."""
    block = graph.block
    if not block.self_paired:
        return bundle_non_self_paired(graph, b)
    if block.t % 2 == 0:
        return bundle_self_paired_even(graph, b)
    return bundle_self_paired_odd(graph, b)
