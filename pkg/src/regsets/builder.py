"""Assembling connection sets that make a subgroup an (a,b)-regular set.

The connection set splits into an inner part (an inverse-closed subset of
H minus the identity, of size a) and an outer part (b disjoint transversals
per block, with inverse-closed union). Any S built here has size
a + b * ([G:H] - 1) and is checked again by the verifier module before a
caller should trust it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import ClassDecomposition, Subgroup, class_decomposition
from .errors import AOutOfRange, BOutOfRange, OddBNeedsInvolution, ParityViolation, PerfectCodeRequired
from .factorization import build_layered_graph
from .perfect_code import is_perfect_code
from .transversals import TransversalBundle, bundle_for_block

__all__ = ["ConnectionSet", "build_connection_set", "inner_set"]


@dataclass(frozen=True)
class ConnectionSet:
    """An inverse-closed, identity-free S making H an (a,b)-regular set."""

    a: int
    b: int
    inner: tuple[int, ...]
    outer: tuple[int, ...]
    elements: tuple[int, ...]
    provenance: tuple[TransversalBundle, ...]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "S": list(self.elements),
            "size": len(self.elements),
            "blocks": [
                {
                    "rep": bundle.block.rep_x,
                    "self_paired": bundle.block.self_paired,
                    "parts": [list(part) for part in bundle.parts],
                }
                for bundle in self.provenance
            ],
        }


def inner_set(h: Subgroup, a: int) -> tuple[int, ...]:
    """Deterministic inverse-closed subset of H minus the identity, of size a.

    Involutions come first (increasing id), then whole inverse pairs by
    increasing smaller member. When a cannot be reached with all available
    involutions plus whole pairs, one involution is dropped to fix the
    parity; the precondition (a even whenever |H| is odd) makes that
    always possible.
    """
    if not 0 <= a <= h.order - 1:
        raise AOutOfRange(f"a must be in [0, {h.order - 1}], got {a}")
    if h.order % 2 and a % 2:
        raise ParityViolation(f"a = {a} is odd but the subgroup order {h.order} is odd")
    inv = h.group.inv
    involutions = [v for v in h.members if v != 0 and inv[v] == v]
    pairs = [(v, inv[v]) for v in h.members if v != 0 and v < inv[v]]
    k = min(a, len(involutions))
    if (a - k) % 2:
        k -= 1
    chosen = list(involutions[:k])
    for s, si in pairs[: (a - k) // 2]:
        chosen.append(s)
        chosen.append(si)
    if len(chosen) != a:
        raise AssertionError(f"inner set assembly produced {len(chosen)} elements for a = {a}")
    return tuple(sorted(chosen))


def build_connection_set(
    h: Subgroup,
    a: int,
    b: int,
    *,
    strict_precheck: bool = False,
    decomposition: ClassDecomposition | None = None,
) -> ConnectionSet:
    """Build S = inner part of size a plus b transversals through every block.

    Odd b fails on the first block that cannot host it (or up front when
    strict_precheck is set), surfacing the obstruction as
    PerfectCodeRequired with the violating block attached.
    """
    if not 0 <= b <= h.order:
        raise BOutOfRange(f"b must be in [0, {h.order}], got {b}")
    inner = inner_set(h, a)
    dec = decomposition if decomposition is not None else class_decomposition(h)
    if strict_precheck and b % 2:
        verdict = is_perfect_code(h, dec)
        if not verdict.is_perfect_code:
            block = verdict.violation
            raise PerfectCodeRequired(
                f"b = {b} is odd but the subgroup is not a perfect code "
                f"(blocked at representative {block.rep_x})",
                block=block,
            )

    bundles: list[TransversalBundle] = []
    outer: list[int] = []
    for block in dec.blocks:
        graph = build_layered_graph(block)
        try:
            bundle = bundle_for_block(graph, b)
        except OddBNeedsInvolution as exc:
            raise PerfectCodeRequired(
                f"b = {b} is odd but the subgroup is not a perfect code "
                f"(blocked at representative {block.rep_x})",
                block=exc.block,
            ) from exc
        bundles.append(bundle)
        outer.extend(bundle.elements)

    elements = tuple(sorted(inner + tuple(outer)))
    if len(elements) != a + b * (h.index - 1):
        raise AssertionError(
            f"assembled {len(elements)} elements, expected {a + b * (h.index - 1)}"
        )
    return ConnectionSet(
        a=a,
        b=b,
        inner=inner,
        outer=tuple(sorted(outer)),
        elements=elements,
        provenance=tuple(bundles),
    )
