"""Deciding whether a subgroup is a perfect code of some Cayley graph.

H is a perfect code of G exactly when some inverse-closed, identity-free S
makes H a (0,1)-regular set, which happens exactly when there is an
inverse-closed right transversal of H in G. The fast criterion checked
here: every self-paired block with an odd number of cosets must carry an
involution in each right coset (c >= 1). Blocks that are not self-paired,
or have evenly many cosets, never obstruct.

``oracle_inverse_closed_transversal`` is the slow independent route: a
direct backtracking search for the transversal itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import (
    ClassBlock,
    ClassDecomposition,
    Subgroup,
    class_decomposition,
    involutions_in_coset,
    right_coset,
)
from .errors import OracleCapExceeded

__all__ = ["PerfectCodeVerdict", "is_perfect_code", "oracle_inverse_closed_transversal"]

ORACLE_CAP_DEFAULT = 200


@dataclass(frozen=True)
class PerfectCodeVerdict:
    """Decision plus evidence: witnesses on success, the violating block on failure.

    ``witnesses`` maps each self-paired odd block's representative to the
    smallest involution in its representative coset; ``violation`` is the
    first block (in representative order) that is self-paired with odd t
    and has no involutions.
    """

    is_perfect_code: bool
    witnesses: tuple[tuple[int, int], ...] | None
    violation: ClassBlock | None


def is_perfect_code(h: Subgroup, decomposition: ClassDecomposition | None = None) -> PerfectCodeVerdict:
    """Decide whether H is a perfect code of its parent group."""
    dec = decomposition if decomposition is not None else class_decomposition(h)
    witnesses: list[tuple[int, int]] = []
    for block in dec.blocks:
        if not (block.self_paired and block.t % 2 == 1):
            continue
        if block.c == 0:
            return PerfectCodeVerdict(is_perfect_code=False, witnesses=None, violation=block)
        _, invs = involutions_in_coset(h, block.rep_x)
        witnesses.append((block.rep_x, invs[0]))
    return PerfectCodeVerdict(is_perfect_code=True, witnesses=tuple(witnesses), violation=None)


def oracle_inverse_closed_transversal(
    h: Subgroup, *, cap: int = ORACLE_CAP_DEFAULT
) -> tuple[int, ...] | None:
    """Search directly for an inverse-closed right transversal of H in G.

    Backtracks over cosets in minimal-representative order, trying elements
    in increasing id; picking w forces w^{-1} as the choice of its own
    coset. The identity is fixed as the representative of H itself: any
    inverse-closed transversal can be normalized to one through the
    identity, so this loses no solutions. Returns the lexicographically
    first transversal (as a sorted tuple) or None.
    """
    g = h.group
    if g.order > cap:
        raise OracleCapExceeded(f"order {g.order} exceeds the oracle cap {cap}")
    inv = g.inv
    coset_of = [-1] * g.order
    cosets: list[tuple[int, ...]] = []
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        members = right_coset(h, x)
        idx = len(cosets)
        for y in members:
            coset_of[y] = idx
        cosets.append(members)

    chosen: dict[int, int] = {0: 0}

    def extend(k: int) -> bool:
        if k == len(cosets):
            return True
        if k in chosen:
            return extend(k + 1)
        for w in cosets[k]:
            wi = inv[w]
            kc = coset_of[wi]
            if kc == k:
                if wi != w:
                    continue
                chosen[k] = w
                if extend(k + 1):
                    return True
                del chosen[k]
            elif kc in chosen:
                if chosen[kc] != wi:
                    continue
                chosen[k] = w
                if extend(k + 1):
                    return True
                del chosen[k]
            else:
                chosen[k] = w
                chosen[kc] = wi
                if extend(k + 1):
                    return True
                del chosen[k]
                del chosen[kc]
        return False

    if extend(0):
        return tuple(sorted(chosen.values()))
    return None
