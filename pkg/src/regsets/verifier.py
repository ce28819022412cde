"""Independent verification of (a,b)-regularity, plus exhaustive search.

``check_regular_set`` counts neighbors straight off the multiplication
table; it shares no code with the construction in ``builder`` so the two
act as independent routes to the same answer. In the Cayley graph of S the
neighbors of v are exactly {s*v : s in S}, so the number of neighbors of v
inside H is |{s in S : s*v in H}|.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .cosets import Subgroup
from .errors import CapExceeded, IdentityInS, IdOutOfRange, NotInverseClosed
from .groups import GroupTable

__all__ = ["RegularSetReport", "check_regular_set", "exhaustive_regular_search", "inverse_orbits"]

SEARCH_CAP_DEFAULT = 16


@dataclass(frozen=True)
class RegularSetReport:
    """Outcome of one regularity check.

    ``a_observed``/``b_observed`` are the uniform neighbor counts on H and
    on its complement, or None when the counts are not uniform (or the side
    is empty). ``violations`` lists (vertex, count, expected) mismatches.
    The quotient matrix and its second eigenvalue are recorded only when
    the check succeeds; the eigenvalues of [[a, deg-a], [b, deg-b]] are
    exactly deg and a-b, by integer arithmetic.
    """

    ok: bool
    degree: int
    a_observed: int | None
    b_observed: int | None
    violations: tuple[tuple[int, int, int], ...]
    quotient_matrix: tuple[tuple[int, int], tuple[int, int]] | None
    second_eigenvalue: int | None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "degree": self.degree,
            "a_observed": self.a_observed,
            "b_observed": self.b_observed,
            "violations": [list(v) for v in self.violations],
            "quotient_matrix": [list(r) for r in self.quotient_matrix] if self.quotient_matrix else None,
            "second_eigenvalue": self.second_eigenvalue,
        }


def _validated_ids(g: GroupTable, s) -> list[int]:
    ids = sorted({int(v) for v in s})
    for v in ids:
        if not 0 <= v < g.order:
            raise IdOutOfRange(f"id {v} is not in [0, {g.order})")
    sset = set(ids)
    if 0 in sset:
        raise IdentityInS("connection sets must not contain the identity")
    for v in ids:
        if g.inv[v] not in sset:
            raise NotInverseClosed(f"inverse of {v} is missing from the set")
    return ids


def check_regular_set(g: GroupTable, s, h: Subgroup, a: int, b: int) -> RegularSetReport:
    """Check whether S makes H an (a,b)-regular set in the Cayley graph of S."""
    ids = _validated_ids(g, s)
    counts = _kernels.subset_neighbor_counts(
        g.table, np.asarray(ids, dtype=np.int32), h.mask
    )
    violations = []
    inside: set[int] = set()
    outside: set[int] = set()
    for v in range(g.order):
        count = int(counts[v])
        if v in h.member_set:
            inside.add(count)
            expected = a
        else:
            outside.add(count)
            expected = b
        if count != expected:
            violations.append((v, count, expected))
    ok = not violations
    degree = len(ids)
    a_observed = inside.pop() if len(inside) == 1 else None
    b_observed = outside.pop() if len(outside) == 1 else None
    return RegularSetReport(
        ok=ok,
        degree=degree,
        a_observed=a_observed,
        b_observed=b_observed,
        violations=tuple(violations),
        quotient_matrix=((a, degree - a), (b, degree - b)) if ok else None,
        second_eigenvalue=a - b if ok else None,
    )


def inverse_orbits(g: GroupTable) -> list[tuple[int, ...]]:
    """Involution singletons and inverse pairs covering all non-identity ids."""
    orbits: list[tuple[int, ...]] = []
    for v in range(1, g.order):
        w = g.inv[v]
        if w == v:
            orbits.append((v,))
        elif v < w:
            orbits.append((v, w))
    return orbits


def exhaustive_regular_search(
    g: GroupTable, h: Subgroup, a: int, b: int, *, cap: int = SEARCH_CAP_DEFAULT
) -> tuple[int, ...] | None:
    """First inverse-closed S making H (a,b)-regular, scanning orbit bitmasks.

    Enumeration order: orbits sorted by smallest member, masks in increasing
    numeric order. Any qualifying S must satisfy |S| = a + b([G:H] - 1) by
    counting the edges between H and its complement, so other sizes are
    skipped without checking.
    """
    if g.order > cap:
        raise CapExceeded(f"order {g.order} exceeds the search cap {cap}")
    orbits = inverse_orbits(g)
    if len(orbits) > 62:  # unreachable under the default cap
        raise CapExceeded("too many inverse orbits for a 64-bit mask scan")
    required = a + b * (g.order // h.order - 1)
    if required < 0 or required > g.order - 1:
        return None
    offsets = np.zeros(len(orbits) + 1, dtype=np.int32)
    flat: list[int] = []
    for k, orbit in enumerate(orbits):
        flat.extend(orbit)
        offsets[k + 1] = len(flat)
    mask = _kernels.find_regular_mask(
        g.table,
        h.mask,
        offsets,
        np.asarray(flat, dtype=np.int32),
        a,
        b,
        required,
    )
    if mask < 0:
        return None
    chosen: list[int] = []
    for k, orbit in enumerate(orbits):
        if mask >> k & 1:
            chosen.extend(orbit)
    return tuple(sorted(chosen))
