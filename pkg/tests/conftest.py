"""Shared fixtures and independent helpers for the test suite.

The helpers here deliberately avoid the package's own data structures
where a check is meant to be an independent route: they work on plain
lists and tuples straight from the multiplication table.
"""

from __future__ import annotations

import pytest

import regsets as rs


def closure_images(degree: int, gens: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All permutations generated by composing the given image tuples."""
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for q in gens:
                composed = tuple(q[v] for v in p)
                if composed not in seen:
                    seen.add(composed)
                    fresh.append(composed)
        frontier = fresh
    return seen


def naive_neighbor_counts(g: rs.GroupTable, s_ids, h_members) -> list[int]:
    """counts[v] = |{s in S : s*v in H}|, computed with plain Python ints."""
    rows = g.table.tolist()
    h_set = set(h_members)
    return [sum(1 for s in s_ids if rows[s][v] in h_set) for v in range(g.order)]


def is_inverse_closed(g: rs.GroupTable, ids) -> bool:
    id_set = set(ids)
    return all(g.inv[v] in id_set for v in id_set)


def element_order(g: rs.GroupTable, v: int) -> int:
    n, w = 1, v
    while w != 0:
        w = int(g.table[w, v])
        n += 1
    return n


def proper_subgroups(g: rs.GroupTable) -> list[rs.Subgroup]:
    return [h for h in rs.all_subgroups(g) if h.order not in (1, g.order)]


SL23_GENS = [
    rs.Permutation(8, (1, 2, 3, 0, 6, 7, 5, 4)),
    rs.Permutation(8, (0, 4, 2, 5, 6, 7, 1, 3)),
]


@pytest.fixture(scope="session")
def z6_table() -> rs.GroupTable:
    table = [[(i + j) % 6 for j in range(6)] for i in range(6)]
    return rs.from_table(6, table, name="z6")


@pytest.fixture(scope="session")
def z6_h(z6_table: rs.GroupTable) -> rs.Subgroup:
    return rs.Subgroup(z6_table, [0, 3])


@pytest.fixture(scope="session")
def q8() -> rs.GroupTable:
    return rs.catalog("quaternion:8")


@pytest.fixture(scope="session")
def q8_center(q8: rs.GroupTable) -> rs.Subgroup:
    involution = next(v for v in range(1, 8) if q8.inv[v] == v)
    return rs.Subgroup(q8, [0, involution])


@pytest.fixture(scope="session")
def d8() -> rs.GroupTable:
    return rs.catalog("dihedral:8")


@pytest.fixture(scope="session")
def s3() -> rs.GroupTable:
    return rs.catalog("symmetric:3")


@pytest.fixture(scope="session")
def s4() -> rs.GroupTable:
    return rs.catalog("symmetric:4")


@pytest.fixture(scope="session")
def sl23() -> rs.GroupTable:
    return rs.from_permutation_generators(8, SL23_GENS, name="sl23")


@pytest.fixture(scope="session")
def sl23_z6_block(sl23: rs.GroupTable) -> rs.ClassBlock:
    h = next(h for h in rs.all_subgroups(sl23) if h.order == 6)
    dec = rs.class_decomposition(h)
    assert len(dec.blocks) == 1
    return dec.blocks[0]
