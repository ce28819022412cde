"""Subgroups, cosets, double cosets and the block decomposition of G minus H.

For a subgroup H and x outside H, the set HxH (together with Hx^{-1}H when
that is a different double coset) is called a block here. G minus H splits
into disjoint blocks; each carries the parameters that drive the transversal
constructions:

* m = |H intersect x^{-1}Hx|, the number of parallel edges between eligible
  coset pairs;
* t = |H| / m, the number of right cosets in HxH;
* on self-paired blocks (HxH = Hx^{-1}H) every right coset Hy contains
  exactly m elements whose inverse stays in Hy (its diagonal core), made of
  c involutions and d inverse pairs with m = c + 2d.

Blocks that are not self-paired contain no involutions and have empty
cores; they are recorded with c = d = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import (
    IdOutOfRange,
    InputFormatError,
    NotASubgroup,
    NotSelfPaired,
    SubgroupNotProper,
    SubgroupTrivial,
    XInSubgroup,
)
from .groups import GroupTable

__all__ = [
    "ClassBlock",
    "ClassDecomposition",
    "Subgroup",
    "all_subgroups",
    "class_decomposition",
    "conj_intersection",
    "double_coset",
    "inverse_closed_core",
    "involutions_in_coset",
    "load_subgroup_json",
    "right_coset",
    "subgroup_closure",
]


class Subgroup:
    """Sorted, validated set of element ids closed under product and inverse."""

    __slots__ = ("group", "members", "member_set", "mask")

    def __init__(self, group: GroupTable, members: Iterable[int]):
        ids = sorted({int(v) for v in members})
        for v in ids:
            if not 0 <= v < group.order:
                raise IdOutOfRange(f"id {v} is not in [0, {group.order})")
        if not ids or ids[0] != 0:
            raise NotASubgroup("a subgroup must contain the identity (id 0)")
        member_set = frozenset(ids)
        table = group.table
        for x in ids:
            if group.inv[x] not in member_set:
                raise NotASubgroup(f"member {x} has its inverse outside the set")
            row = table[x]
            for y in ids:
                if int(row[y]) not in member_set:
                    raise NotASubgroup(f"product {x}*{y} = {int(row[y])} escapes the set")
        if group.order % len(ids) != 0:  # unreachable once closure holds
            raise NotASubgroup("size does not divide the group order")
        mask = np.zeros(group.order, dtype=np.uint8)
        mask[ids] = 1
        mask.flags.writeable = False
        self.group = group
        self.members = tuple(ids)
        self.member_set = member_set
        self.mask = mask

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.group.order // len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.member_set

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.group!r})"


def _closure_members(group: GroupTable, seeds: Iterable[int]) -> tuple[int, ...]:
    table = group.table
    inv = group.inv
    members = [0]
    member_set = {0}
    pending = [int(v) for v in sorted(set(seeds)) if v != 0]
    while pending:
        x = pending.pop()
        if x in member_set:
            continue
        member_set.add(x)
        members.append(x)
        fresh = [inv[x]]
        row = table[x]
        for y in members:
            fresh.append(int(row[y]))
            fresh.append(int(table[y][x]))
        pending.extend(v for v in fresh if v not in member_set)
    return tuple(sorted(member_set))


def subgroup_closure(group: GroupTable, seeds: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the seed ids (the identity for no seeds)."""
    for v in seeds:
        if not 0 <= int(v) < group.order:
            raise IdOutOfRange(f"id {v} is not in [0, {group.order})")
    return Subgroup(group, _closure_members(group, seeds))


def right_coset(h: Subgroup, x: int) -> tuple[int, ...]:
    """Hx as a sorted id tuple."""
    h.group._check_id(x)
    table = h.group.table
    return tuple(sorted(int(table[k, x]) for k in h.members))


def conj_intersection(h: Subgroup, x: int) -> tuple[int, Subgroup]:
    """(m, H intersect x^{-1}Hx)."""
    g = h.group
    g._check_id(x)
    table = g.table
    xinv = g.inv[x]
    conjugates = {int(table[int(table[xinv, k]), x]) for k in h.members}
    inter = sorted(conjugates & h.member_set)
    return len(inter), Subgroup(g, inter)


def double_coset(h: Subgroup, x: int) -> tuple[int, ...]:
    """HxH as a sorted id tuple; x must lie outside H."""
    g = h.group
    g._check_id(x)
    if x in h.member_set:
        raise XInSubgroup(f"id {x} lies in the subgroup")
    table = g.table
    out = set()
    for k in h.members:
        kx = int(table[k, x])
        row = table[kx]
        for k2 in h.members:
            out.add(int(row[k2]))
    return tuple(sorted(out))


def involutions_in_coset(h: Subgroup, x: int) -> tuple[int, tuple[int, ...]]:
    """Count and list the involutions of the right coset Hx."""
    table = h.group.table
    coset = right_coset(h, x)
    found = tuple(y for y in coset if y != 0 and int(table[y, y]) == 0)
    return len(found), found


def inverse_closed_core(h: Subgroup, x: int) -> tuple[int, ...]:
    """Elements of Hx whose inverses stay in Hx; requires a self-paired block."""
    g = h.group
    dc = double_coset(h, x)  # raises XInSubgroup for x in H
    if g.inv[x] not in set(dc):
        raise NotSelfPaired(f"HxH and Hx^-1H differ at x = {x}")
    coset = right_coset(h, x)
    coset_set = set(coset)
    return tuple(y for y in coset if g.inv[y] in coset_set)


@dataclass(frozen=True)
class ClassBlock:
    """One block of the double-coset partition of G minus H.

    ``cosets`` holds the minimal-id representative of each right coset: the
    t cosets of HxH in increasing order, followed by the t cosets of
    Hx^{-1}H (again increasing) when the block is not self-paired. The two
    halves of a non-self-paired block pair up positionally.
    """

    subgroup: Subgroup
    rep_x: int
    self_paired: bool
    m: int
    t: int
    c: int
    d: int
    cosets: tuple[int, ...]

    @property
    def n_cosets(self) -> int:
        return len(self.cosets)

    def coset_members(self, k: int) -> tuple[int, ...]:
        return right_coset(self.subgroup, self.cosets[k])

    def element_ids(self) -> tuple[int, ...]:
        out: list[int] = []
        for rep in self.cosets:
            out.extend(right_coset(self.subgroup, rep))
        return tuple(sorted(out))

    def to_json(self) -> dict:
        return {
            "rep": self.rep_x,
            "self_paired": self.self_paired,
            "m": self.m,
            "t": self.t,
            "c": self.c,
            "d": self.d,
            "cosets": list(self.cosets),
        }


@dataclass(frozen=True)
class ClassDecomposition:
    """All blocks of G minus H, in increasing order of representative id."""

    subgroup: Subgroup
    blocks: tuple[ClassBlock, ...]


def _coset_reps(h: Subgroup, elements: tuple[int, ...]) -> list[int]:
    reps: list[int] = []
    placed: set[int] = set()
    for y in elements:  # already sorted, so each rep is its coset minimum
        if y in placed:
            continue
        reps.append(y)
        placed.update(right_coset(h, y))
    return reps


def class_decomposition(h: Subgroup) -> ClassDecomposition:
    """Partition G minus H into blocks and compute their parameters.

    Involution counts and core sizes are recomputed on every coset of each
    block and must agree; a disagreement would mean the table is corrupt,
    so it raises AssertionError rather than a domain error.
    """
    g = h.group
    if h.order == g.order:
        raise SubgroupNotProper("the subgroup is the whole group")
    if h.order == 1:
        raise SubgroupTrivial("the subgroup is trivial")

    table = g.table
    inv = g.inv
    seen = bytearray(g.order)
    for v in h.members:
        seen[v] = 1

    blocks: list[ClassBlock] = []
    for x in range(g.order):
        if seen[x]:
            continue
        m, _ = conj_intersection(h, x)
        if h.order % m:
            raise AssertionError(f"|H| = {h.order} not divisible by m = {m}")
        t = h.order // m
        dc = double_coset(h, x)
        self_paired = inv[x] in set(dc)
        reps = _coset_reps(h, dc)
        if len(reps) != t:
            raise AssertionError(f"expected {t} cosets in HxH, found {len(reps)}")
        block_elements: tuple[int, ...] = dc
        if not self_paired:
            dci = double_coset(h, inv[x])
            reps = reps + _coset_reps(h, dci)
            block_elements = dc + dci

        c = d = 0
        for k, rep in enumerate(reps):
            coset = right_coset(h, rep)
            coset_set = set(coset)
            invols = sum(1 for y in coset if y != 0 and int(table[y, y]) == 0)
            core = [y for y in coset if inv[y] in coset_set]
            if self_paired:
                if len(core) != m:
                    raise AssertionError(f"core size {len(core)} != m = {m} at coset {rep}")
                if k == 0:
                    c = invols
                    if (m - c) % 2:
                        raise AssertionError(f"core of coset {rep} has odd non-involution part")
                    d = (m - c) // 2
                elif invols != c:
                    raise AssertionError(f"involution count differs across cosets of block {x}")
            else:
                if invols or core:
                    raise AssertionError(f"non-self-paired block {x} has self-inverse content")

        for y in block_elements:
            seen[y] = 1
        blocks.append(
            ClassBlock(
                subgroup=h,
                rep_x=x,
                self_paired=self_paired,
                m=m,
                t=t,
                c=c,
                d=d,
                cosets=tuple(reps),
            )
        )

    covered = sum(b.n_cosets for b in blocks) * h.order + h.order
    if covered != g.order:
        raise AssertionError("blocks do not partition G minus H")
    return ClassDecomposition(subgroup=h, blocks=tuple(blocks))


def all_subgroups(group: GroupTable) -> list[Subgroup]:
    """Every subgroup, found by repeatedly closing one-element extensions.

    Returned sorted by (order, members); includes the trivial subgroup and
    the whole group.
    """
    trivial = (0,)
    found = {trivial}
    frontier = [trivial]
    while frontier:
        fresh = []
        for base in frontier:
            base_set = set(base)
            for x in range(1, group.order):
                if x in base_set:
                    continue
                closed = _closure_members(group, base_set | {x})
                if closed not in found:
                    found.add(closed)
                    fresh.append(closed)
        frontier = fresh
    return [Subgroup(group, mem) for mem in sorted(found, key=lambda m: (len(m), m))]


def load_subgroup_json(group: GroupTable, source: str | Path | dict) -> Subgroup:
    """Load a subgroup from JSON holding exactly one of 'members' or 'generators'."""
    if isinstance(source, dict):
        data = source
    else:
        try:
            data = json.loads(Path(source).read_text())
        except OSError as exc:
            raise InputFormatError(f"cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"invalid JSON in {source}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputFormatError("subgroup description must be a JSON object")
    has_members = "members" in data
    has_gens = "generators" in data
    if has_members == has_gens:
        raise InputFormatError("provide exactly one of 'members' or 'generators'")
    if has_members:
        return Subgroup(group, [int(v) for v in data["members"]])
    return subgroup_closure(group, [int(v) for v in data["generators"]])
