"""Finite groups as explicit multiplication tables over dense element ids.

Conventions used throughout the package:

* element ids are 0..n-1 and the identity is always id 0;
* permutations compose left to right: ``(p * q)(i) = q(p(i))``;
* ``table[i][j]`` is the id of ``x_i * x_j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyGeneratorSet,
    IdOutOfRange,
    InputFormatError,
    NotAGroup,
    OrderCapExceeded,
    UnknownCatalogName,
)

__all__ = [
    "ASSOC_FULL_CHECK_BOUND",
    "ORDER_CAP",
    "GroupTable",
    "Permutation",
    "catalog",
    "from_permutation_generators",
    "from_table",
    "load_group_json",
]

# Associativity is verified exhaustively up to this order; larger tables get
# a seeded random spot check of 10 n^2 triples instead.
ASSOC_FULL_CHECK_BOUND = 512
ORDER_CAP = 10_000

_SPOT_CHECK_SEED = 0
_SPOT_CHECK_FACTOR = 10
_SPOT_CHECK_CHUNK = 1_000_000


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..degree-1} stored as an image array."""

    degree: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if self.degree <= 0:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if len(images) != self.degree or sorted(images) != list(range(self.degree)):
            raise ValueError(f"{images!r} is not a permutation of 0..{self.degree - 1}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(degree, tuple(range(degree)))

    def compose(self, other: "Permutation") -> "Permutation":
        """self followed by other: ``(self * other)(i) = other(self(i))``."""
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(self.degree, tuple(other.images[v] for v in self.images))

    def inverse(self) -> "Permutation":
        out = [0] * self.degree
        for i, v in enumerate(self.images):
            out[v] = i
        return Permutation(self.degree, tuple(out))

    @property
    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images))


class GroupTable:
    """Immutable multiplication table of a finite group.

    The constructor verifies closure, that id 0 is a two-sided identity,
    that every element has a two-sided inverse, and associativity (see
    ``ASSOC_FULL_CHECK_BOUND``). ``table`` is a read-only int32 array;
    ``perm_images`` keeps one permutation realization per element when the
    group was built from generators, and is None otherwise.
    """

    __slots__ = ("order", "table", "inv", "name", "perm_images", "_image_index")

    def __init__(
        self,
        table: Sequence[Sequence[int]] | np.ndarray,
        *,
        name: str | None = None,
        perm_images: tuple[tuple[int, ...], ...] | None = None,
        assoc_bound: int = ASSOC_FULL_CHECK_BOUND,
    ):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotAGroup(f"table must be square and non-empty, got shape {arr.shape}")
        n = int(arr.shape[0])
        if arr.min() < 0 or arr.max() >= n:
            i, j = (int(v) for v in np.argwhere((arr < 0) | (arr >= n))[0])
            raise NotAGroup(f"closure violated: table[{i}][{j}] = {int(arr[i, j])} is not an id in [0, {n})")
        ids = np.arange(n)
        if not (np.array_equal(arr[0], ids) and np.array_equal(arr[:, 0], ids)):
            raise NotAGroup("id 0 is not a two-sided identity")
        right_ok = (arr == 0).any(axis=1)
        if not right_ok.all():
            raise NotAGroup(f"element {int(np.argmin(right_ok))} has no right inverse")
        inv = (arr == 0).argmax(axis=1)
        two_sided = arr[inv, ids] == 0
        if not two_sided.all():
            raise NotAGroup(f"element {int(np.argmin(two_sided))} has no two-sided inverse")
        _check_associativity(arr, n, assoc_bound)

        store = np.ascontiguousarray(arr.astype(np.int32))
        store.flags.writeable = False
        self.order = n
        self.table = store
        self.inv = tuple(int(v) for v in inv)
        self.name = name
        self.perm_images = perm_images
        self._image_index = None

    def multiply(self, i: int, j: int) -> int:
        """Return the id of x_i * x_j."""
        self._check_id(i)
        self._check_id(j)
        return int(self.table[i, j])

    def inverse_of(self, i: int) -> int:
        self._check_id(i)
        return self.inv[i]

    def elements(self) -> range:
        return range(self.order)

    def element_by_images(self, images: Sequence[int]) -> int:
        """Look up an element id by its permutation images (generator-built groups only)."""
        if self.perm_images is None:
            raise InputFormatError("group has no permutation realization")
        if self._image_index is None:
            self._image_index = {im: i for i, im in enumerate(self.perm_images)}
        key = tuple(int(v) for v in images)
        if key not in self._image_index:
            raise IdOutOfRange(f"no element with images {key!r}")
        return self._image_index[key]

    def _check_id(self, i: int) -> None:
        if not isinstance(i, (int, np.integer)) or not 0 <= i < self.order:
            raise IdOutOfRange(f"id {i!r} is not in [0, {self.order})")

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"GroupTable({label!r}, order={self.order})"


def _check_associativity(arr: np.ndarray, n: int, bound: int) -> None:
    if n <= bound:
        for i in range(n):
            left = arr[arr[i], :]
            right = arr[i][arr]
            if not np.array_equal(left, right):
                j, k = (int(v) for v in np.argwhere(left != right)[0])
                raise NotAGroup(
                    f"associativity fails at triple ({i}, {j}, {k})", triple=(i, j, k)
                )
        return
    rng = np.random.default_rng(_SPOT_CHECK_SEED)
    remaining = _SPOT_CHECK_FACTOR * n * n
    while remaining > 0:
        size = min(_SPOT_CHECK_CHUNK, remaining)
        i = rng.integers(0, n, size)
        j = rng.integers(0, n, size)
        k = rng.integers(0, n, size)
        bad = arr[arr[i, j], k] != arr[i, arr[j, k]]
        if bad.any():
            w = int(np.argmax(bad))
            triple = (int(i[w]), int(j[w]), int(k[w]))
            raise NotAGroup(f"associativity fails at triple {triple}", triple=triple)
        remaining -= size


def from_table(order: int, table: Sequence[Sequence[int]], *, name: str | None = None) -> GroupTable:
    """Build a GroupTable from a raw table, relabeling the identity to id 0.

    The identity is located by scanning for an index whose row and column
    act as the identity; if it sits at index e != 0 the labels 0 and e are
    swapped before construction.
    """
    if order > ORDER_CAP:
        raise OrderCapExceeded(f"order {order} exceeds the cap {ORDER_CAP}")
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] != order:
        raise NotAGroup(f"expected a {order}x{order} table, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= order):
        i, j = (int(v) for v in np.argwhere((arr < 0) | (arr >= order))[0])
        raise NotAGroup(f"closure violated: table[{i}][{j}] = {int(arr[i, j])} is not an id in [0, {order})")
    ids = np.arange(order)
    identity = None
    for e in range(order):
        if np.array_equal(arr[e], ids) and np.array_equal(arr[:, e], ids):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity element")
    if identity != 0:
        sigma = ids.copy()
        sigma[0], sigma[identity] = identity, 0
        arr = sigma[arr[sigma][:, sigma]]
    return GroupTable(arr, name=name)


def from_permutation_generators(
    degree: int,
    generators: Sequence[Permutation | Sequence[int]],
    *,
    order_cap: int = ORDER_CAP,
    name: str | None = None,
) -> GroupTable:
    """Enumerate the permutation group generated by ``generators``.

    Ids are assigned in discovery order: identity first, the distinct
    non-identity generators next in the given order, then breadth-first
    layers of right products, each layer sorted lexicographically by image
    array. The result is deterministic for a fixed input.
    """
    if not generators:
        raise EmptyGeneratorSet("at least one generator is required")
    perms = []
    for g in generators:
        p = g if isinstance(g, Permutation) else Permutation(degree, tuple(g))
        if p.degree != degree:
            raise ValueError(f"generator degree {p.degree} does not match {degree}")
        perms.append(p)

    ident = tuple(range(degree))
    elems: list[tuple[int, ...]] = [ident]
    index: dict[tuple[int, ...], int] = {ident: 0}
    for p in perms:
        if p.images not in index:
            index[p.images] = len(elems)
            elems.append(p.images)
    gen_images = [p.images for p in perms]

    frontier = list(range(1, len(elems)))
    while frontier:
        discovered = []
        for fi in frontier:
            fim = elems[fi]
            for gim in gen_images:
                prod = tuple(gim[v] for v in fim)
                if prod not in index:
                    index[prod] = -1  # claim now, number after the layer sort
                    discovered.append(prod)
        discovered.sort()
        start = len(elems)
        for off, prod in enumerate(discovered):
            index[prod] = start + off
        elems.extend(discovered)
        if len(elems) > order_cap:
            raise OrderCapExceeded(f"generated group exceeds the order cap {order_cap}")
        frontier = list(range(start, len(elems)))

    n = len(elems)
    img = np.array(elems, dtype=np.int32)
    row_id = {img[i].tobytes(): i for i in range(n)}
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        composed = img[:, img[i]]  # composed[j] = images of (x_i then x_j)
        table[i] = [row_id[composed[j].tobytes()] for j in range(n)]
    return GroupTable(table, name=name, perm_images=tuple(elems))


# ---------- catalog ----------

_Q8_LEFT_I = (1, 2, 3, 0, 6, 7, 5, 4)
_Q8_LEFT_J = (4, 7, 5, 6, 2, 0, 1, 3)


def _cycle(n: int) -> Permutation:
    return Permutation(n, tuple(list(range(1, n)) + [0]))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _catalog_factor(part: str) -> tuple[int, list[Permutation]]:
    family, _, arg = part.partition(":")
    if family == "cyclic":
        try:
            n = int(arg)
        except ValueError:
            raise UnknownCatalogName(f"bad cyclic order {arg!r} in {part!r}") from None
        if n < 2:
            raise UnknownCatalogName(f"cyclic:{n} rejected: order must be at least 2")
        return n, [_cycle(n)]
    if family == "dihedral":
        try:
            order = int(arg)
        except ValueError:
            raise UnknownCatalogName(f"bad dihedral order {arg!r} in {part!r}") from None
        if order < 6 or order % 2:
            raise UnknownCatalogName(f"dihedral:{order} rejected: order must be even and at least 6")
        n = order // 2
        reflection = Permutation(n, tuple((n - i) % n for i in range(n)))
        return n, [_cycle(n), reflection]
    if family == "symmetric":
        try:
            n = int(arg)
        except ValueError:
            raise UnknownCatalogName(f"bad symmetric degree {arg!r} in {part!r}") from None
        if n < 2:
            raise UnknownCatalogName(f"symmetric:{n} rejected: degree must be at least 2")
        swap = Permutation(n, tuple([1, 0] + list(range(2, n))))
        return n, [_cycle(n), swap]
    if family == "alternating":
        try:
            n = int(arg)
        except ValueError:
            raise UnknownCatalogName(f"bad alternating degree {arg!r} in {part!r}") from None
        if n < 3:
            raise UnknownCatalogName(f"alternating:{n} rejected: degree must be at least 3")
        three = Permutation(n, tuple([1, 2, 0] + list(range(3, n))))
        if n % 2:
            big = _cycle(n)
        else:
            big = Permutation(n, tuple([0] + list(range(2, n)) + [1]))
        return n, [three, big]
    if family == "quaternion":
        if arg != "8":
            raise UnknownCatalogName(f"quaternion:{arg} rejected: only quaternion:8 is defined")
        return 8, [Permutation(8, _Q8_LEFT_I), Permutation(8, _Q8_LEFT_J)]
    if family == "elementary-abelian":
        base, _, exp = arg.partition("^")
        try:
            p, k = int(base), int(exp)
        except ValueError:
            raise UnknownCatalogName(f"bad elementary-abelian shape {arg!r} in {part!r}") from None
        if not _is_prime(p) or k < 1:
            raise UnknownCatalogName(f"elementary-abelian:{arg} rejected: need a prime base and exponent >= 1")
        degree = p * k
        gens = []
        for block in range(k):
            images = list(range(degree))
            for i in range(p):
                images[block * p + i] = block * p + (i + 1) % p
            gens.append(Permutation(degree, tuple(images)))
        return degree, gens
    raise UnknownCatalogName(f"unknown catalog family {family!r} in {part!r}")


@lru_cache(maxsize=None)
def catalog(name: str) -> GroupTable:
    """Build a named group.

    Single factors: ``cyclic:n`` (n >= 2), ``dihedral:2n`` (even order
    >= 6), ``symmetric:n`` (n >= 2), ``alternating:n`` (n >= 3),
    ``quaternion:8``, ``elementary-abelian:p^k``. Direct products join
    factor names with ``x``, e.g. ``cyclic:2xcyclic:4``; factors act on
    disjoint points so the generated group is the direct product.
    """
    parts = name.split("x")
    if not all(parts):
        raise UnknownCatalogName(f"malformed catalog name {name!r}")
    factors = [_catalog_factor(part) for part in parts]
    if len(factors) == 1:
        degree, gens = factors[0]
        return from_permutation_generators(degree, gens, name=name)
    total = sum(d for d, _ in factors)
    gens: list[Permutation] = []
    offset = 0
    for d, factor_gens in factors:
        for p in factor_gens:
            images = list(range(total))
            for i, v in enumerate(p.images):
                images[offset + i] = offset + v
            gens.append(Permutation(total, tuple(images)))
        offset += d
    return from_permutation_generators(total, gens, name=name)


def load_group_json(source: str | Path | dict) -> GroupTable:
    """Load a group from a JSON file or an already-parsed dict.

    Exactly one of ``table`` (with ``order``) or ``permutation_generators``
    (with ``degree``) must be present; ``name`` is optional.
    """
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
        raise InputFormatError("group description must be a JSON object")
    has_table = "table" in data
    has_gens = "permutation_generators" in data
    if has_table == has_gens:
        raise InputFormatError("provide exactly one of 'table' or 'permutation_generators'")
    name = data.get("name")
    if has_table:
        if "order" not in data:
            raise InputFormatError("'table' descriptions require 'order'")
        return from_table(int(data["order"]), data["table"], name=name)
    if "degree" not in data:
        raise InputFormatError("'permutation_generators' descriptions require 'degree'")
    degree = int(data["degree"])
    gens = [Permutation(degree, tuple(int(v) for v in images)) for images in data["permutation_generators"]]
    return from_permutation_generators(degree, gens, name=name)
