"""Plain-Python reference implementation of the counting kernels."""

from __future__ import annotations

import numpy as np


def subset_neighbor_counts(table, s_ids, member_mask):
    """counts[v] = number of s in s_ids with table[s][v] inside the mask set.

    ``table`` is an n x n int32 array, ``s_ids`` int32 ids, ``member_mask``
    a uint8 indicator over ids. Returns an int64 array of length n.
    """
    rows = table.tolist()
    mask = member_mask.tolist()
    n = len(rows)
    counts = [0] * n
    for s in s_ids.tolist():
        row = rows[s]
        for v in range(n):
            if mask[row[v]]:
                counts[v] += 1
    return np.asarray(counts, dtype=np.int64)


def find_regular_mask(table, member_mask, orbit_offsets, orbit_elems, a, b, required_size):
    """Scan orbit-subset bitmasks in increasing order; return the first hit.

    Orbit k covers orbit_elems[orbit_offsets[k]:orbit_offsets[k+1]]. A mask
    hits when its union S has exactly ``required_size`` elements and every
    vertex v sees ``a`` (mask members) or ``b`` (the rest) neighbors of the
    form table[s][v] inside the mask set. Returns -1 when no mask hits.
    """
    rows = table.tolist()
    mask_list = member_mask.tolist()
    offs = orbit_offsets.tolist()
    elems = orbit_elems.tolist()
    n = len(rows)
    num_orbits = len(offs) - 1
    sizes = [offs[k + 1] - offs[k] for k in range(num_orbits)]
    orbit_lists = [elems[offs[k]:offs[k + 1]] for k in range(num_orbits)]
    expected = [a if mask_list[v] else b for v in range(n)]

    for mask in range(1 << num_orbits):
        size = 0
        for k in range(num_orbits):
            if mask >> k & 1:
                size += sizes[k]
        if size != required_size:
            continue
        selected = [s for k in range(num_orbits) if mask >> k & 1 for s in orbit_lists[k]]
        ok = True
        for v in range(n):
            count = 0
            for s in selected:
                if mask_list[rows[s][v]]:
                    count += 1
            if count != expected[v]:
                ok = False
                break
        if ok:
            return mask
    return -1
